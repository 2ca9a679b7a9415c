#include "support.hpp"

#include "dynrefl/check.hpp"

using namespace dynrefl;

namespace {

// 80^3 points; fails wherever a*b + c is a multiple of 997.
Identity sparse_failure() {
  Identity I;
  I.id = "sparse";
  I.lambda_first = false;
  std::vector<std::string> labels;
  for (int i = 0; i < 80; ++i) labels.push_back("v" + std::to_string(i));
  I.axes = {{"a", labels}, {"b", labels}, {"c", labels}};
  I.holds = [](const Index* p) { return (p[0] * p[1] + p[2]) % 997 != 0 || p[0] < 20; };
  I.sides = [](const Index* p) {
    return std::pair{std::to_string(p[0] * p[1] + p[2]), std::string("not 0 mod 997")};
  };
  return I;
}

}  // namespace

TEST_CASE("least witness is the same for every worker count") {
  auto I = sparse_failure();
  // Lexicographically least failing point, found naively.
  std::vector<Index> least;
  for (Index a = 0; a < 80 && least.empty(); ++a)
    for (Index b = 0; b < 80 && least.empty(); ++b)
      for (Index c = 0; c < 80 && least.empty(); ++c)
        if (!I.holds(std::array{a, b, c}.data())) least = {a, b, c};
  REQUIRE_FALSE(least.empty());
  for (unsigned w : {1u, 2u, 3u, 8u}) {
    set_workers(w);
    auto r = run_check(I);
    CHECK_FALSE(r.passed);
    CHECK(r.tuples == 512000);
    REQUIRE(r.witness);
    CHECK(r.witness->point == least);
  }
  set_workers(0);
}

TEST_CASE("replay locates a witness by labels") {
  auto I = sparse_failure();
  auto r = run_check(I);
  REQUIRE(r.witness);
  Witness w;
  w.check = "sparse";
  w.inputs = r.witness->inputs;
  CHECK(replay(I, w));
  w.inputs = {"v0", "v0", "v1"};
  CHECK_FALSE(replay(I, w));
}

TEST_CASE("a passing identity reports its tuple count") {
  Identity I;
  I.id = "trivial";
  I.axes = {{"lambda", {"p", "q"}}, {"x", {"u", "v", "w"}}};
  I.holds = [](const Index*) { return true; };
  I.sides = [](const Index*) { return std::pair{std::string(), std::string()}; };
  auto r = run_check(I);
  CHECK(r.passed);
  CHECK(r.tuples == 6);
  CHECK_FALSE(r.witness);
}

TEST_CASE("facts carry their note") {
  auto r = fact("f", false, "because");
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->lhs == "because");
  auto ok = fact("g", true);
  CHECK(ok.passed);
}
