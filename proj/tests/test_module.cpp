#include "support.hpp"

#include "dynrefl/correspondence.hpp"
#include "dynrefl/error.hpp"
#include "dynrefl/fixtures.hpp"
#include "dynrefl/reflection.hpp"

using namespace dynrefl;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("basic modules satisfy the module laws") {
  for (auto B : {fixtures::ex53(), fixtures::zn3()}) {
    auto M = build_monoid(B);
    CHECK(testing::failing(check_left_module_ids(M, left_regular(M))).empty());
    for (Index l1 = 0; l1 < B.n(); ++l1)
      CHECK(testing::failing(check_left_module_ids(M, one_point(B, l1))).empty());
  }
  auto ex = fixtures::ex89();
  CHECK(testing::failing(check_left_module_ids(ex.setting.monoid, ex.setting.module)).empty());
}

TEST_CASE("action module counts") {
  auto ex = fixtures::ex89();
  auto rs = check_left_module(ex.setting.monoid, ex.setting.module);
  for (const auto& r : rs) {
    CHECK(r.passed);
    if (r.check == "module-associativity") CHECK(r.tuples == 648);
  }
}

TEST_CASE("action module rejects a non-permutation row") {
  auto B = fixtures::ex53();
  std::vector<Index> act(18, 0);
  CHECK(kind_of([&] { from_action(B, Carrier({"x1", "x2", "x3"}), act, {2, 4, 3}); }) ==
        "ActionNotDivisible");
}

TEST_CASE("map alpha for the identity map is conjugation by pi(lambda)") {
  for (auto B : {fixtures::ex53(), fixtures::zn3()}) {
    const auto& P = *B.P;
    const auto& G = P.G();
    const Index n = static_cast<Index>(B.n());
    std::vector<Index> id(n);
    for (Index a = 0; a < n; ++a) id[a] = a;
    bool any_moved = false;
    for (Index l = 0; l < n; ++l) {
      auto alpha = map_alpha(B.ops(), l, id);
      for (Index a = 0; a < n; ++a) {
        Index conj = P.pi_inv(G.mul(G.mul(G.inv(P.pi(l)), P.pi(a)), P.pi(l)));
        CHECK(alpha[a] == conj);
        any_moved = any_moved || alpha[a] != a;
      }
    }
    // Only an abelian G leaves every element fixed.
    CHECK(any_moved == !G.is_abelian());
  }
}

TEST_CASE("map module on a small carrier") {
  auto B = fixtures::zn3();
  auto M = build_monoid(B);
  MapSelector c;
  c.kind = MapSelector::Kind::Constant;
  c.value = 1;
  MapSelector ev;
  ev.kind = MapSelector::Kind::Evaluate;
  ev.value = 2;
  for (const auto& g : {c, ev}) {
    auto mod = map_ll(B, g);
    CHECK(mod.X->size() == 27);
    CHECK(mod.X->label(0) == "[0,0,0]");
    CHECK(testing::failing(check_left_module_ids(M, mod)).empty());
  }
  CHECK(kind_of([] { map_ll(fixtures::ex53(), MapSelector{}); }) == "CarrierTooLarge");
  CHECK(decode_map(encode_map({2, 0, 1}, 3), 3) == std::vector<Index>{2, 0, 1});
}

TEST_CASE("both lifts to L⊗X are modules and braid-commute as required") {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  auto triv = lift_trivial(S);
  auto sig = lift_sigma(S);
  CHECK(testing::failing(module_identities("t-", S.monoid, triv)).empty());
  CHECK(testing::failing(module_identities("s-", S.monoid, sig)).empty());
  // Regression: on this fixture the trivial lift also braid-commutes with itself.
  CHECK(check_braid_commute(triv, triv, S.sigma.sigma).passed);
}

TEST_CASE("twisted monoid on L⊗L") {
  auto ex = fixtures::ex89();
  auto T = twisted_monoid(ex.setting);
  CHECK(T.AA->size() == 36);
  CHECK(testing::failing(twisted_monoid_identities(T)).empty());
}

TEST_CASE("theta and the action determine each other") {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  auto mY = my_from_family(S, ex.family);
  CHECK(testing::failing(action_identities(S, mY)).empty());
  auto theta = theta_of_checked(S, mY);
  CHECK(testing::failing(theta_identities(S, theta)).empty());
  CHECK(my_of_checked(S, theta) == mY);
}

TEST_CASE("checked conversions refuse a broken action") {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  auto mY = my_from_family(S, ex.family);
  Index y = mY(0, 5);
  auto bad = mY.with_entry(0, 5, (y + 1) % mY.target()->size());
  CHECK(kind_of([&] { theta_of_checked(S, bad); }) == "HypothesisViolated");
}
