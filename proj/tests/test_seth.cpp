#include "support.hpp"

#include "dynrefl/error.hpp"
#include "dynrefl/fixtures.hpp"
#include "dynrefl/reflection.hpp"

using namespace dynrefl;

namespace {

const char* const kExpectedDot[6][3] = {
    {"l2", "l4", "l3"}, {"l4", "l2", "l3"}, {"l3", "l4", "l2"},
    {"l2", "l3", "l4"}, {"l4", "l3", "l2"}, {"l3", "l2", "l4"},
};

}  // namespace

TEST_CASE("tensor action threads lambda through the factors") {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  const auto& H = *S.base().H;
  const auto& Y = *S.Y;
  const auto& L = S.base().P->L();
  // λ·(a,x) = (λa)·x, read off the quasigroup table and the expected X action.
  for (Index l = 0; l < 6; ++l)
    for (Index a = 0; a < 6; ++a)
      for (Index x = 0; x < 3; ++x) {
        Index la = L.mul(l, a);
        CHECK(H.label(Y.act(l, Y.flatten({a, x}))) == kExpectedDot[la][x]);
      }
  CHECK(Y.label(Y.flatten({H.index_of("l2"), 1})) == "(l2,x2)");
  CHECK(H.label(Y.act(H.index_of("l1"), Y.flatten({H.index_of("l2"), 1}))) == "l3");
}

TEST_CASE("unit object and unitors") {
  auto B = fixtures::zn3();
  CHECK(B.I->size() == 1);
  CHECK(B.I->label(0) == "•");
  for (Index l = 0; l < 3; ++l) CHECK(B.I->act(l, 0) == l);
  auto lu = left_unitor(B.L);
  auto ru = right_unitor(B.L);
  for (Index l = 0; l < 3; ++l)
    for (Index a = 0; a < 3; ++a) {
      CHECK(lu(l, a) == a);
      CHECK(ru(l, a) == a);
    }
  CHECK(validate_morphism(lu).passed);
}

TEST_CASE("tensor of morphisms is functorial") {
  auto ex = fixtures::ex89();
  const auto& S = ex.setting;
  auto k = k_from_family(S, ex.family);
  const auto& sigma = S.sigma.sigma;
  auto lhs = tensor(sigma, k) * tensor(sigma, k);
  auto rhs = tensor(sigma * sigma, k * k);
  CHECK(morphisms_equal(lhs, rhs).passed);
  auto idL = identity(S.base().L);
  CHECK(tensor(idL, identity(S.module.X)) == identity(S.Y));
  CHECK(identity(S.Y) * k == k);
  CHECK(k * identity(S.Y) == k);
}

TEST_CASE("associator is a morphism and the identity on flat indices") {
  auto B = fixtures::ex53();
  auto a = associator(B.L, B.L, B.L);
  CHECK(validate_morphism(a).passed);
  for (Index l = 0; l < 6; ++l)
    for (Index x = 0; x < 216; ++x) CHECK(a(l, x) == x);
}

TEST_CASE("morphism law catches a corrupted entry") {
  auto B = fixtures::ex53();
  auto sigma = build_sigma(B).sigma;
  CHECK(validate_morphism(sigma).passed);
  // σ(e)(l1,l2) = (l5,l5); send it to (l1,l1), which lands elsewhere under e.
  Index in = 1 * 6 + 2;
  auto bad = sigma.with_entry(0, in, 1 * 6 + 1);
  auto r = validate_morphism(bad);
  REQUIRE_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(r.witness->lambda == "e");
  CHECK(replay(morphism_law("morphism-law", bad), *r.witness));
}

TEST_CASE("mixing objects over different H is rejected") {
  auto a = fixtures::zn3();
  auto b = fixtures::zn3();
  bool threw = false;
  try {
    tensor(a.L, b.L);
  } catch (const Error& e) {
    threw = e.kind() == "MismatchedH";
  }
  CHECK(threw);
}
