#pragma once

#include <vector>

#include "dynrefl/check.hpp"
#include "dynrefl/formulas.hpp"
#include "dynrefl/seth.hpp"

namespace dynrefl {

/// The paired structure together with the objects every construction
/// shares: H (= the carrier of L), the unit object and L itself with
/// λ ·_L a = λa.
struct Base {
  PairedRef P;
  CarrierRef H;
  ObjectRef I;
  ObjectRef L;

  Ops ops() const { return Ops(*P); }
  std::size_t n() const { return P->size(); }
};

Base make_base(PairedStructure P);

struct MonoidStructure {
  Base base;
  SetHMorphism m;    // L⊗L → L
  SetHMorphism eta;  // I → L
};

struct DynamicalYBMap {
  Base base;
  SetHMorphism sigma;  // L⊗L → L⊗L
};

DynamicalYBMap build_sigma(const Base& B);
DynamicalYBMap sigma_inverse(const DynamicalYBMap& S);
MonoidStructure build_monoid(const Base& B);

/// (σ⊗1)(1⊗σ)(σ⊗1) = (1⊗σ)(σ⊗1)(1⊗σ)
Identity braid_relation(const SetHMorphism& sigma);
CheckResult check_braid_relation(const SetHMorphism& sigma);

/// For every (λ, x): x is the least preimage of f(λ)(x). Holds everywhere
/// iff each f(λ) is injective.
Identity injectivity(const std::string& id, const SetHMorphism& f);

/// Unit laws, associativity, the four braided-monoid laws, mσ = m,
/// injectivity of b ↦ m(λ)(a,b), bijectivity of σ and the morphism laws.
std::vector<Identity> braided_monoid_identities(const MonoidStructure& M,
                                                const SetHMorphism& sigma);
std::vector<CheckResult> check_braided_monoid(const MonoidStructure& M,
                                              const SetHMorphism& sigma);

std::vector<CheckResult> run_all(const std::vector<Identity>& ids);
bool all_passed(const std::vector<CheckResult>& rs);

}  // namespace dynrefl
