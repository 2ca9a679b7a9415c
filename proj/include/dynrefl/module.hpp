#pragma once

#include <string>
#include <vector>

#include "dynrefl/yang_baxter.hpp"

namespace dynrefl {

/// A left (L, m, η)-module: an object X with an action m_X: L⊗X → X.
struct LeftModule {
  std::string kind;
  ObjectRef X;
  SetHMorphism action;
};

LeftModule left_regular(const MonoidStructure& M);
/// X = {x}, λ ·_X x = λ1, m_X(λ)(a,x) = x.
LeftModule one_point(const Base& B, Index lambda1);
/// λ ·_X x = f(e\(λx)), m_X(λ)(a,x) = λ\((λa)x). act[a*|X|+x] = ax.
LeftModule from_action(const Base& B, Carrier X, const std::vector<Index>& act,
                       const std::vector<Index>& f);

/// Chooses λ ·_X f for the map-module from α_{λ,f}; any choice is allowed.
struct MapSelector {
  enum class Kind { Constant, Evaluate, Table } kind = Kind::Constant;
  Index value = 0;            // Constant: the H element; Evaluate: the point
  std::vector<Index> table;   // Table: one H element per map, in map order
};

/// X = Map(L,L), maps indexed by their image word read as base-n digits.
LeftModule map_ll(const Base& B, const MapSelector& g, std::size_t cap = 5);
/// α_{λ,f}(a) = π⁻¹(π(λ)⁻¹ π(λ f(λ\π⁻¹(π(a)π(λ)))))
std::vector<Index> map_alpha(const Ops& o, Index lambda, const std::vector<Index>& f);
std::vector<Index> decode_map(Index code, std::size_t n);
Index encode_map(const std::vector<Index>& f, std::size_t n);

/// Module axioms for an action of L on V (any object): unit law, associativity
/// and the morphism law. `prefix` namespaces the identity ids.
std::vector<Identity> module_identities(const std::string& prefix,
                                        const MonoidStructure& M,
                                        const SetHMorphism& action);
std::vector<Identity> check_left_module_ids(const MonoidStructure& M,
                                            const LeftModule& mod);
std::vector<CheckResult> check_left_module(const MonoidStructure& M,
                                           const LeftModule& mod);

/// Everything one module-level construction needs.
struct ModuleSetting {
  MonoidStructure monoid;
  DynamicalYBMap sigma;
  LeftModule module;
  ObjectRef Y;  // L⊗X

  const Base& base() const { return monoid.base; }
  Index mX(Index l, Index a, Index x) const {
    return module.action(l, static_cast<Index>(a * module.X->size() + x));
  }
  std::size_t x_size() const { return module.X->size(); }
};

ModuleSetting make_setting(const Base& B, LeftModule mod);

/// m_Y^triv = (m⊗1_X)
SetHMorphism lift_trivial(const ModuleSetting& S);
/// m_Y^σ = (1⊗m_X)(σ⊗1_X)
SetHMorphism lift_sigma(const ModuleSetting& S);

struct TwistedMonoid {
  ObjectRef AA;
  SetHMorphism m;    // (L⊗L)⊗(L⊗L) → L⊗L
  SetHMorphism eta;  // I → L⊗L
};
TwistedMonoid twisted_monoid(const ModuleSetting& S);
std::vector<Identity> twisted_monoid_identities(const TwistedMonoid& T);

/// m_V(1⊗m'_V) = m'_V(1⊗m_V)(σ⊗1_V)
Identity braid_commute(const std::string& id, const SetHMorphism& mV,
                       const SetHMorphism& mV2, const SetHMorphism& sigma);
CheckResult check_braid_commute(const SetHMorphism& mV, const SetHMorphism& mV2,
                                const SetHMorphism& sigma);

/// Conclusions an action m_Y on Y = L⊗X must satisfy: module axioms,
/// m_X m_Y = m_X(1⊗m_X), and braid-commutation with both lifts.
std::vector<Identity> action_identities(const ModuleSetting& S, const SetHMorphism& mY);

/// θ_Y = m_Y^triv(1⊗m_Y)
SetHMorphism theta_of(const ModuleSetting& S, const SetHMorphism& mY);
/// m_Y = θ((η⊗1)⊗1_Y)
SetHMorphism my_of(const ModuleSetting& S, const SetHMorphism& theta);
std::vector<Identity> theta_identities(const ModuleSetting& S, const SetHMorphism& theta);

/// Throws HypothesisViolated naming the first failed identity.
void require(const std::vector<Identity>& ids);
/// Checked variants of theta_of / my_of.
SetHMorphism theta_of_checked(const ModuleSetting& S, const SetHMorphism& mY);
SetHMorphism my_of_checked(const ModuleSetting& S, const SetHMorphism& theta);

}  // namespace dynrefl
