#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dynrefl/correspondence.hpp"

namespace dynrefl {

/// k(λ)(a,x) = m_Y(λ)(a,(e,x))
SetHMorphism k_from_my(const ModuleSetting& S, const SetHMorphism& mY);
/// Same, after checking the module hypotheses on m_Y (HypothesisViolated).
SetHMorphism k_from_my_checked(const ModuleSetting& S, const SetHMorphism& mY);
/// k(λ)(a,x) = (p, m_X(λp)((λp)\(λa), x)), p = Π^λ_{m_X(λ)(a,x)}(a)
SetHMorphism k_from_family(const ModuleSetting& S, const HomFamily& F);

/// m_X k = m_X, and the two relations expressing k against m and m_X.
std::vector<Identity> boundary_identities(const ModuleSetting& S, const SetHMorphism& k);
/// (1⊗k)(σ⊗1)(1⊗k)(σ⊗1) = (σ⊗1)(1⊗k)(σ⊗1)(1⊗k), associators written out.
Identity reflection_equation(const ModuleSetting& S, const SetHMorphism& k);

bool lambda_constant(const SetHMorphism& f);

struct BraceAnalysis {
  std::vector<Index> star;  // a ∗ b = π⁻¹(π(a)π(b)), row-major
  bool is_group = false;
  std::optional<std::array<Index, 3>> associativity_witness;
  bool pi_unit = false;  // π(e) is the unit of G
  bool condition = false;  // a(b∗c) = (ab)∗a⁻¹∗(ac) for all a, b, c
  std::optional<std::array<Index, 3>> condition_witness;
  bool sigma_constant = false;
  /// Only meaningful when L is a group: (π(e)=e and σ constant) ⇔ condition.
  bool equivalence_holds = true;
  bool is_brace = false;
  /// When a brace: σ(a,b) = (a⁻¹∗(ab), ā'ab) with ā' the ·-inverse of a⁻¹∗(ab).
  std::optional<bool> closed_form_matches;
};
BraceAnalysis analyze_brace(const Base& B);

struct KConstancy {
  bool constant = false;    // k(λ) tables agree across λ
  bool condition = false;   // the pointwise criterion on the family
  bool equivalent = false;  // constant ⇔ condition
  std::optional<bool> closed_form_matches;
};
/// Requires a skew brace (NotABrace) and an action m_X that does not depend
/// on λ (ModuleDependsOnLambda).
KConstancy check_k_constant(const ModuleSetting& S, const SetHMorphism& k,
                            const HomFamily& F);

// Family builders.
HomFamily family_trivial(const FiniteGroup& G, std::size_t nx);
HomFamily family_identity(const FiniteGroup& G, std::size_t nx);
/// Throws InverseNeedsAbelian.
HomFamily family_inverse(const FiniteGroup& G, std::size_t nx);
/// f_x(a) = g_x⁻¹ a g_x
HomFamily family_inner(const FiniteGroup& G, const std::vector<Index>& g);
/// Throws NotAHomomorphism naming the offending x.
HomFamily family_explicit(const FiniteGroup& G, const Carrier& X,
                          std::vector<GroupEndomorphism> maps);
/// The family at position `index` of the lexicographic product End(G)^X.
HomFamily family_at(const std::vector<GroupEndomorphism>& ends, std::size_t nx,
                    std::uint64_t index);

}  // namespace dynrefl
