#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "dynrefl/module.hpp"

namespace dynrefl {

/// A set of arrows with source and target maps into H. When built as a fiber
/// product the arrow i is the composable pair parts[i].
struct Quiver {
  CarrierRef H;
  std::vector<Index> src, tgt;
  std::vector<std::string> labels;
  // Fiber-product structure (empty otherwise).
  std::shared_ptr<const Quiver> left, right;
  std::vector<std::pair<Index, Index>> parts;
  std::vector<Index> pair_index;  // left*|right| + right -> arrow, or npos

  static constexpr Index npos = static_cast<Index>(-1);
  std::size_t size() const { return src.size(); }
  Index find_pair(Index a, Index b) const { return pair_index[a * right->size() + b]; }
};
using QuiverRef = std::shared_ptr<const Quiver>;

struct QuiverMorphism {
  QuiverRef source, target;
  std::vector<Index> map;
  Index operator()(Index a) const { return map[a]; }
  bool operator==(const QuiverMorphism& o) const { return map == o.map; }
};

/// The unit quiver: arrows are H with identity source and target.
QuiverRef unit_quiver(const CarrierRef& H);
/// Q(X) = H×X with source λ and target λ·x; arrow (λ,x) has index λ*|X|+x.
QuiverRef q_object(const ObjectRef& X);
/// Q(f)(λ,x) = (λ, f(λ)(x)); source and target must be Q of f's ends.
QuiverMorphism q_morphism(const SetHMorphism& f, const QuiverRef& src, const QuiverRef& tgt);

/// Composable pairs (a,b) with tgt(a) = src(b), built by bucketing the right
/// factor by source.
QuiverRef fiber_product(const QuiverRef& A, const QuiverRef& B);
/// f ×_H g between existing fiber products.
QuiverMorphism fiber_product(const QuiverMorphism& f, const QuiverMorphism& g,
                             const QuiverRef& src, const QuiverRef& tgt);

QuiverMorphism identity(const QuiverRef& Q);
QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f);
inline QuiverMorphism operator*(const QuiverMorphism& g, const QuiverMorphism& f) {
  return compose(g, f);
}
/// (A×B)×C → A×(B×C)
QuiverMorphism associator(const QuiverRef& AB_C, const QuiverRef& A_BC);
QuiverMorphism associator_inverse(const QuiverRef& A_BC, const QuiverRef& AB_C);
/// H×Q → Q
QuiverMorphism left_unitor(const QuiverRef& HQ);

/// φ₂: Q(X)×Q(Y) → Q(X⊗Y), ((λ,x),(κ,y)) ↦ (λ,(x,y))
QuiverMorphism phi2(const QuiverRef& QXQY, const QuiverRef& QXY, std::size_t ny);
QuiverMorphism phi2_inverse(const QuiverRef& QXY, const QuiverRef& QXQY, std::size_t ny);
/// φ₀: H → Q(I), λ ↦ (λ,•)
QuiverMorphism phi0(const QuiverRef& Hq, const QuiverRef& QI);

/// Arrow-wise equation, one axis over the source arrows.
Identity quiver_equation(const std::string& id, const QuiverMorphism& lhs,
                         const QuiverMorphism& rhs);
/// src and tgt preserved at every arrow.
Identity quiver_morphism_law(const std::string& id, const QuiverMorphism& f);

/// The lifted σ̃ and k̃ together with the quivers they live on.
struct QuiverLift {
  QuiverRef QL, QX, QLL, QLX;  // Q(L), Q(X), Q(L)×Q(L), Q(L)×Q(X)
  // Triple products in both bracketings, named by their outer split.
  QuiverRef QLL_L, QL_LL, QLL_X, QL_LX;
  QuiverMorphism sigma, k;
};

/// f̃ = φ₂⁻¹ Q(f) φ₂ for an endomorphism f of X⊗Y.
QuiverMorphism lift_solution(const SetHMorphism& f, const QuiverRef& QXQY);
QuiverLift lift_setting(const ModuleSetting& S, const SetHMorphism& k);

/// Functoriality, φ₂ naturality, the unit coherence triangle, src/tgt
/// preservation, the braid relation for σ̃ and the reflection equation.
std::vector<Identity> quiver_identities(const ModuleSetting& S, const SetHMorphism& k);

}  // namespace dynrefl
