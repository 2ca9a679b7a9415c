#pragma once

#include <utility>

#include "dynrefl/algebra.hpp"

namespace dynrefl {

/// Element-level formulas over a paired structure (L, G, π). Everything is
/// an index computation; no tables are built here.
class Ops {
 public:
  explicit Ops(const PairedStructure& P) : P_(P), G_(P.G()) {}

  Index mul(Index a, Index b) const { return P_.mul(a, b); }
  Index ldiv(Index a, Index c) const { return P_.ldiv(a, c); }
  Index e() const { return P_.e(); }
  Index pi(Index a) const { return P_.pi(a); }
  Index pinv(Index g) const { return P_.pi_inv(g); }
  Index gmul(Index g, Index h) const { return G_.mul(g, h); }
  Index ginv(Index g) const { return G_.inv(g); }
  template <class... T>
  Index gmul(Index g, Index h, T... rest) const {
    return gmul(gmul(g, h), rest...);
  }

  /// λ\((λa)b)
  Index m(Index l, Index a, Index b) const { return ldiv(l, mul(mul(l, a), b)); }

  /// First component of σ(λ)(a,b).
  Index xi(Index l, Index a, Index b) const {
    Index la = mul(l, a);
    return ldiv(l, pinv(G_.mu1(pi(l), pi(la), pi(mul(la, b)))));
  }
  /// Second component of σ(λ)(a,b).
  Index eta(Index l, Index a, Index b) const {
    return ldiv(mul(l, xi(l, a, b)), mul(mul(l, a), b));
  }
  std::pair<Index, Index> sigma(Index l, Index a, Index b) const {
    return {xi(l, a, b), eta(l, a, b)};
  }
  std::pair<Index, Index> sigma_inverse(Index l, Index a, Index b) const {
    Index la = mul(l, a), lab = mul(la, b);
    Index c = pinv(gmul(pi(lab), ginv(pi(la)), pi(l)));
    return {ldiv(l, c), ldiv(c, lab)};
  }

  /// The group law a ·_λ b on L.
  Index dot(Index l, Index a, Index b) const {
    return ldiv(l, pinv(G_.mu1(pi(mul(l, a)), pi(l), pi(mul(l, b)))));
  }
  /// Inverse of a for ·_λ.
  Index dot_inverse(Index l, Index a) const {
    return ldiv(l, pinv(G_.mu1(pi(l), pi(mul(l, a)), pi(l))));
  }
  /// ρ^λ_b(a)
  Index rho(Index l, Index b, Index a) const {
    Index lb = mul(l, b);
    return ldiv(l, pinv(G_.mu1(pi(mul(lb, a)), pi(lb), pi(l))));
  }
  /// ι^λ(a) = (a, (λa)\λ)
  std::pair<Index, Index> iota(Index l, Index a) const {
    return {a, ldiv(mul(l, a), l)};
  }

  /// a ∗ b = π⁻¹(π(a)π(b))
  Index star(Index a, Index b) const { return pinv(gmul(pi(a), pi(b))); }
  Index star_inverse(Index a) const { return pinv(ginv(pi(a))); }

  const PairedStructure& paired() const { return P_; }

 private:
  const PairedStructure& P_;
  const FiniteGroup& G_;
};

}  // namespace dynrefl
