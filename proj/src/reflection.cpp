#include "dynrefl/reflection.hpp"

namespace dynrefl {

SetHMorphism k_from_my(const ModuleSetting& S, const SetHMorphism& mY) {
  const Index nx = static_cast<Index>(S.x_size());
  const Index e = S.base().P->e();
  const Index n = static_cast<Index>(S.base().n());
  return SetHMorphism::from_function(S.Y, S.Y, [&](Index l, Index ax) {
    Index a = ax / nx, x = ax % nx;
    return mY(l, (a * n + e) * nx + x);
  });
}

SetHMorphism k_from_my_checked(const ModuleSetting& S, const SetHMorphism& mY) {
  require(action_identities(S, mY));
  return k_from_my(S, mY);
}

SetHMorphism k_from_family(const ModuleSetting& S, const HomFamily& F) {
  const Ops o = S.base().ops();
  const Index nx = static_cast<Index>(S.x_size());
  auto Pi = pi_from_family(S, F);
  return SetHMorphism::from_function(S.Y, S.Y, [&](Index l, Index ax) {
    Index a = ax / nx, x = ax % nx;
    Index p = Pi(l, S.mX(l, a, x), a);
    Index lp = o.mul(l, p);
    return p * nx + S.mX(lp, o.ldiv(lp, o.mul(l, a)), x);
  });
}

std::vector<Identity> boundary_identities(const ModuleSetting& S, const SetHMorphism& k) {
  const auto& B = S.base();
  auto one = identity(B.L);
  auto oneX = identity(S.module.X);
  const auto& mX = S.module.action;
  const auto& m = S.monoid.m;
  auto s1 = tensor(S.sigma.sigma, oneX);
  auto k2 = tensor(one, k);
  std::vector<Identity> out;
  out.push_back(equation("boundary-mX-k", mX * k, mX));
  out.push_back(equation("boundary-m", k * tensor(m, oneX), tensor(m, oneX) * k2 * s1 * k2));
  out.push_back(equation("boundary-mX", k * tensor(one, mX),
                         tensor(one, mX) * s1 * k2 * s1));
  out.push_back(morphism_law("k-morphism-law", k));
  return out;
}

Identity reflection_equation(const ModuleSetting& S, const SetHMorphism& k) {
  const auto& B = S.base();
  const auto& L = B.L;
  const auto& X = S.module.X;
  auto a = associator(L, L, X);
  auto ai = rebracket(tensor(L, tensor(L, X)), tensor(tensor(L, L), X));
  auto s1 = tensor(S.sigma.sigma, identity(X));
  auto k2 = tensor(identity(L), k);
  auto lhs = ai * k2 * a * s1 * ai * k2 * a * s1;
  auto rhs = s1 * ai * k2 * a * s1 * ai * k2 * a;
  return equation("reflection-equation", lhs, rhs);
}

bool lambda_constant(const SetHMorphism& f) {
  const std::size_t ns = f.source()->size();
  for (Index l = 1; l < f.source()->h_size(); ++l)
    for (Index x = 0; x < ns; ++x)
      if (f(l, x) != f(0, x)) return false;
  return true;
}

BraceAnalysis analyze_brace(const Base& B) {
  const Ops o = B.ops();
  const Index n = static_cast<Index>(B.n());
  const auto& P = *B.P;
  BraceAnalysis r;
  r.star.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) r.star[a * n + b] = o.star(a, b);
  r.associativity_witness = P.L().associativity_witness();
  r.is_group = !r.associativity_witness;
  r.pi_unit = P.pi(P.e()) == P.G().unit();

  r.condition = true;
  for (Index a = 0; a < n && r.condition; ++a)
    for (Index b = 0; b < n && r.condition; ++b)
      for (Index c = 0; c < n && r.condition; ++c) {
        Index lhs = o.mul(a, o.star(b, c));
        Index rhs = o.star(o.star(o.mul(a, b), o.star_inverse(a)), o.mul(a, c));
        if (lhs != rhs) {
          r.condition = false;
          r.condition_witness = std::array{a, b, c};
        }
      }

  auto sigma = build_sigma(B).sigma;
  r.sigma_constant = lambda_constant(sigma);
  if (r.is_group) r.equivalence_holds = (r.pi_unit && r.sigma_constant) == r.condition;
  r.is_brace = r.is_group && r.condition;

  if (r.is_brace) {
    bool ok = true;
    for (Index l = 0; l < n && ok; ++l)
      for (Index a = 0; a < n && ok; ++a)
        for (Index b = 0; b < n && ok; ++b) {
          Index ab = o.mul(a, b);
          Index first = o.star(o.star_inverse(a), ab);
          Index bar = o.ldiv(first, o.e());
          Index second = o.mul(o.mul(bar, a), b);
          ok = sigma(l, a * n + b) == first * n + second;
        }
    r.closed_form_matches = ok;
  }
  return r;
}

KConstancy check_k_constant(const ModuleSetting& S, const SetHMorphism& k,
                            const HomFamily& F) {
  const auto& B = S.base();
  auto br = analyze_brace(B);
  if (!br.is_brace) throw Error("NotABrace", "L with ∗ is not a skew left brace");
  if (!lambda_constant(S.module.action))
    throw Error("ModuleDependsOnLambda", "the action m_X depends on the parameter");
  const Ops o = B.ops();
  const Index n = static_cast<Index>(B.n());
  const Index nx = static_cast<Index>(S.x_size());
  const Index e = o.e();
  auto act = [&](Index a, Index x) { return S.mX(e, a, x); };
  auto f = [&](Index x, Index g) { return F.maps[x].map[g]; };

  KConstancy r;
  r.constant = lambda_constant(k);
  r.condition = true;
  for (Index l = 0; l < n && r.condition; ++l)
    for (Index a = 0; a < n && r.condition; ++a)
      for (Index x = 0; x < nx && r.condition; ++x) {
        Index ax = act(a, x), lax = act(l, ax);
        Index lhs = o.gmul(o.pi(l), f(lax, o.pi(o.mul(l, a))));
        Index rhs = o.gmul(o.pi(o.mul(l, o.pinv(f(ax, o.pi(a))))), f(lax, o.pi(l)));
        r.condition = lhs == rhs;
      }
  r.equivalent = r.constant == r.condition;
  if (r.constant && r.condition) {
    bool ok = true;
    for (Index l = 0; l < n && ok; ++l)
      for (Index a = 0; a < n && ok; ++a)
        for (Index x = 0; x < nx && ok; ++x) {
          Index p = o.pinv(f(act(a, x), o.pi(a)));
          Index bar = o.ldiv(p, e);
          ok = k(l, a * nx + x) == p * nx + act(o.mul(bar, a), x);
        }
    r.closed_form_matches = ok;
  }
  return r;
}

HomFamily family_trivial(const FiniteGroup& G, std::size_t nx) {
  return {std::vector<GroupEndomorphism>(nx, {std::vector<Index>(G.size(), G.unit())})};
}

HomFamily family_identity(const FiniteGroup& G, std::size_t nx) {
  GroupEndomorphism id;
  for (Index a = 0; a < G.size(); ++a) id.map.push_back(a);
  return {std::vector<GroupEndomorphism>(nx, id)};
}

HomFamily family_inverse(const FiniteGroup& G, std::size_t nx) {
  if (!G.is_abelian())
    throw Error("InverseNeedsAbelian", "a -> a^-1 is a homomorphism only for abelian G");
  GroupEndomorphism inv;
  for (Index a = 0; a < G.size(); ++a) inv.map.push_back(G.inv(a));
  return {std::vector<GroupEndomorphism>(nx, inv)};
}

HomFamily family_inner(const FiniteGroup& G, const std::vector<Index>& g) {
  HomFamily F;
  for (Index gx : g) {
    GroupEndomorphism c;
    for (Index a = 0; a < G.size(); ++a) c.map.push_back(G.mul(G.mul(G.inv(gx), a), gx));
    F.maps.push_back(std::move(c));
  }
  return F;
}

HomFamily family_explicit(const FiniteGroup& G, const Carrier& X,
                          std::vector<GroupEndomorphism> maps) {
  if (maps.size() != X.size())
    throw Error("SizeMismatch", "family needs one endomorphism per element of X");
  for (Index x = 0; x < maps.size(); ++x) {
    try {
      validate_endomorphism(G, maps[x]);
    } catch (const Error& err) {
      throw Error("NotAHomomorphism",
                  "member '" + X.label(x) + "' is not a homomorphism: " + err.what(),
                  {X.label(x)});
    }
  }
  return {std::move(maps)};
}

HomFamily family_at(const std::vector<GroupEndomorphism>& ends, std::size_t nx,
                    std::uint64_t index) {
  HomFamily F;
  F.maps.resize(nx);
  for (std::size_t x = nx; x-- > 0;) {
    F.maps[x] = ends[index % ends.size()];
    index /= ends.size();
  }
  return F;
}

}  // namespace dynrefl
