#include "dynrefl/correspondence.hpp"

namespace dynrefl {

namespace {

using Pair = std::pair<Index, Index>;

std::vector<Axis> table_axes(const ModuleSetting& S, std::size_t letters) {
  const auto& H = S.base().H->labels();
  std::vector<Axis> axes{{"lambda", H}, {"x", S.module.X->factors()[0]->carrier.labels()}};
  const char* names[] = {"a", "b", "c"};
  for (std::size_t i = 0; i < letters; ++i) axes.push_back({names[i], H});
  return axes;
}

/// An identity between two L-valued expressions.
Identity element_identity(std::string id, std::vector<Axis> axes,
                          std::function<Pair(const Index*)> f, CarrierRef labels,
                          bool lambda_first = true) {
  Identity I;
  I.id = std::move(id);
  I.axes = std::move(axes);
  I.lambda_first = lambda_first;
  I.holds = [f](const Index* p) {
    auto [l, r] = f(p);
    return l == r;
  };
  I.sides = [f, labels](const Index* p) {
    auto [l, r] = f(p);
    return std::pair{labels->label(l), labels->label(r)};
  };
  return I;
}

}  // namespace

std::string layer_name(const Layer& l) {
  static const char* names[] = {"family", "Pi", "beta", "bracket", "theta", "mY"};
  return names[l.index()];
}

std::vector<Identity> family_identities(const ModuleSetting& S, const HomFamily& F) {
  const auto& G = S.base().P->G();
  const auto& X = S.module.X->factors()[0]->carrier;
  if (F.maps.size() != X.size())
    throw Error("SizeMismatch", "family needs one endomorphism per element of X");
  for (const auto& f : F.maps)
    if (f.map.size() != G.size()) throw Error("SizeMismatch", "endomorphism is not total");
  auto Gl = std::make_shared<const Carrier>(G.carrier());
  auto Fp = std::make_shared<HomFamily>(F);
  auto P = S.base().P;
  std::vector<Axis> axes{{"x", X.labels()}, {"g", Gl->labels()}, {"h", Gl->labels()}};
  return {element_identity(
      "homomorphism", axes,
      [Fp, P](const Index* p) {
        const auto& G = P->G();
        const auto& f = Fp->maps[p[0]].map;
        return Pair{f[G.mul(p[1], p[2])], G.mul(f[p[1]], f[p[2]])};
      },
      Gl, false)};
}

std::vector<Identity> pi_identities(const ModuleSetting& S, const PiTable& T) {
  auto P = S.base().P;
  auto t = std::make_shared<PiTable>(T);
  auto act = std::make_shared<SetHMorphism>(S.module.action);
  const Index nx = static_cast<Index>(S.x_size());
  std::vector<Identity> out;
  out.push_back(element_identity(
      "Pi-homomorphism", table_axes(S, 2),
      [P, t](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3];
        return Pair{(*t)(l, x, o.dot(l, a, b)), o.dot(l, (*t)(l, x, a), (*t)(l, x, b))};
      },
      S.base().H));
  out.push_back(element_identity(
      "Pi-shift", table_axes(S, 2),
      [P, t, act, nx](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3];
        Index la = o.mul(l, a);
        Index x2 = (*act)(la, o.ldiv(la, l) * nx + x);
        Index rhs = o.ldiv(l, o.pinv(o.gmul(o.pi(l), o.ginv(o.pi(la)),
                                            o.pi(o.mul(la, (*t)(la, x2, b))),
                                            o.ginv(o.pi(l)),
                                            o.pi(o.mul(l, (*t)(l, x, a))))));
        return Pair{(*t)(l, x, o.m(l, a, b)), rhs};
      },
      S.base().H));
  return out;
}

std::vector<Identity> beta_identities(const ModuleSetting& S, const BetaTable& T) {
  auto P = S.base().P;
  auto t = std::make_shared<BetaTable>(T);
  auto act = std::make_shared<SetHMorphism>(S.module.action);
  const Index nx = static_cast<Index>(S.x_size());
  std::vector<Identity> out;
  out.push_back(element_identity(
      "beta-product", table_axes(S, 2),
      [P, t](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3];
        Index pla = o.pi(o.mul(l, a));
        Index rhs = o.ldiv(l, o.pinv(o.gmul(pla, o.ginv(o.pi(l)),
                                            o.pi(o.mul(l, (*t)(l, x, b))), o.ginv(pla),
                                            o.pi(o.mul(l, (*t)(l, x, a))))));
        return Pair{(*t)(l, x, o.dot(l, a, b)), rhs};
      },
      S.base().H));
  out.push_back(element_identity(
      "beta-shift", table_axes(S, 2),
      [P, t, act, nx](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3];
        Index lb = o.mul(l, b), back = o.ldiv(lb, l);
        Index x3 = (*act)(lb, back * nx + x);
        Index lhs = o.mul(lb, (*t)(lb, x3, o.rho(lb, back, a)));
        Index pla = o.pi(o.mul(l, a));
        Index rhs = o.pinv(o.gmul(pla, o.ginv(o.pi(l)), o.pi(lb), o.ginv(pla),
                                  o.pi(o.mul(l, (*t)(l, x, a)))));
        return Pair{lhs, rhs};
      },
      S.base().H));
  return out;
}

std::vector<Identity> bracket_identities(const ModuleSetting& S, const BracketTable& T) {
  auto P = S.base().P;
  auto t = std::make_shared<BracketTable>(T);
  auto act = std::make_shared<SetHMorphism>(S.module.action);
  const Index nx = static_cast<Index>(S.x_size());
  std::vector<Identity> out;
  out.push_back(element_identity(
      "bracket-product", table_axes(S, 3),
      [P, t](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3], c = p[4];
        return Pair{(*t)(l, x, o.dot(l, a, b), c), (*t)(l, x, a, (*t)(l, x, b, c))};
      },
      S.base().H));
  out.push_back(element_identity(
      "bracket-unit", table_axes(S, 1),
      [P, t](const Index* p) {
        return Pair{(*t)(p[0], p[1], P->e(), p[2]), p[2]};
      },
      S.base().H));
  out.push_back(element_identity(
      "bracket-shift", table_axes(S, 3),
      [P, t, act, nx](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3], c = p[4];
        Index lb = o.mul(l, b);
        Index lhs = o.ldiv(l, o.mul(lb, (*t)(lb, x, a, c)));
        Index rhs = (*t)(l, (*act)(l, b * nx + x), o.rho(l, b, a), o.m(l, b, c));
        return Pair{lhs, rhs};
      },
      S.base().H));
  out.push_back(element_identity(
      "bracket-braid-commute", table_axes(S, 3),
      [P, t](const Index* p) {
        Ops o(*P);
        Index l = p[0], x = p[1], a = p[2], b = p[3], c = p[4];
        Index pla = o.pi(o.mul(l, a));
        Index rhs = o.ldiv(l, o.pinv(o.gmul(pla, o.ginv(o.pi(l)), o.pi(o.mul(l, b)),
                                            o.ginv(pla),
                                            o.pi(o.mul(l, (*t)(l, x, a, c))))));
        return Pair{(*t)(l, x, a, o.dot(l, b, c)), rhs};
      },
      S.base().H));
  return out;
}

std::vector<Identity> layer_identities(const ModuleSetting& S, const Layer& l) {
  return std::visit(
      [&](const auto& v) -> std::vector<Identity> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HomFamily>) return family_identities(S, v);
        else if constexpr (std::is_same_v<T, PiTable>) return pi_identities(S, v);
        else if constexpr (std::is_same_v<T, BetaTable>) return beta_identities(S, v);
        else if constexpr (std::is_same_v<T, BracketTable>) return bracket_identities(S, v);
        else if constexpr (std::is_same_v<T, ThetaAction>) return theta_identities(S, v.theta);
        else return action_identities(S, v.mY);
      },
      l);
}

namespace {

template <class T>
T blank3(const ModuleSetting& S) {
  T t;
  t.n = S.base().n();
  t.nx = S.x_size();
  t.v.assign(t.n * t.n * t.nx, 0);
  return t;
}

BracketTable blank4(const ModuleSetting& S) {
  BracketTable t;
  t.n = S.base().n();
  t.nx = S.x_size();
  t.v.assign(t.n * t.n * t.n * t.nx, 0);
  return t;
}

/// Index of the family member used at (λ, x): m_X(λ₀)(λ₀\λ, x).
Index family_slot(const ModuleSetting& S, const Ops& o, Index l, Index x) {
  Index l0 = o.paired().lambda0();
  return S.mX(l0, o.ldiv(l0, l), x);
}

}  // namespace

PiTable pi_from_family(const ModuleSetting& S, const HomFamily& F) {
  const Ops o = S.base().ops();
  auto t = blank3<PiTable>(S);
  for (Index l = 0; l < t.n; ++l)
    for (Index x = 0; x < t.nx; ++x) {
      const auto& f = F.maps[family_slot(S, o, l, x)].map;
      for (Index a = 0; a < t.n; ++a)
        t.at(l, x, a) = o.ldiv(l, o.pinv(o.gmul(o.pi(l), f[o.pi(o.mul(l, a))],
                                                o.ginv(f[o.pi(l)]))));
    }
  return t;
}

HomFamily family_from_pi(const ModuleSetting& S, const PiTable& P) {
  const Ops o = S.base().ops();
  const Index l0 = o.paired().lambda0();
  HomFamily F;
  for (Index x = 0; x < P.nx; ++x) {
    GroupEndomorphism f;
    for (Index g = 0; g < P.n; ++g)
      f.map.push_back(o.pi(o.mul(l0, P(l0, x, o.ldiv(l0, o.pinv(g))))));
    F.maps.push_back(std::move(f));
  }
  return F;
}

BetaTable beta_from_pi(const ModuleSetting& S, const PiTable& P) {
  const Ops o = S.base().ops();
  auto t = blank3<BetaTable>(S);
  for (Index l = 0; l < t.n; ++l)
    for (Index x = 0; x < t.nx; ++x)
      for (Index a = 0; a < t.n; ++a)
        t.at(l, x, a) = o.ldiv(l, o.pinv(o.gmul(o.pi(o.mul(l, a)),
                                                o.ginv(o.pi(o.mul(l, P(l, x, a)))),
                                                o.pi(l))));
  return t;
}

PiTable pi_from_beta(const ModuleSetting& S, const BetaTable& B) {
  const Ops o = S.base().ops();
  auto t = blank3<PiTable>(S);
  for (Index l = 0; l < t.n; ++l)
    for (Index x = 0; x < t.nx; ++x)
      for (Index a = 0; a < t.n; ++a)
        t.at(l, x, a) = o.ldiv(l, o.pinv(o.gmul(o.pi(l),
                                                o.ginv(o.pi(o.mul(l, B(l, x, a)))),
                                                o.pi(o.mul(l, a)))));
  return t;
}

BracketTable bracket_from_beta(const ModuleSetting& S, const BetaTable& B) {
  const Ops o = S.base().ops();
  auto t = blank4(S);
  for (Index l = 0; l < t.n; ++l)
    for (Index x = 0; x < t.nx; ++x)
      for (Index a = 0; a < t.n; ++a) {
        Index pla = o.pi(o.mul(l, a));
        Index tail = o.gmul(o.ginv(pla), o.pi(o.mul(l, B(l, x, a))));
        for (Index b = 0; b < t.n; ++b)
          t.at(l, x, a, b) = o.ldiv(
              l, o.pinv(o.gmul(pla, o.ginv(o.pi(l)), o.pi(o.mul(l, b)), tail)));
      }
  return t;
}

BetaTable beta_from_bracket(const ModuleSetting& S, const BracketTable& T) {
  auto t = blank3<BetaTable>(S);
  const Index e = S.base().P->e();
  for (Index l = 0; l < t.n; ++l)
    for (Index x = 0; x < t.nx; ++x)
      for (Index a = 0; a < t.n; ++a) t.at(l, x, a) = T(l, x, a, e);
  return t;
}

SetHMorphism theta_from_bracket(const ModuleSetting& S, const BracketTable& T) {
  const Ops o = S.base().ops();
  const Index n = static_cast<Index>(S.base().n());
  const Index nx = static_cast<Index>(S.x_size());
  const auto& B = S.base();
  auto src = tensor(tensor(B.L, B.L), S.Y);
  return SetHMorphism::from_function(src, S.Y, [&](Index l, Index flat) {
    Index x = flat % nx;
    flat /= nx;
    Index c = flat % n;
    flat /= n;
    Index b = flat % n, a = flat / n;
    Index la = o.mul(l, a), lab = o.mul(la, b);
    Index xc = S.mX(lab, c, x);
    Index d = o.mul(lab, T(lab, xc, o.ldiv(lab, la), c));
    return o.ldiv(l, d) * nx + S.mX(d, o.ldiv(d, lab), xc);
  });
}

BracketTable bracket_from_theta(const ModuleSetting& S, const SetHMorphism& theta) {
  const Ops o = S.base().ops();
  const Index nx = static_cast<Index>(S.x_size());
  auto t = blank4(S);
  const Index n = static_cast<Index>(t.n);
  for (Index l = 0; l < n; ++l)
    for (Index x = 0; x < nx; ++x)
      for (Index a = 0; a < n; ++a) {
        auto [i1, i2] = o.iota(l, a);
        for (Index b = 0; b < n; ++b) {
          Index lb = o.mul(l, b);
          Index y = S.mX(lb, o.ldiv(lb, l), x);
          Index flat = ((i1 * n + i2) * n + b) * nx + y;
          t.at(l, x, a, b) = theta(l, flat) / nx;
        }
      }
  return t;
}

BracketTable bracket_from_family(const ModuleSetting& S, const HomFamily& F) {
  const Ops o = S.base().ops();
  auto t = blank4(S);
  for (Index l = 0; l < t.n; ++l)
    for (Index x = 0; x < t.nx; ++x) {
      const auto& f = F.maps[family_slot(S, o, l, x)].map;
      for (Index a = 0; a < t.n; ++a) {
        Index pla = o.pi(o.mul(l, a));
        Index tail = o.gmul(f[o.pi(l)], o.ginv(f[pla]));
        for (Index b = 0; b < t.n; ++b)
          t.at(l, x, a, b) = o.ldiv(
              l, o.pinv(o.gmul(pla, o.ginv(o.pi(l)), o.pi(o.mul(l, b)), tail)));
      }
    }
  return t;
}

SetHMorphism my_from_family(const ModuleSetting& S, const HomFamily& F) {
  const Ops o = S.base().ops();
  const Index n = static_cast<Index>(S.base().n());
  const Index nx = static_cast<Index>(S.x_size());
  auto T = bracket_from_family(S, F);
  return SetHMorphism::from_function(tensor(S.base().L, S.Y), S.Y, [&](Index l, Index flat) {
    Index x = flat % nx;
    flat /= nx;
    Index b = flat % n, a = flat / n;
    Index la = o.mul(l, a);
    Index xb = S.mX(la, b, x);
    Index c = o.mul(la, T(la, xb, o.ldiv(la, l), b));
    return o.ldiv(l, c) * nx + S.mX(c, o.ldiv(c, la), xb);
  });
}

Layer correspondence_step(const ModuleSetting& S, const Layer& l, Direction d) {
  for (const auto& id : layer_identities(S, l)) {
    auto r = run_check(id);
    if (!r.passed) {
      std::vector<std::string> w{layer_name(l), id.id};
      if (r.witness->lambda) w.push_back(*r.witness->lambda);
      w.insert(w.end(), r.witness->inputs.begin(), r.witness->inputs.end());
      throw Error("AxiomViolated", layer_name(l) + " violates '" + id.id + "'", w);
    }
  }
  const bool up = d == Direction::TowardAction;
  return std::visit(
      [&](const auto& v) -> Layer {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, HomFamily>) {
          if (up) return pi_from_family(S, v);
        } else if constexpr (std::is_same_v<T, PiTable>) {
          if (up) return beta_from_pi(S, v);
          return family_from_pi(S, v);
        } else if constexpr (std::is_same_v<T, BetaTable>) {
          if (up) return bracket_from_beta(S, v);
          return pi_from_beta(S, v);
        } else if constexpr (std::is_same_v<T, BracketTable>) {
          if (up) return ThetaAction{theta_from_bracket(S, v)};
          return beta_from_bracket(S, v);
        } else if constexpr (std::is_same_v<T, ThetaAction>) {
          if (up) return ModuleAction{my_of(S, v.theta)};
          return bracket_from_theta(S, v.theta);
        } else {
          if (!up) return ThetaAction{theta_of(S, v.mY)};
        }
        throw Error("TypeMismatch", "no further layer in that direction from " + layer_name(l));
      },
      l);
}

}  // namespace dynrefl
