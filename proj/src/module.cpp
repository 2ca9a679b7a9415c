#include "dynrefl/module.hpp"

namespace dynrefl {

LeftModule left_regular(const MonoidStructure& M) {
  return {"left-regular", M.base.L, M.m};
}

LeftModule one_point(const Base& B, Index lambda1) {
  if (lambda1 >= B.n()) throw Error("UnknownLabel", "one-point parameter out of range");
  auto X = make_object(B.H, "X", Carrier({"x"}), std::vector<Index>(B.n(), lambda1));
  auto act = SetHMorphism::from_function(tensor(B.L, X), X, [](Index, Index) { return 0; });
  return {"one-point", X, std::move(act)};
}

LeftModule from_action(const Base& B, Carrier Xc, const std::vector<Index>& act,
                       const std::vector<Index>& f) {
  const Index n = static_cast<Index>(B.n());
  const Index nx = static_cast<Index>(Xc.size());
  if (act.size() != std::size_t(n) * nx || f.size() != nx)
    throw Error("SizeMismatch", "action table or f has the wrong size");
  // Left division in X: ldivx[a*nx + y] = the x with ax = y.
  std::vector<Index> ldivx(std::size_t(n) * nx, nx);
  for (Index a = 0; a < n; ++a)
    for (Index x = 0; x < nx; ++x) {
      Index y = act[a * nx + x];
      if (y >= nx || ldivx[a * nx + y] != nx)
        throw Error("ActionNotDivisible",
                    "x -> " + B.H->label(a) + "x is not a bijection",
                    {B.H->label(a)});
      ldivx[a * nx + y] = x;
    }
  for (Index v : f)
    if (v >= n) throw Error("SizeMismatch", "f value out of range");
  const Ops o = B.ops();
  std::vector<Index> dot(std::size_t(n) * nx);
  for (Index l = 0; l < n; ++l)
    for (Index x = 0; x < nx; ++x) dot[l * nx + x] = f[ldivx[o.e() * nx + act[l * nx + x]]];
  auto X = make_object(B.H, "X", std::move(Xc), std::move(dot));
  auto mX = SetHMorphism::from_function(tensor(B.L, X), X, [&](Index l, Index ax) {
    Index a = ax / nx, x = ax % nx;
    return ldivx[l * nx + act[o.mul(l, a) * nx + x]];
  });
  return {"action", X, std::move(mX)};
}

std::vector<Index> decode_map(Index code, std::size_t n) {
  std::vector<Index> f(n);
  for (std::size_t i = n; i-- > 0;) {
    f[i] = static_cast<Index>(code % n);
    code = static_cast<Index>(code / n);
  }
  return f;
}

Index encode_map(const std::vector<Index>& f, std::size_t n) {
  Index c = 0;
  for (Index v : f) c = static_cast<Index>(c * n + v);
  return c;
}

std::vector<Index> map_alpha(const Ops& o, Index l, const std::vector<Index>& f) {
  std::vector<Index> out(f.size());
  const Index pl = o.pi(l);
  for (Index a = 0; a < f.size(); ++a) {
    Index arg = o.ldiv(l, o.pinv(o.gmul(o.pi(a), pl)));
    out[a] = o.pinv(o.gmul(o.ginv(pl), o.pi(o.mul(l, f[arg]))));
  }
  return out;
}

LeftModule map_ll(const Base& B, const MapSelector& g, std::size_t cap) {
  const std::size_t n = B.n();
  if (n > cap)
    throw Error("CarrierTooLarge", "|L| = " + std::to_string(n) +
                                       " exceeds the map-module cap " + std::to_string(cap));
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= n;
  if (g.kind == MapSelector::Kind::Table && g.table.size() != count)
    throw Error("SizeMismatch", "selector table must have one entry per map");
  if (g.kind != MapSelector::Kind::Table && g.value >= n)
    throw Error("SizeMismatch", "selector value out of range");

  const Ops o = B.ops();
  std::vector<std::string> labels;
  for (Index c = 0; c < count; ++c) {
    auto f = decode_map(c, n);
    std::string s = "[";
    for (std::size_t i = 0; i < n; ++i) s += (i ? "," : "") + B.H->label(f[i]);
    labels.push_back(s + "]");
  }
  auto select = [&](const std::vector<Index>& alpha) -> Index {
    switch (g.kind) {
      case MapSelector::Kind::Constant: return g.value;
      case MapSelector::Kind::Evaluate: return alpha[g.value];
      case MapSelector::Kind::Table: return g.table[encode_map(alpha, n)];
    }
    return 0;
  };
  std::vector<Index> dot(n * count);
  for (Index l = 0; l < n; ++l)
    for (Index c = 0; c < count; ++c)
      dot[l * count + c] = select(map_alpha(o, l, decode_map(c, n)));
  auto X = make_object(B.H, "X", Carrier(std::move(labels)), std::move(dot));

  // m_X(λ)(a,f) = φ^λ_a ∘ f ∘ ρ^{λa}_{(λa)\λ}, φ^λ_a = ξ_λ(a,-)
  auto mX = SetHMorphism::from_function(tensor(B.L, X), X, [&](Index l, Index af) {
    Index a = static_cast<Index>(af / count);
    auto f = decode_map(static_cast<Index>(af % count), n);
    Index la = o.mul(l, a), back = o.ldiv(la, l);
    std::vector<Index> h(n);
    for (Index c = 0; c < n; ++c) h[c] = o.xi(l, a, f[o.rho(la, back, c)]);
    return encode_map(h, n);
  });
  return {"map-ll", X, std::move(mX)};
}

std::vector<Identity> module_identities(const std::string& prefix,
                                        const MonoidStructure& M,
                                        const SetHMorphism& act) {
  const auto& B = M.base;
  // V is the action's target; the source is L⊗V.
  const auto& V = act.target();
  auto one = identity(B.L);
  auto oneV = identity(V);
  std::vector<Identity> out;
  out.push_back(equation(prefix + "unit", act * tensor(M.eta, oneV), left_unitor(V)));
  out.push_back(equation(prefix + "associativity", act * tensor(M.m, oneV),
                         act * tensor(one, act)));
  out.push_back(morphism_law(prefix + "morphism-law", act));
  return out;
}

std::vector<Identity> check_left_module_ids(const MonoidStructure& M,
                                            const LeftModule& mod) {
  return module_identities("module-", M, mod.action);
}

std::vector<CheckResult> check_left_module(const MonoidStructure& M,
                                           const LeftModule& mod) {
  return run_all(check_left_module_ids(M, mod));
}

ModuleSetting make_setting(const Base& B, LeftModule mod) {
  auto M = build_monoid(B);
  auto S = build_sigma(B);
  auto Y = tensor(B.L, mod.X);
  return {std::move(M), std::move(S), std::move(mod), std::move(Y)};
}

SetHMorphism lift_trivial(const ModuleSetting& S) {
  return tensor(S.monoid.m, identity(S.module.X));
}

SetHMorphism lift_sigma(const ModuleSetting& S) {
  return tensor(identity(S.base().L), S.module.action) *
         tensor(S.sigma.sigma, identity(S.module.X));
}

TwistedMonoid twisted_monoid(const ModuleSetting& S) {
  const auto& B = S.base();
  auto one = identity(B.L);
  auto AA = tensor(B.L, B.L);
  auto m = tensor(S.monoid.m, S.monoid.m) * tensor(tensor(one, S.sigma.sigma), one);
  auto eta = tensor(S.monoid.eta, S.monoid.eta);
  return {AA, std::move(m), std::move(eta)};
}

std::vector<Identity> twisted_monoid_identities(const TwistedMonoid& T) {
  auto one = identity(T.AA);
  std::vector<Identity> out;
  out.push_back(equation("twisted-unit-left", T.m * tensor(T.eta, one), left_unitor(T.AA)));
  out.push_back(equation("twisted-unit-right", T.m * tensor(one, T.eta), right_unitor(T.AA)));
  out.push_back(equation("twisted-associativity", T.m * tensor(T.m, one),
                         T.m * tensor(one, T.m)));
  return out;
}

Identity braid_commute(const std::string& id, const SetHMorphism& mV,
                       const SetHMorphism& mV2, const SetHMorphism& sigma) {
  const auto& V = mV.target();
  auto L = std::make_shared<SetHObject>(
      V->H(), std::vector<FactorRef>{mV.source()->factors()[0]});
  auto one = identity(L);
  return equation(id, mV * tensor(one, mV2),
                  mV2 * tensor(one, mV) * tensor(sigma, identity(V)));
}

CheckResult check_braid_commute(const SetHMorphism& mV, const SetHMorphism& mV2,
                                const SetHMorphism& sigma) {
  return run_check(braid_commute("braid-commute", mV, mV2, sigma));
}

std::vector<Identity> action_identities(const ModuleSetting& S, const SetHMorphism& mY) {
  auto out = module_identities("mY-", S.monoid, mY);
  const auto& mX = S.module.action;
  out.push_back(equation("mX-mY", mX * mY, mX * tensor(identity(S.base().L), mX)));
  out.push_back(braid_commute("braid-commute-triv", mY, lift_trivial(S), S.sigma.sigma));
  out.push_back(braid_commute("braid-commute-sigma", mY, lift_sigma(S), S.sigma.sigma));
  return out;
}

SetHMorphism theta_of(const ModuleSetting& S, const SetHMorphism& mY) {
  // Source is (L⊗L)⊗Y, flat-equal to L⊗(L⊗Y).
  auto th = lift_trivial(S) * tensor(identity(S.base().L), mY);
  auto src = tensor(tensor(S.base().L, S.base().L), S.Y);
  return SetHMorphism(src, S.Y, th.table());
}

SetHMorphism my_of(const ModuleSetting& S, const SetHMorphism& theta) {
  const auto& B = S.base();
  auto pre = tensor(tensor(S.monoid.eta, identity(B.L)), identity(S.Y));
  auto my = theta * pre;
  return SetHMorphism(tensor(B.L, S.Y), S.Y, my.table());
}

std::vector<Identity> theta_identities(const ModuleSetting& S, const SetHMorphism& theta) {
  const auto& B = S.base();
  auto T = twisted_monoid(S);
  auto oneAA = identity(T.AA);
  auto oneY = identity(S.Y);
  auto one = identity(B.L);
  const auto& mX = S.module.action;
  std::vector<Identity> out;
  out.push_back(equation("theta-associativity", theta * tensor(T.m, oneY),
                         theta * tensor(oneAA, theta)));
  out.push_back(equation("theta-unit", theta * tensor(T.eta, oneY), left_unitor(S.Y)));
  out.push_back(equation("theta-mX", mX * theta,
                         mX * tensor(one, mX) * tensor(oneAA, mX)));
  out.push_back(equation("theta-m",
                         theta * tensor(tensor(one, S.monoid.eta), oneY),
                         SetHMorphism(tensor(tensor(B.L, B.I), S.Y), S.Y,
                                      tensor(S.monoid.m, identity(S.module.X)).table())));
  out.push_back(morphism_law("theta-morphism-law", theta));
  return out;
}

void require(const std::vector<Identity>& ids) {
  for (const auto& id : ids) {
    auto r = run_check(id);
    if (!r.passed) {
      std::vector<std::string> w;
      if (r.witness->lambda) w.push_back(*r.witness->lambda);
      w.insert(w.end(), r.witness->inputs.begin(), r.witness->inputs.end());
      throw Error("HypothesisViolated", "hypothesis '" + id.id + "' fails", w);
    }
  }
}

SetHMorphism theta_of_checked(const ModuleSetting& S, const SetHMorphism& mY) {
  require(action_identities(S, mY));
  return theta_of(S, mY);
}

SetHMorphism my_of_checked(const ModuleSetting& S, const SetHMorphism& theta) {
  require(theta_identities(S, theta));
  return my_of(S, theta);
}

}  // namespace dynrefl
