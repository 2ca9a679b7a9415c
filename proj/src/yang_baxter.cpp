#include "dynrefl/yang_baxter.hpp"

namespace dynrefl {

Base make_base(PairedStructure P) {
  Base B;
  B.P = std::make_shared<const PairedStructure>(std::move(P));
  B.H = std::make_shared<const Carrier>(B.P->L().carrier());
  B.I = unit_object(B.H);
  B.L = make_object(B.H, "L", B.P->L().carrier(), B.P->L().table());
  return B;
}

DynamicalYBMap build_sigma(const Base& B) {
  const Ops o = B.ops();
  const Index n = static_cast<Index>(B.n());
  auto LL = tensor(B.L, B.L);
  return {B, SetHMorphism::from_function(LL, LL, [&](Index l, Index ab) {
            auto [x, y] = o.sigma(l, ab / n, ab % n);
            return x * n + y;
          })};
}

DynamicalYBMap sigma_inverse(const DynamicalYBMap& S) {
  const Ops o = S.base.ops();
  const Index n = static_cast<Index>(S.base.n());
  const auto& LL = S.sigma.source();
  return {S.base, SetHMorphism::from_function(LL, LL, [&](Index l, Index ab) {
            auto [x, y] = o.sigma_inverse(l, ab / n, ab % n);
            return x * n + y;
          })};
}

MonoidStructure build_monoid(const Base& B) {
  const Ops o = B.ops();
  const Index n = static_cast<Index>(B.n());
  auto m = SetHMorphism::from_function(tensor(B.L, B.L), B.L, [&](Index l, Index ab) {
    return o.m(l, ab / n, ab % n);
  });
  auto eta = SetHMorphism::from_function(B.I, B.L, [&](Index, Index) { return o.e(); });
  return {B, std::move(m), std::move(eta)};
}

Identity braid_relation(const SetHMorphism& s) {
  auto one = identity(s.source()->factors().empty()
                          ? s.source()
                          : std::make_shared<SetHObject>(
                                s.source()->H(),
                                std::vector<FactorRef>{s.source()->factors()[0]}));
  auto s1 = tensor(s, one), s2 = tensor(one, s);
  return equation("braid-relation", s1 * s2 * s1, s2 * s1 * s2);
}

CheckResult check_braid_relation(const SetHMorphism& sigma) {
  return run_check(braid_relation(sigma));
}

Identity injectivity(const std::string& id, const SetHMorphism& f) {
  // Least preimage table per λ; a point holds iff it is its own least preimage.
  const std::size_t ns = f.source()->size(), nt = f.target()->size();
  const std::size_t nh = f.source()->h_size();
  auto least = std::make_shared<std::vector<Index>>(nh * ns);
  for (Index l = 0; l < nh; ++l) {
    std::vector<Index> first(nt, static_cast<Index>(ns));
    for (Index x = 0; x < ns; ++x)
      if (first[f(l, x)] == ns) first[f(l, x)] = x;
    for (Index x = 0; x < ns; ++x) (*least)[l * ns + x] = first[f(l, x)];
  }
  auto src = f.source();
  auto same = SetHMorphism(src, src, *least);
  auto Id = equation(id, identity(src), same);
  Id.sides = [src, least, ns](const Index* pt) {
    Index x = 0;
    for (std::size_t k = 0; k < src->factors().size(); ++k)
      x = static_cast<Index>(x * src->factors()[k]->carrier.size() + pt[k + 1]);
    return std::pair{src->label(x),
                     "same image as " + src->label((*least)[pt[0] * ns + x])};
  };
  return Id;
}

std::vector<Identity> braided_monoid_identities(const MonoidStructure& M,
                                                const SetHMorphism& sigma) {
  const auto& B = M.base;
  auto one = identity(B.L);
  const auto& m = M.m;
  const auto& eta = M.eta;
  auto LIL = rebracket(tensor(B.I, B.L), tensor(B.L, B.I));
  auto LLI = rebracket(tensor(B.L, B.I), tensor(B.I, B.L));
  auto s1 = tensor(sigma, one), s2 = tensor(one, sigma);

  std::vector<Identity> out;
  out.push_back(equation("unit-left", m * tensor(eta, one), left_unitor(B.L)));
  out.push_back(equation("unit-right", m * tensor(one, eta), right_unitor(B.L)));
  out.push_back(equation("associativity", m * tensor(m, one), m * tensor(one, m)));
  out.push_back(equation("braided-monoid-1", tensor(one, m) * s1 * s2,
                         sigma * tensor(m, one)));
  out.push_back(equation("braided-monoid-2", tensor(m, one) * s2 * s1,
                         sigma * tensor(one, m)));
  out.push_back(equation("braided-monoid-3", sigma * tensor(eta, one),
                         tensor(one, eta) * LIL));
  out.push_back(equation("braided-monoid-4", sigma * tensor(one, eta),
                         tensor(eta, one) * LLI));
  out.push_back(equation("m-sigma", m * sigma, m));
  {
    // (a,b) ↦ (a, m(λ)(a,b)) is injective iff every b ↦ m(λ)(a,b) is.
    const Index n = static_cast<Index>(B.n());
    auto LL = tensor(B.L, B.L);
    auto paired = SetHMorphism::from_function(LL, LL, [&](Index l, Index ab) {
      return (ab / n) * n + m(l, ab);
    });
    out.push_back(injectivity("m-injective", paired));
  }
  out.push_back(injectivity("sigma-bijective", sigma));
  out.push_back(morphism_law("morphism-law-m", m));
  out.push_back(morphism_law("morphism-law-eta", eta));
  out.push_back(morphism_law("morphism-law-sigma", sigma));
  return out;
}

std::vector<CheckResult> run_all(const std::vector<Identity>& ids) {
  std::vector<CheckResult> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(run_check(id));
  return out;
}

bool all_passed(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.passed) return false;
  return true;
}

std::vector<CheckResult> check_braided_monoid(const MonoidStructure& M,
                                              const SetHMorphism& sigma) {
  return run_all(braided_monoid_identities(M, sigma));
}

}  // namespace dynrefl
