#include "dynrefl/quiver.hpp"

namespace dynrefl {

QuiverRef unit_quiver(const CarrierRef& H) {
  auto Q = std::make_shared<Quiver>();
  Q->H = H;
  for (Index l = 0; l < H->size(); ++l) {
    Q->src.push_back(l);
    Q->tgt.push_back(l);
    Q->labels.push_back(H->label(l));
  }
  return Q;
}

QuiverRef q_object(const ObjectRef& X) {
  auto Q = std::make_shared<Quiver>();
  Q->H = X->H();
  const auto xs = X->labels();
  for (Index l = 0; l < X->h_size(); ++l)
    for (Index x = 0; x < X->size(); ++x) {
      Q->src.push_back(l);
      Q->tgt.push_back(X->act(l, x));
      Q->labels.push_back("(" + X->H()->label(l) + "," + xs[x] + ")");
    }
  return Q;
}

QuiverMorphism q_morphism(const SetHMorphism& f, const QuiverRef& src, const QuiverRef& tgt) {
  const std::size_t ns = f.source()->size(), nt = f.target()->size();
  if (src->size() != f.source()->h_size() * ns || tgt->size() != f.source()->h_size() * nt)
    throw Error("TypeMismatch", "quivers do not match the morphism");
  QuiverMorphism q{src, tgt, std::vector<Index>(src->size())};
  for (Index l = 0; l < f.source()->h_size(); ++l)
    for (Index x = 0; x < ns; ++x)
      q.map[l * ns + x] = static_cast<Index>(l * nt + f(l, x));
  return q;
}

QuiverRef fiber_product(const QuiverRef& A, const QuiverRef& B) {
  if (A->H != B->H) throw Error("MismatchedH", "quivers over different H");
  auto Q = std::make_shared<Quiver>();
  Q->H = A->H;
  Q->left = A;
  Q->right = B;
  std::vector<std::vector<Index>> by_source(A->H->size());
  for (Index b = 0; b < B->size(); ++b) by_source[B->src[b]].push_back(b);
  Q->pair_index.assign(A->size() * B->size(), Quiver::npos);
  for (Index a = 0; a < A->size(); ++a)
    for (Index b : by_source[A->tgt[a]]) {
      Q->pair_index[a * B->size() + b] = static_cast<Index>(Q->parts.size());
      Q->parts.emplace_back(a, b);
      Q->src.push_back(A->src[a]);
      Q->tgt.push_back(B->tgt[b]);
      Q->labels.push_back("(" + A->labels[a] + "," + B->labels[b] + ")");
    }
  return Q;
}

QuiverMorphism fiber_product(const QuiverMorphism& f, const QuiverMorphism& g,
                             const QuiverRef& src, const QuiverRef& tgt) {
  if (src->left != f.source || src->right != g.source || tgt->left != f.target ||
      tgt->right != g.target)
    throw Error("TypeMismatch", "fiber product of morphisms between wrong quivers");
  QuiverMorphism h{src, tgt, std::vector<Index>(src->size())};
  for (Index i = 0; i < src->size(); ++i) {
    auto [a, b] = src->parts[i];
    Index j = tgt->find_pair(f(a), g(b));
    if (j == Quiver::npos)
      throw Error("TypeMismatch", "image pair is not composable at " + src->labels[i]);
    h.map[i] = j;
  }
  return h;
}

QuiverMorphism identity(const QuiverRef& Q) {
  QuiverMorphism f{Q, Q, std::vector<Index>(Q->size())};
  for (Index i = 0; i < Q->size(); ++i) f.map[i] = i;
  return f;
}

QuiverMorphism compose(const QuiverMorphism& g, const QuiverMorphism& f) {
  if (f.target != g.source) throw Error("TypeMismatch", "quiver morphisms do not compose");
  QuiverMorphism h{f.source, g.target, std::vector<Index>(f.map.size())};
  for (Index i = 0; i < f.map.size(); ++i) h.map[i] = g(f(i));
  return h;
}

QuiverMorphism associator(const QuiverRef& AB_C, const QuiverRef& A_BC) {
  QuiverMorphism f{AB_C, A_BC, std::vector<Index>(AB_C->size())};
  for (Index i = 0; i < AB_C->size(); ++i) {
    auto [ab, c] = AB_C->parts[i];
    auto [a, b] = AB_C->left->parts[ab];
    f.map[i] = A_BC->find_pair(a, A_BC->right->find_pair(b, c));
  }
  return f;
}

QuiverMorphism associator_inverse(const QuiverRef& A_BC, const QuiverRef& AB_C) {
  QuiverMorphism f{A_BC, AB_C, std::vector<Index>(A_BC->size())};
  for (Index i = 0; i < A_BC->size(); ++i) {
    auto [a, bc] = A_BC->parts[i];
    auto [b, c] = A_BC->right->parts[bc];
    f.map[i] = AB_C->find_pair(AB_C->left->find_pair(a, b), c);
  }
  return f;
}

QuiverMorphism left_unitor(const QuiverRef& HQ) {
  QuiverMorphism f{HQ, HQ->right, std::vector<Index>(HQ->size())};
  for (Index i = 0; i < HQ->size(); ++i) f.map[i] = HQ->parts[i].second;
  return f;
}

QuiverMorphism phi2(const QuiverRef& QXQY, const QuiverRef& QXY, std::size_t ny) {
  const std::size_t nx = QXQY->left->size() / QXQY->H->size();
  QuiverMorphism f{QXQY, QXY, std::vector<Index>(QXQY->size())};
  for (Index i = 0; i < QXQY->size(); ++i) {
    auto [lx, ky] = QXQY->parts[i];
    Index l = static_cast<Index>(lx / nx), x = static_cast<Index>(lx % nx);
    Index y = static_cast<Index>(ky % ny);
    f.map[i] = static_cast<Index>((l * nx + x) * ny + y);
  }
  return f;
}

QuiverMorphism phi2_inverse(const QuiverRef& QXY, const QuiverRef& QXQY, std::size_t ny) {
  const std::size_t nx = QXQY->left->size() / QXQY->H->size();
  QuiverMorphism f{QXY, QXQY, std::vector<Index>(QXY->size())};
  for (Index i = 0; i < QXY->size(); ++i) {
    Index l = static_cast<Index>(i / (nx * ny));
    Index x = static_cast<Index>((i / ny) % nx), y = static_cast<Index>(i % ny);
    Index left = static_cast<Index>(l * nx + x);
    Index kappa = QXQY->left->tgt[left];
    f.map[i] = QXQY->find_pair(left, static_cast<Index>(kappa * ny + y));
  }
  return f;
}

QuiverMorphism phi0(const QuiverRef& Hq, const QuiverRef& QI) {
  // Q(I) has exactly one arrow (λ,•) per λ.
  return QuiverMorphism{Hq, QI, identity(Hq).map};
}

Identity quiver_equation(const std::string& id, const QuiverMorphism& lhs,
                         const QuiverMorphism& rhs) {
  if (lhs.source != rhs.source || lhs.target != rhs.target)
    throw Error("TypeMismatch", "sides of '" + id + "' have different types");
  Identity I;
  I.id = id;
  I.lambda_first = false;
  I.axes = {{"arrow", lhs.source->labels}};
  auto L = std::make_shared<QuiverMorphism>(lhs);
  auto R = std::make_shared<QuiverMorphism>(rhs);
  I.holds = [L, R](const Index* p) { return (*L)(p[0]) == (*R)(p[0]); };
  I.sides = [L, R](const Index* p) {
    return std::pair{L->target->labels[(*L)(p[0])], R->target->labels[(*R)(p[0])]};
  };
  return I;
}

Identity quiver_morphism_law(const std::string& id, const QuiverMorphism& f) {
  Identity I;
  I.id = id;
  I.lambda_first = false;
  I.axes = {{"arrow", f.source->labels}};
  auto F = std::make_shared<QuiverMorphism>(f);
  I.holds = [F](const Index* p) {
    Index a = p[0], b = (*F)(a);
    return F->source->src[a] == F->target->src[b] && F->source->tgt[a] == F->target->tgt[b];
  };
  I.sides = [F](const Index* p) {
    Index a = p[0], b = (*F)(a);
    const auto& H = *F->source->H;
    return std::pair{H.label(F->target->src[b]) + "->" + H.label(F->target->tgt[b]),
                     H.label(F->source->src[a]) + "->" + H.label(F->source->tgt[a])};
  };
  return I;
}

QuiverMorphism lift_solution(const SetHMorphism& f, const QuiverRef& QXQY) {
  const std::size_t ny = QXQY->right->size() / QXQY->H->size();
  auto QXY = q_object(f.source());
  return phi2_inverse(QXY, QXQY, ny) * q_morphism(f, QXY, QXY) * phi2(QXQY, QXY, ny);
}

QuiverLift lift_setting(const ModuleSetting& S, const SetHMorphism& k) {
  QuiverLift q;
  q.QL = q_object(S.base().L);
  q.QX = q_object(S.module.X);
  q.QLL = fiber_product(q.QL, q.QL);
  q.QLX = fiber_product(q.QL, q.QX);
  q.QLL_L = fiber_product(q.QLL, q.QL);
  q.QL_LL = fiber_product(q.QL, q.QLL);
  q.QLL_X = fiber_product(q.QLL, q.QX);
  q.QL_LX = fiber_product(q.QL, q.QLX);
  q.sigma = lift_solution(S.sigma.sigma, q.QLL);
  q.k = lift_solution(k, q.QLX);
  return q;
}

std::vector<Identity> quiver_identities(const ModuleSetting& S, const SetHMorphism& k) {
  const auto& B = S.base();
  const auto& sigma = S.sigma.sigma;
  std::vector<Identity> out;

  // Q only lifts morphisms of Set_H. If one of the inputs is not, report
  // that instead of building lifts whose composable pairs do not exist.
  {
    std::vector<Identity> laws{morphism_law("quiver-sigma-law", sigma),
                               morphism_law("quiver-k-law", k),
                               morphism_law("quiver-m-law", S.monoid.m),
                               morphism_law("quiver-mX-law", S.module.action)};
    bool ok = true;
    for (const auto& l : laws) ok = ok && run_check(l).passed;
    if (!ok) return laws;
  }

  auto q = lift_setting(S, k);

  // Functoriality of Q on the fixture's own morphisms.
  auto QLLo = q_object(sigma.source());
  auto QLXo = q_object(k.source());
  out.push_back(quiver_equation("quiver-functor-identity",
                                q_morphism(identity(sigma.source()), QLLo, QLLo),
                                identity(QLLo)));
  out.push_back(quiver_equation("quiver-functor-compose-sigma",
                                q_morphism(sigma * sigma, QLLo, QLLo),
                                q_morphism(sigma, QLLo, QLLo) * q_morphism(sigma, QLLo, QLLo)));
  out.push_back(quiver_equation("quiver-functor-compose-k",
                                q_morphism(k * k, QLXo, QLXo),
                                q_morphism(k, QLXo, QLXo) * q_morphism(k, QLXo, QLXo)));

  // Naturality of φ₂ for (σ, k) on Q(L⊗L)×Q(L⊗X) and for (m, m_X).
  {
    auto A = fiber_product(QLLo, QLXo);
    auto QLLLX = q_object(tensor(sigma.source(), k.source()));
    const std::size_t ny = k.source()->size();
    auto lhs = phi2(A, QLLLX, ny) *
               fiber_product(q_morphism(sigma, QLLo, QLLo), q_morphism(k, QLXo, QLXo), A, A);
    auto rhs = q_morphism(tensor(sigma, k), QLLLX, QLLLX) * phi2(A, QLLLX, ny);
    out.push_back(quiver_equation("quiver-phi2-natural-sigma-k", lhs, rhs));
  }
  {
    const auto& m = S.monoid.m;
    const auto& mX = S.module.action;
    auto src = fiber_product(QLLo, QLXo);
    auto tgt = fiber_product(q.QL, q.QX);
    auto Qsrc = q_object(tensor(m.source(), mX.source()));
    auto Qtgt = q_object(tensor(m.target(), mX.target()));
    auto lhs = phi2(tgt, Qtgt, S.x_size()) *
               fiber_product(q_morphism(m, QLLo, q.QL), q_morphism(mX, QLXo, q.QX), src, tgt);
    auto rhs = q_morphism(tensor(m, mX), Qsrc, Qtgt) * phi2(src, Qsrc, k.source()->size());
    out.push_back(quiver_equation("quiver-phi2-natural-m-mX", lhs, rhs));
  }

  // Unit coherence: l_{Q(X)} = Q(l_X) φ₂(I,X) (φ₀ × 1).
  {
    auto Hq = unit_quiver(B.H);
    auto HQX = fiber_product(Hq, q.QX);
    auto QI = q_object(B.I);
    auto QIQX = fiber_product(QI, q.QX);
    auto QIX = q_object(tensor(B.I, S.module.X));
    auto rhs = q_morphism(left_unitor(S.module.X), QIX, q.QX) *
               phi2(QIQX, QIX, S.x_size()) *
               fiber_product(phi0(Hq, QI), identity(q.QX), HQX, QIQX);
    out.push_back(quiver_equation("quiver-unit-coherence", left_unitor(HQX), rhs));
  }

  out.push_back(quiver_morphism_law("quiver-sigma-law", q.sigma));
  out.push_back(quiver_morphism_law("quiver-k-law", q.k));

  {
    auto oneL = identity(q.QL);
    auto s1 = fiber_product(q.sigma, oneL, q.QLL_L, q.QLL_L);
    auto s2 = fiber_product(oneL, q.sigma, q.QL_LL, q.QL_LL);
    auto a = associator(q.QLL_L, q.QL_LL);
    auto ai = associator_inverse(q.QL_LL, q.QLL_L);
    out.push_back(quiver_equation("quiver-braid-relation", s1 * ai * s2 * a * s1,
                                  ai * s2 * a * s1 * ai * s2 * a));
  }
  {
    auto s1 = fiber_product(q.sigma, identity(q.QX), q.QLL_X, q.QLL_X);
    auto k2 = fiber_product(identity(q.QL), q.k, q.QL_LX, q.QL_LX);
    auto a = associator(q.QLL_X, q.QL_LX);
    auto ai = associator_inverse(q.QL_LX, q.QLL_X);
    out.push_back(quiver_equation("quiver-reflection-equation",
                                  ai * k2 * a * s1 * ai * k2 * a * s1,
                                  s1 * ai * k2 * a * s1 * ai * k2 * a));
  }
  return out;
}

}  // namespace dynrefl
