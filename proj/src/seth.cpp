#include "dynrefl/seth.hpp"

namespace dynrefl {

SetHObject::SetHObject(CarrierRef H, std::vector<FactorRef> factors)
    : H_(std::move(H)), factors_(std::move(factors)) {
  for (const auto& f : factors_) size_ *= f->carrier.size();
  const std::size_t nh = H_->size();
  act_.resize(nh * size_);
  for (Index l = 0; l < nh; ++l)
    for (Index x = 0; x < size_; ++x) {
      Index mu = l;
      std::size_t rest = size_;
      Index idx = x;
      for (const auto& f : factors_) {
        rest /= f->carrier.size();
        Index part = static_cast<Index>(idx / rest);
        idx = static_cast<Index>(idx % rest);
        mu = f->action[mu * f->carrier.size() + part];
      }
      act_[l * size_ + x] = mu;
    }
}

std::vector<Index> SetHObject::components(Index flat) const {
  std::vector<Index> out(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const auto n = factors_[k]->carrier.size();
    out[k] = static_cast<Index>(flat % n);
    flat = static_cast<Index>(flat / n);
  }
  return out;
}

Index SetHObject::flatten(const std::vector<Index>& parts) const {
  Index flat = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    flat = static_cast<Index>(flat * factors_[k]->carrier.size() + parts[k]);
  return flat;
}

std::string SetHObject::label(Index flat) const {
  if (factors_.empty()) return kUnitLabel;
  auto parts = components(flat);
  if (parts.size() == 1) return factors_[0]->carrier.label(parts[0]);
  std::string s = "(";
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) s += ",";
    s += factors_[k]->carrier.label(parts[k]);
  }
  return s + ")";
}

std::vector<std::string> SetHObject::labels() const {
  std::vector<std::string> out;
  for (Index x = 0; x < size_; ++x) out.push_back(label(x));
  return out;
}

bool SetHObject::same_type(const SetHObject& o) const {
  return H_ == o.H_ && factors_ == o.factors_;
}

ObjectRef make_object(CarrierRef H, std::string name, Carrier X,
                      std::vector<Index> action) {
  if (action.size() != H->size() * X.size())
    throw Error("SizeMismatch", "action table of '" + name + "' is not total");
  for (Index v : action)
    if (v >= H->size()) throw Error("SizeMismatch", "action value out of range");
  auto f = std::make_shared<Factor>(Factor{std::move(name), std::move(X), std::move(action)});
  return std::make_shared<SetHObject>(std::move(H), std::vector<FactorRef>{f});
}

ObjectRef unit_object(CarrierRef H) {
  return std::make_shared<SetHObject>(std::move(H), std::vector<FactorRef>{});
}

ObjectRef tensor(const ObjectRef& X, const ObjectRef& Y) {
  if (X->H() != Y->H()) throw Error("MismatchedH", "objects over different H");
  auto fs = X->factors();
  fs.insert(fs.end(), Y->factors().begin(), Y->factors().end());
  return std::make_shared<SetHObject>(X->H(), std::move(fs));
}

ObjectRef tensor(std::initializer_list<ObjectRef> xs) {
  auto it = xs.begin();
  ObjectRef acc = *it++;
  for (; it != xs.end(); ++it) acc = tensor(acc, *it);
  return acc;
}

SetHMorphism::SetHMorphism(ObjectRef src, ObjectRef tgt, std::vector<Index> table)
    : src_(std::move(src)), tgt_(std::move(tgt)), table_(std::move(table)) {
  if (src_->H() != tgt_->H()) throw Error("MismatchedH", "morphism across different H");
  if (table_.size() != src_->h_size() * src_->size())
    throw Error("SizeMismatch", "morphism table is not total");
  for (Index v : table_)
    if (v >= tgt_->size()) throw Error("SizeMismatch", "morphism value out of range");
}

SetHMorphism SetHMorphism::from_function(ObjectRef src, ObjectRef tgt,
                                         const std::function<Index(Index, Index)>& f) {
  const std::size_t nh = src->h_size(), ns = src->size();
  std::vector<Index> t(nh * ns);
  for (Index l = 0; l < nh; ++l)
    for (Index x = 0; x < ns; ++x) t[l * ns + x] = f(l, x);
  return SetHMorphism(std::move(src), std::move(tgt), std::move(t));
}

SetHMorphism SetHMorphism::with_entry(Index lambda, Index x, Index value) const {
  auto t = table_;
  t.at(lambda * src_->size() + x) = value;
  return SetHMorphism(src_, tgt_, std::move(t));
}

SetHMorphism identity(const ObjectRef& X) {
  return SetHMorphism::from_function(X, X, [](Index, Index x) { return x; });
}

SetHMorphism compose(const SetHMorphism& g, const SetHMorphism& f) {
  if (!f.target()->same_type(*g.source()))
    throw Error("TypeMismatch", "target of f is not the source of g");
  return SetHMorphism::from_function(f.source(), g.target(), [&](Index l, Index x) {
    return g(l, f(l, x));
  });
}

SetHMorphism tensor(const SetHMorphism& f, const SetHMorphism& g) {
  auto src = tensor(f.source(), g.source());
  auto tgt = tensor(f.target(), g.target());
  const std::size_t ny = g.source()->size(), ny2 = g.target()->size();
  const auto& X = *f.source();
  return SetHMorphism::from_function(src, tgt, [&](Index l, Index xy) {
    Index x = static_cast<Index>(xy / ny), y = static_cast<Index>(xy % ny);
    return static_cast<Index>(f(l, x) * ny2 + g(X.act(l, x), y));
  });
}

SetHMorphism rebracket(const ObjectRef& src, const ObjectRef& tgt) {
  if (!src->same_type(*tgt))
    throw Error("TypeMismatch", "re-bracketing between different objects");
  return SetHMorphism::from_function(src, tgt, [](Index, Index x) { return x; });
}

SetHMorphism associator(const ObjectRef& X, const ObjectRef& Y, const ObjectRef& Z) {
  return rebracket(tensor(tensor(X, Y), Z), tensor(X, tensor(Y, Z)));
}

SetHMorphism left_unitor(const ObjectRef& X) {
  return rebracket(tensor(unit_object(X->H()), X), X);
}

SetHMorphism right_unitor(const ObjectRef& X) {
  return rebracket(tensor(X, unit_object(X->H())), X);
}

namespace {

std::vector<Axis> source_axes(const SetHMorphism& f) {
  std::vector<Axis> axes{{"lambda", f.source()->H()->labels()}};
  for (const auto& fac : f.source()->factors())
    axes.push_back({fac->name, fac->carrier.labels()});
  return axes;
}

Index flat_of(const SetHObject& X, const Index* pt) {
  Index flat = 0;
  for (std::size_t k = 0; k < X.factors().size(); ++k)
    flat = static_cast<Index>(flat * X.factors()[k]->carrier.size() + pt[k + 1]);
  return flat;
}

}  // namespace

Identity morphism_law(const std::string& id, const SetHMorphism& f) {
  Identity I;
  I.id = id;
  I.axes = source_axes(f);
  auto F = std::make_shared<SetHMorphism>(f);
  I.holds = [F](const Index* pt) {
    Index x = flat_of(*F->source(), pt);
    return F->target()->act(pt[0], (*F)(pt[0], x)) == F->source()->act(pt[0], x);
  };
  I.sides = [F](const Index* pt) {
    Index x = flat_of(*F->source(), pt);
    const auto& H = *F->source()->H();
    return std::pair{H.label(F->target()->act(pt[0], (*F)(pt[0], x))),
                     H.label(F->source()->act(pt[0], x))};
  };
  return I;
}

CheckResult validate_morphism(const SetHMorphism& f) {
  return run_check(morphism_law("morphism-law", f));
}

Identity equation(const std::string& id, const SetHMorphism& lhs,
                  const SetHMorphism& rhs) {
  if (!lhs.source()->same_type(*rhs.source()) || !lhs.target()->same_type(*rhs.target()))
    throw Error("TypeMismatch", "sides of '" + id + "' have different types");
  Identity I;
  I.id = id;
  I.axes = source_axes(lhs);
  auto L = std::make_shared<SetHMorphism>(lhs);
  auto R = std::make_shared<SetHMorphism>(rhs);
  I.holds = [L, R](const Index* pt) {
    Index x = flat_of(*L->source(), pt);
    return (*L)(pt[0], x) == (*R)(pt[0], x);
  };
  I.sides = [L, R](const Index* pt) {
    Index x = flat_of(*L->source(), pt);
    return std::pair{L->target()->label((*L)(pt[0], x)),
                     R->target()->label((*R)(pt[0], x))};
  };
  return I;
}

CheckResult morphisms_equal(const SetHMorphism& f, const SetHMorphism& g) {
  return run_check(equation("equal", f, g));
}

bool is_bijective(const SetHMorphism& f) {
  const std::size_t n = f.source()->size();
  if (f.target()->size() != n) throw Error("TypeMismatch", "not an endomorphism");
  for (Index l = 0; l < f.source()->h_size(); ++l) {
    std::vector<bool> hit(n, false);
    for (Index x = 0; x < n; ++x) {
      Index y = f(l, x);
      if (hit[y]) return false;
      hit[y] = true;
    }
  }
  return true;
}

}  // namespace dynrefl
