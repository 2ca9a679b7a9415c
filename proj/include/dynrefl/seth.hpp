#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "dynrefl/algebra.hpp"
#include "dynrefl/check.hpp"

namespace dynrefl {

using CarrierRef = std::shared_ptr<const Carrier>;

/// One tensor factor: a set X with its action H×X→H, action[λ*|X|+x].
struct Factor {
  std::string name;
  Carrier carrier;
  std::vector<Index> action;
};
using FactorRef = std::shared_ptr<const Factor>;

/// An object of Set_H. Iterated tensor products are stored flat: the
/// element (x1,...,xk) has index ((x1*|X2|+x2)*|X3|+...)+xk, so every
/// re-bracketing constraint is the identity on indices. No factors means
/// the unit object I = {•}.
class SetHObject {
 public:
  SetHObject(CarrierRef H, std::vector<FactorRef> factors);

  const CarrierRef& H() const { return H_; }
  std::size_t h_size() const { return H_->size(); }
  const std::vector<FactorRef>& factors() const { return factors_; }
  std::size_t size() const { return size_; }

  /// λ ·_X x
  Index act(Index lambda, Index x) const { return act_[lambda * size_ + x]; }

  std::vector<Index> components(Index flat) const;
  Index flatten(const std::vector<Index>& parts) const;
  std::string label(Index flat) const;
  std::vector<std::string> labels() const;

  bool same_type(const SetHObject& other) const;

 private:
  CarrierRef H_;
  std::vector<FactorRef> factors_;
  std::size_t size_ = 1;
  std::vector<Index> act_;
};

using ObjectRef = std::shared_ptr<const SetHObject>;

inline const std::string kUnitLabel = "•";

ObjectRef make_object(CarrierRef H, std::string name, Carrier X,
                      std::vector<Index> action);
ObjectRef unit_object(CarrierRef H);
/// λ ·_{X⊗Y} (x,y) = (λ ·_X x) ·_Y y
ObjectRef tensor(const ObjectRef& X, const ObjectRef& Y);
ObjectRef tensor(std::initializer_list<ObjectRef> xs);

/// A λ-indexed family of maps, table[λ*|src|+x].
class SetHMorphism {
 public:
  SetHMorphism(ObjectRef src, ObjectRef tgt, std::vector<Index> table);

  static SetHMorphism from_function(ObjectRef src, ObjectRef tgt,
                                    const std::function<Index(Index, Index)>& f);

  const ObjectRef& source() const { return src_; }
  const ObjectRef& target() const { return tgt_; }
  Index operator()(Index lambda, Index x) const {
    return table_[lambda * src_->size() + x];
  }
  const std::vector<Index>& table() const { return table_; }

  /// Copy with a single entry replaced; used for negative controls.
  SetHMorphism with_entry(Index lambda, Index x, Index value) const;

  bool operator==(const SetHMorphism& o) const { return table_ == o.table_; }

 private:
  ObjectRef src_, tgt_;
  std::vector<Index> table_;
};

SetHMorphism identity(const ObjectRef& X);
/// (g∘f)(λ) = g(λ)∘f(λ)
SetHMorphism compose(const SetHMorphism& g, const SetHMorphism& f);
inline SetHMorphism operator*(const SetHMorphism& g, const SetHMorphism& f) {
  return compose(g, f);
}
/// (f⊗g)(λ)(x,y) = (f(λ)(x), g(λ ·_X x)(y))
SetHMorphism tensor(const SetHMorphism& f, const SetHMorphism& g);

/// Re-bracketing between flat-equal objects: associators, unitors and their
/// inverses are all of this form.
SetHMorphism rebracket(const ObjectRef& src, const ObjectRef& tgt);
SetHMorphism associator(const ObjectRef& X, const ObjectRef& Y, const ObjectRef& Z);
SetHMorphism left_unitor(const ObjectRef& X);   // I⊗X → X
SetHMorphism right_unitor(const ObjectRef& X);  // X⊗I → X

/// λ ·_Y f(λ)(x) = λ ·_X x for all λ, x.
Identity morphism_law(const std::string& id, const SetHMorphism& f);
CheckResult validate_morphism(const SetHMorphism& f);

/// lhs = rhs pointwise; axes are λ then one axis per source factor.
Identity equation(const std::string& id, const SetHMorphism& lhs,
                  const SetHMorphism& rhs);
CheckResult morphisms_equal(const SetHMorphism& f, const SetHMorphism& g);

/// True iff every f(λ) is a bijection; throws TypeMismatch if src != tgt size.
bool is_bijective(const SetHMorphism& f);

}  // namespace dynrefl
