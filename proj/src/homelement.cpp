#include "weylhom/homelement.hpp"

#include <stdexcept>

namespace weylhom {

HomElement::HomElement(Partition shape, Composition type, FieldPtr field)
    : shape_(std::move(shape)), type_(std::move(type)), field_(std::move(field)) {
  if (!is_partition(shape_) || shape_.empty())
    throw std::invalid_argument("hom element: shape must be a partition");
  if (!is_composition(type_)) throw std::invalid_argument("hom element: type must be a composition");
  if (parts_sum(shape_) != parts_sum(type_))
    throw std::invalid_argument("hom element: |shape| != |type|");
  if (!field_) throw std::invalid_argument("hom element: null field");
}

HomElement HomElement::single(const Tableau& t, const Scalar& coeff) {
  if (!coeff.valid()) throw std::invalid_argument("hom element: detached coefficient");
  HomElement h(t.shape(), t.type(), coeff.field());
  h.add_term(t, coeff);
  return h;
}

void HomElement::add_term(const Tableau& t, const Scalar& coeff) {
  if (!coeff.valid()) throw std::invalid_argument("hom element: detached coefficient");
  if (!(coeff.field()->spec() == field_->spec()))
    throw std::invalid_argument("hom element: coefficient from a different field");
  if (t.shape() != shape_ || t.type() != type_)
    throw std::invalid_argument("hom element: tableau shape/type mismatch");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second = it->second + coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HomElement::add(const HomElement& other) {
  if (other.shape_ != shape_ || other.type_ != type_)
    throw std::invalid_argument("hom element: sum of mismatched shapes/types");
  for (const auto& [t, c] : other.terms_) add_term(t, c);
}

HomElement HomElement::scaled(const Scalar& c) const {
  HomElement out(shape_, type_, field_);
  if (!c.valid()) throw std::invalid_argument("hom element: detached coefficient");
  if (c.is_zero()) return out;
  for (const auto& [t, v] : terms_) out.add_term(t, v * c);
  return out;
}

bool HomElement::operator==(const HomElement& other) const {
  if (shape_ != other.shape_ || type_ != other.type_) return false;
  if (terms_.size() != other.terms_.size()) return false;
  auto it = terms_.begin();
  auto jt = other.terms_.begin();
  for (; it != terms_.end(); ++it, ++jt) {
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  }
  return true;
}

}  // namespace weylhom
