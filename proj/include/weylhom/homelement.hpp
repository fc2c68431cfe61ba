#pragma once

#include "weylhom/scalars.hpp"
#include "weylhom/tableaux.hpp"

#include <map>

namespace weylhom {

// A formal linear combination of row-standard tableaux of one fixed shape and
// type, with coefficients in the working field.  Zero terms are pruned.
class HomElement {
 public:
  HomElement(Partition shape, Composition type, FieldPtr field);
  // Singleton combination c * Theta_T; shape and type are read off T.
  static HomElement single(const Tableau& t, const Scalar& coeff);

  const Partition& shape() const { return shape_; }
  const Composition& type() const { return type_; }
  const FieldPtr& field() const { return field_; }
  const std::map<Tableau, Scalar>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c * Theta_T, coalescing with an existing term.  T must have this
  // element's shape and type.
  void add_term(const Tableau& t, const Scalar& coeff);
  // In-place sum; other must match in shape, type, and field.
  void add(const HomElement& other);
  HomElement scaled(const Scalar& c) const;

  bool operator==(const HomElement& other) const;
  bool operator!=(const HomElement& other) const { return !(*this == other); }

 private:
  Partition shape_;
  Composition type_;
  FieldPtr field_;
  std::map<Tableau, Scalar> terms_;
};

}  // namespace weylhom
