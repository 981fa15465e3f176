#pragma once

#include <map>

#include "hstrace/group.hpp"

namespace hstrace {

/// An element of the free abelian group on the conjugacy classes of a group:
/// a finitely supported integer map keyed by canonical class representatives.
/// No zero coefficients are stored.
class ClassVector {
 public:
  ClassVector() = default;
  explicit ClassVector(GroupPtr group) : group_(std::move(group)) {}

  const GroupPtr& group() const { return group_; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<GroupElement, Int>& coefficients() const { return coeffs_; }

  Int coefficient(const GroupElement& elem) const;
  /// Adds coeff on the class of elem (any member; folded to the canonical
  /// representative).
  void add(const GroupElement& elem, const Int& coeff);

  ClassVector& operator+=(const ClassVector& o);
  ClassVector& operator-=(const ClassVector& o);
  ClassVector& operator*=(const Int& k);

  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator*(const Int& k, ClassVector v) { return v *= k; }
  friend bool operator==(const ClassVector& a, const ClassVector& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const ClassVector& a, const ClassVector& b) { return !(a == b); }

  /// Sum of all coefficients (image under collapsing the group to a point).
  Int augmentation() const;

 private:
  void check_group(const ClassVector& o) const;

  GroupPtr group_;
  std::map<GroupElement, Int> coeffs_;
};

/// Image in the cokernel of Z<e> -> Z<classes>: the identity-class
/// coefficient is dropped (canonical coset representative).
ClassVector reduce_trace(ClassVector v);

}  // namespace hstrace
