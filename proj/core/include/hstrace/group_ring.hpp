#pragma once

#include <map>

#include "hstrace/class_vector.hpp"
#include "hstrace/group.hpp"

namespace hstrace {

/// A finitely supported integer combination of group elements: an element of
/// the integral group ring Z[pi]. No zero coefficients are stored.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  explicit GroupRingElement(GroupPtr group) : group_(std::move(group)) {}

  static GroupRingElement unit(GroupPtr group);  // 1 * e
  static GroupRingElement monomial(GroupPtr group, const GroupElement& elem,
                                   Int coeff = Int(1));

  const GroupPtr& group() const { return group_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<GroupElement, Int>& terms() const { return terms_; }
  void add_term(const GroupElement& elem, const Int& coeff);

  GroupRingElement& operator+=(const GroupRingElement& o);
  GroupRingElement& operator-=(const GroupRingElement& o);
  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) {
    return a += b;
  }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) {
    return a -= b;
  }
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b);
  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupRingElement& a, const GroupRingElement& b) {
    return !(a == b);
  }

  Int augmentation() const;

 private:
  void check_group(const GroupRingElement& o) const;

  GroupPtr group_;
  std::map<GroupElement, Int> terms_;
};

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b);

/// Square matrix over Z[pi].
class GroupRingMatrix {
 public:
  GroupRingMatrix() = default;
  GroupRingMatrix(GroupPtr group, std::size_t n);
  static GroupRingMatrix identity(GroupPtr group, std::size_t n);

  const GroupPtr& group() const { return group_; }
  std::size_t size() const { return n_; }
  GroupRingElement& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const GroupRingElement& at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
  }

  friend GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b);
  friend GroupRingMatrix operator-(const GroupRingMatrix& a, const GroupRingMatrix& b);
  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b);
  friend bool operator==(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    return !(a == b);
  }

  bool is_idempotent() const;

 private:
  void check_compatible(const GroupRingMatrix& o) const;

  GroupPtr group_;
  std::size_t n_ = 0;
  std::vector<GroupRingElement> entries_;
};

GroupRingMatrix matrix_multiply(const GroupRingMatrix& a, const GroupRingMatrix& b);
GroupRingMatrix matrix_add(const GroupRingMatrix& a, const GroupRingMatrix& b);

/// Block sum a (+) b.
GroupRingMatrix direct_sum(const GroupRingMatrix& a, const GroupRingMatrix& b);

/// The Hattori-Stallings trace: sum the diagonal and project Z[pi] onto the
/// free abelian group on conjugacy classes. Does not require idempotency;
/// callers interpreting the result K-theoretically must supply an idempotent.
ClassVector hs_trace(const GroupRingMatrix& m);

/// Integer trace of the matrix after collapsing the group to a point.
Int augmented_trace(const GroupRingMatrix& m);

}  // namespace hstrace
