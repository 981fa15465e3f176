#include "hstrace/group_ring.hpp"

namespace hstrace {

GroupRingElement GroupRingElement::unit(GroupPtr group) {
  GroupRingElement r(group);
  r.add_term(group->identity(), 1);
  return r;
}

GroupRingElement GroupRingElement::monomial(GroupPtr group, const GroupElement& elem,
                                            Int coeff) {
  GroupRingElement r(group);
  r.add_term(elem, coeff);
  return r;
}

void GroupRingElement::add_term(const GroupElement& elem, const Int& coeff) {
  if (coeff == 0) return;
  GroupElement c = group_->canonical(elem);
  auto [it, inserted] = terms_.emplace(std::move(c), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void GroupRingElement::check_group(const GroupRingElement& o) const {
  if (group_ != o.group_)
    throw ValidationError("group ring elements refer to different groups");
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
  check_group(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
  check_group(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
  a.check_group(b);
  GroupRingElement out(a.group_);
  for (const auto& [ga, ca] : a.terms_)
    for (const auto& [gb, cb] : b.terms_)
      out.add_term(a.group_->multiply(ga, gb), ca * cb);
  return out;
}

GroupRingElement ring_multiply(const GroupRingElement& a, const GroupRingElement& b) {
  return a * b;
}

Int GroupRingElement::augmentation() const {
  Int sum = 0;
  for (const auto& [g, c] : terms_) sum += c;
  return sum;
}

GroupRingMatrix::GroupRingMatrix(GroupPtr group, std::size_t n)
    : group_(std::move(group)), n_(n) {
  entries_.assign(n_ * n_, GroupRingElement(group_));
}

GroupRingMatrix GroupRingMatrix::identity(GroupPtr group, std::size_t n) {
  GroupRingMatrix m(group, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = GroupRingElement::unit(group);
  return m;
}

void GroupRingMatrix::check_compatible(const GroupRingMatrix& o) const {
  if (group_ != o.group_)
    throw ValidationError("matrices refer to different groups");
  if (n_ != o.n_)
    throw ValidationError("matrix sizes differ: " + std::to_string(n_) + " vs " +
                          std::to_string(o.n_));
}

GroupRingMatrix operator+(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  a.check_compatible(b);
  GroupRingMatrix out(a.group_, a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] + b.entries_[k];
  return out;
}

GroupRingMatrix operator-(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  a.check_compatible(b);
  GroupRingMatrix out(a.group_, a.n_);
  for (std::size_t k = 0; k < a.entries_.size(); ++k)
    out.entries_[k] = a.entries_[k] - b.entries_[k];
  return out;
}

GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  a.check_compatible(b);
  GroupRingMatrix out(a.group_, a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      const GroupRingElement& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < a.n_; ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) += x * b.at(k, j);
      }
    }
  return out;
}

GroupRingMatrix matrix_multiply(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  return a * b;
}

GroupRingMatrix matrix_add(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  return a + b;
}

bool GroupRingMatrix::is_idempotent() const {
  return *this * *this == *this;
}

GroupRingMatrix direct_sum(const GroupRingMatrix& a, const GroupRingMatrix& b) {
  if (a.group() != b.group())
    throw ValidationError("matrices refer to different groups");
  GroupRingMatrix out(a.group(), a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out.at(a.size() + i, a.size() + j) = b.at(i, j);
  return out;
}

ClassVector hs_trace(const GroupRingMatrix& m) {
  ClassVector out(m.group());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (const auto& [g, c] : m.at(i, i).terms()) out.add(g, c);
  return out;
}

Int augmented_trace(const GroupRingMatrix& m) {
  Int sum = 0;
  for (std::size_t i = 0; i < m.size(); ++i) sum += m.at(i, i).augmentation();
  return sum;
}

}  // namespace hstrace
