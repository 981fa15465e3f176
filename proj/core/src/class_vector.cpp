#include "hstrace/class_vector.hpp"

namespace hstrace {

Int ClassVector::coefficient(const GroupElement& elem) const {
  auto it = coeffs_.find(group_->class_of(elem));
  return it == coeffs_.end() ? Int(0) : it->second;
}

void ClassVector::add(const GroupElement& elem, const Int& coeff) {
  if (coeff == 0) return;
  GroupElement rep = group_->class_of(elem);
  auto [it, inserted] = coeffs_.emplace(std::move(rep), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

void ClassVector::check_group(const ClassVector& o) const {
  if (group_ != o.group_)
    throw ValidationError("class vectors refer to different groups");
}

ClassVector& ClassVector::operator+=(const ClassVector& o) {
  check_group(o);
  for (const auto& [rep, c] : o.coeffs_) add(rep, c);
  return *this;
}

ClassVector& ClassVector::operator-=(const ClassVector& o) {
  check_group(o);
  for (const auto& [rep, c] : o.coeffs_) add(rep, -c);
  return *this;
}

ClassVector& ClassVector::operator*=(const Int& k) {
  if (k == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [rep, c] : coeffs_) c *= k;
  return *this;
}

Int ClassVector::augmentation() const {
  Int sum = 0;
  for (const auto& [rep, c] : coeffs_) sum += c;
  return sum;
}

ClassVector reduce_trace(ClassVector v) {
  if (!v.group()) return v;
  ClassVector out(v.group());
  const GroupElement e = v.group()->identity();
  for (const auto& [rep, c] : v.coefficients())
    if (rep != e) out.add(rep, c);
  return out;
}

}  // namespace hstrace
