#include "hstrace/chain.hpp"

#include <algorithm>
#include <set>

namespace hstrace {

IdempotentComplex IdempotentComplex::create(
    GroupPtr group, std::vector<std::pair<std::size_t, GroupRingMatrix>> degrees) {
  std::sort(degrees.begin(), degrees.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::set<std::size_t> seen;
  for (const auto& [deg, mat] : degrees) {
    if (!seen.insert(deg).second)
      throw ValidationError("complex: degree " + std::to_string(deg) + " appears twice");
    if (mat.group() != group)
      throw ValidationError("complex: degree " + std::to_string(deg) +
                            " matrix refers to a different group");
    if (!mat.is_idempotent())
      throw PreconditionError("complex: degree " + std::to_string(deg) +
                              " matrix is not idempotent");
  }
  IdempotentComplex c;
  c.group_ = std::move(group);
  c.degrees_ = std::move(degrees);
  return c;
}

ClassVector reidemeister_characteristic(const IdempotentComplex& c) {
  ClassVector out(c.group());
  for (const auto& [deg, mat] : c.degrees()) {
    ClassVector t = hs_trace(mat);
    if (deg % 2 == 1) t *= Int(-1);
    out += t;
  }
  return out;
}

ClassVector reduced_characteristic(const IdempotentComplex& c) {
  return reduce_trace(reidemeister_characteristic(c));
}

}  // namespace hstrace
