#pragma once

#include <utility>
#include <vector>

#include "hstrace/class_vector.hpp"
#include "hstrace/group_ring.hpp"

namespace hstrace {

/// A non-negatively graded family of idempotent matrices over a common
/// group ring, one per (distinct) degree. No differentials are stored: the
/// characteristic below depends only on the degreewise idempotents.
class IdempotentComplex {
 public:
  /// Validates: consistent group, distinct degrees, every matrix idempotent
  /// (PreconditionError naming the offending degree).
  static IdempotentComplex create(GroupPtr group,
                                  std::vector<std::pair<std::size_t, GroupRingMatrix>> degrees);

  const GroupPtr& group() const { return group_; }
  const std::vector<std::pair<std::size_t, GroupRingMatrix>>& degrees() const {
    return degrees_;
  }

 private:
  IdempotentComplex() = default;
  GroupPtr group_;
  std::vector<std::pair<std::size_t, GroupRingMatrix>> degrees_;  // sorted by degree
};

/// Alternating sum of Hattori-Stallings traces over the complex:
/// sum_i (-1)^{deg_i} hs_trace(E_i).
ClassVector reidemeister_characteristic(const IdempotentComplex& c);

/// The image of the characteristic with the identity class dropped.
ClassVector reduced_characteristic(const IdempotentComplex& c);

}  // namespace hstrace
