#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hstrace/bigint.hpp"
#include "hstrace/errors.hpp"

namespace hstrace {

class Group;
using GroupPtr = std::shared_ptr<const Group>;

/// An element of a group. For the finite backends (table, perm) an element
/// is an index into the enumerated element list; for the fgabelian backend
/// it is a coordinate vector of length free_rank + #invariant_factors with
/// torsion coordinates reduced into [0, factor).
class GroupElement {
 public:
  GroupElement() : rep_(std::uint32_t{0}) {}

  static GroupElement at_index(std::uint32_t i) { return GroupElement(Rep(i)); }
  static GroupElement from_coords(std::vector<Int> coords) {
    return GroupElement(Rep(std::move(coords)));
  }

  bool is_index() const { return rep_.index() == 0; }
  std::uint32_t index() const { return std::get<0>(rep_); }
  const std::vector<Int>& coords() const { return std::get<1>(rep_); }

  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.rep_ == b.rep_;
  }
  friend bool operator!=(const GroupElement& a, const GroupElement& b) {
    return !(a == b);
  }
  // Total order: used for canonical representatives and stable serialization.
  friend bool operator<(const GroupElement& a, const GroupElement& b) {
    if (a.rep_.index() != b.rep_.index()) return a.rep_.index() < b.rep_.index();
    if (a.is_index()) return a.index() < b.index();
    return a.coords() < b.coords();
  }

 private:
  using Rep = std::variant<std::uint32_t, std::vector<Int>>;
  explicit GroupElement(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// A conjugacy class with its canonical representative (least element index
/// for finite backends, the element itself for abelian groups).
struct ConjClass {
  GroupElement representative;
  std::vector<GroupElement> members;  // singleton for abelian backends
  std::size_t size = 0;
};

enum class BackendKind { Table, Perm, FgAbelian };

/// A group in one of three backends:
///  - table: explicit multiplication table, identity at index 0,
///  - perm:  finite group generated by permutations, enumerated breadth-first,
///  - fgabelian: finitely generated abelian, Z^r x prod Z/f_i with the
///    invariant factors normalized to a divisibility chain.
///
/// Groups are immutable after construction and safe for concurrent reads;
/// the conjugacy-class cache is materialized once under std::call_once.
class Group {
 public:
  static constexpr std::size_t kDefaultOrderBound = 1000000;

  static GroupPtr from_table(std::vector<std::vector<std::uint32_t>> mul,
                             std::string name = {});
  static GroupPtr from_permutations(std::size_t degree,
                                    std::vector<std::vector<std::uint32_t>> generators,
                                    std::size_t order_bound = kDefaultOrderBound,
                                    std::string name = {});
  static GroupPtr fg_abelian(std::size_t free_rank, std::vector<Int> invariant_factors,
                             std::size_t order_bound = kDefaultOrderBound,
                             std::string name = {});

  BackendKind backend() const { return kind_; }
  const std::string& name() const { return name_; }
  std::size_t order_bound() const { return order_bound_; }

  bool is_finite() const;
  bool is_trivial() const;
  Int order() const;                // throws PreconditionError if infinite
  std::size_t enumerable_order() const;  // also throws above the order bound
  bool is_abelian() const { return abelian_; }

  GroupElement identity() const;
  bool is_identity(const GroupElement& a) const;
  GroupElement element(std::size_t i) const;  // i-th element, finite backends
  /// Validates an element against this group and normalizes fgabelian
  /// torsion coordinates. Throws ValidationError on out-of-range input.
  GroupElement canonical(GroupElement a) const;

  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement conjugate(const GroupElement& g, const GroupElement& x) const;
  std::optional<Int> element_order(const GroupElement& a) const;  // nullopt = infinite

  const std::vector<ConjClass>& conjugacy_classes() const;
  std::size_t class_count() const { return conjugacy_classes().size(); }
  /// Canonical representative of the class containing a. Works for the
  /// infinite fgabelian backend as well (classes are elements there).
  GroupElement class_of(const GroupElement& a) const;
  std::size_t class_index(const GroupElement& a) const;
  GroupElement inverse_class(const GroupElement& rep) const;
  std::size_t inverse_class_index(std::size_t ci) const;

  // fgabelian structure
  std::size_t free_rank() const;
  const std::vector<Int>& invariant_factors() const;
  /// Splits an fgabelian group as H x K with H the (finite) 2-primary
  /// torsion part and K the odd torsion plus the free part.
  std::pair<GroupPtr, GroupPtr> primary_decomposition() const;

  /// True iff every non-trivial element has odd order. Finite backends only;
  /// an fgabelian group with free part is rejected as not enumerable.
  bool all_nontrivial_odd_order() const;

  // raw backend access, used by serialization
  const std::vector<std::uint32_t>& table_flat() const;
  std::size_t degree() const;
  const std::vector<std::vector<std::uint32_t>>& generators() const;

 private:
  Group() = default;

  struct TableBackend {
    std::size_t n;
    std::vector<std::uint32_t> mul;  // row-major n*n
    std::vector<std::uint32_t> inv;
  };
  struct PermBackend {
    std::size_t degree;
    std::vector<std::vector<std::uint32_t>> generators;
    std::vector<std::vector<std::uint32_t>> elements;  // breadth-first order
    std::vector<std::uint32_t> inv;
    // lookup from permutation image array to element index
    std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> lookup;  // sorted
    std::uint32_t find(const std::vector<std::uint32_t>& p) const;
  };
  struct AbelianBackend {
    std::size_t free_rank;
    std::vector<Int> factors;  // divisibility chain, each >= 2
  };

  std::size_t finite_size() const;  // table/perm element count
  GroupElement mul_index(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_idx(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_idx(std::uint32_t a) const;
  void ensure_classes() const;
  std::size_t abelian_class_index(const GroupElement& a) const;

  BackendKind kind_ = BackendKind::Table;
  std::string name_;
  std::size_t order_bound_ = kDefaultOrderBound;
  bool abelian_ = true;
  std::variant<TableBackend, PermBackend, AbelianBackend> backend_;

  struct ClassCache {
    std::vector<ConjClass> classes;
    std::vector<std::uint32_t> class_index_of;  // element index -> class index
    std::vector<std::size_t> inverse_class;     // class index -> class index
  };
  mutable std::once_flag classes_once_;
  mutable ClassCache class_cache_;
};

/// Invariant factor decomposition of a finite abelian group (any backend),
/// recovered from the element order statistics. Ascending divisibility chain.
std::vector<Int> abelian_invariant_factors(const Group& g);

}  // namespace hstrace
