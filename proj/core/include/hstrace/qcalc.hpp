#pragma once

#include <cstdint>

#include "hstrace/class_vector.hpp"
#include "hstrace/group.hpp"
#include "hstrace/smith.hpp"

namespace hstrace {

/// The signed inversion involution on class vectors:
/// [c] -> (-1)^d [c^{-1}], extended linearly. Only the parity of d matters.
ClassVector bar(const ClassVector& v, long long d);

/// How one conjugacy class sits inside the involution orbit decomposition.
struct QLedgerEntry {
  enum class Role { SelfFree, SelfOrder2, Paired };
  std::size_t class_index = 0;
  Role role = Role::SelfFree;
  std::size_t partner = 0;  // == class_index for self-paired classes
  int sign = 1;             // fold sign for paired classes: [partner] == sign*[rep]
  bool generator = false;   // orbit representative contributing a generator
  bool dropped = false;     // identity orbit removed in the reduced group
};

/// Structure of the coinvariants of the signed inversion on the class
/// lattice: free rank, torsion (a list of 2s), and the per-class orbit
/// ledger. The reduced variant removes the identity-class orbit.
class QStructure {
 public:
  QStructure(GroupPtr group, bool odd, bool reduced, std::size_t free_rank,
             std::vector<Int> torsion, std::vector<QLedgerEntry> ledger)
      : group_(std::move(group)),
        odd_(odd),
        reduced_(reduced),
        free_rank_(free_rank),
        torsion_(std::move(torsion)),
        ledger_(std::move(ledger)) {}

  const GroupPtr& group() const { return group_; }
  bool odd() const { return odd_; }
  bool reduced() const { return reduced_; }
  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Int>& torsion() const { return torsion_; }
  const std::vector<QLedgerEntry>& ledger() const { return ledger_; }

  AbelianStructure abelian_structure() const { return {free_rank_, torsion_}; }

 private:
  GroupPtr group_;
  bool odd_;
  bool reduced_;
  std::size_t free_rank_;
  std::vector<Int> torsion_;
  std::vector<QLedgerEntry> ledger_;
};

using QStructurePtr = std::shared_ptr<const QStructure>;

/// Orbit-formula structure of the coinvariants, cached per
/// (group, parity, reduced). Finite groups only.
QStructurePtr q_structure(const GroupPtr& group, long long d, bool reduced);

/// Independent oracle: the same structure computed as the cokernel of the
/// relation matrix {v - bar(v)} on the class basis (plus the identity basis
/// vector when reduced), via Smith normal form.
AbelianStructure q_structure_snf_oracle(const GroupPtr& group, long long d, bool reduced);

bool has_two_torsion(const QStructure& s);

/// An element of the coinvariants in its canonical form: coefficients only
/// on orbit representatives, reduced mod 2 on order-2 generators, identity
/// class dropped when reduced.
class QElement {
 public:
  QElement(QStructurePtr structure, ClassVector canonical)
      : structure_(std::move(structure)), canonical_(std::move(canonical)) {}

  const QStructurePtr& structure() const { return structure_; }
  const ClassVector& vector() const { return canonical_; }
  bool is_zero() const { return canonical_.is_zero(); }

  friend bool operator==(const QElement& a, const QElement& b) {
    return a.structure_ == b.structure_ && a.canonical_ == b.canonical_;
  }
  friend bool operator!=(const QElement& a, const QElement& b) { return !(a == b); }

 private:
  QStructurePtr structure_;
  ClassVector canonical_;
};

/// Projection onto the coinvariants, landing in the unique canonical form.
QElement q_reduce(const ClassVector& v, long long d, bool reduced);

/// k * q, re-canonicalized.
QElement q_scale(const QElement& q, const Int& k);

/// The transfer: lift the canonical form and return lift + bar(lift).
/// Verified to be independent of the chosen lift across the orbit relations
/// meeting the support.
ClassVector transfer(const QElement& q);

/// Checks q_reduce(transfer(q)) == 2q on every basis generator and on
/// `samples` pseudorandom class vectors, for both the plain and the reduced
/// coinvariants.
bool times2_composite_check(const GroupPtr& group, long long d, std::size_t samples,
                            std::uint64_t seed = 0x5eed);

}  // namespace hstrace
