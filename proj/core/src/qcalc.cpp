#include "hstrace/qcalc.hpp"

#include <map>
#include <random>
#include <shared_mutex>
#include <tuple>

namespace hstrace {

namespace {

bool odd_parity(long long d) { return d % 2 != 0; }

Int mod2(const Int& c) {
  Int r = c % 2;
  if (r < 0) r += 2;
  return r;
}

}  // namespace

ClassVector bar(const ClassVector& v, long long d) {
  const int sign = odd_parity(d) ? -1 : 1;
  ClassVector out(v.group());
  for (const auto& [rep, c] : v.coefficients())
    out.add(v.group()->inverse_class(rep), sign * c);
  return out;
}

// Read-mostly cache with single-writer initialization. Holding the
// QStructure (and through it the GroupPtr) pins the key pointer.
namespace {

using QKey = std::tuple<const Group*, bool, bool>;
std::shared_mutex q_cache_mutex;
std::map<QKey, QStructurePtr>& q_cache() {
  static std::map<QKey, QStructurePtr> cache;
  return cache;
}

QStructurePtr compute_q_structure(const GroupPtr& group, bool odd, bool reduced) {
  const auto& classes = group->conjugacy_classes();  // throws if infinite
  std::vector<QLedgerEntry> ledger(classes.size());
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
  for (std::size_t ci = 0; ci < classes.size(); ++ci) {
    QLedgerEntry& e = ledger[ci];
    e.class_index = ci;
    e.partner = group->inverse_class_index(ci);
    e.dropped = reduced && ci == 0;
    if (e.partner == ci) {
      e.role = odd ? QLedgerEntry::Role::SelfOrder2 : QLedgerEntry::Role::SelfFree;
      e.generator = true;
    } else {
      e.role = QLedgerEntry::Role::Paired;
      e.sign = odd ? -1 : 1;
      e.generator = ci < e.partner;
    }
    if (e.dropped || !e.generator) continue;
    if (e.role == QLedgerEntry::Role::SelfOrder2)
      torsion.push_back(2);
    else
      ++free_rank;
  }
  return std::make_shared<QStructure>(group, odd, reduced, free_rank, std::move(torsion),
                                      std::move(ledger));
}

}  // namespace

QStructurePtr q_structure(const GroupPtr& group, long long d, bool reduced) {
  const bool odd = odd_parity(d);
  const QKey key{group.get(), odd, reduced};
  {
    std::shared_lock lock(q_cache_mutex);
    auto it = q_cache().find(key);
    if (it != q_cache().end()) return it->second;
  }
  std::unique_lock lock(q_cache_mutex);
  auto it = q_cache().find(key);
  if (it != q_cache().end()) return it->second;
  QStructurePtr s = compute_q_structure(group, odd, reduced);
  q_cache().emplace(key, s);
  return s;
}

AbelianStructure q_structure_snf_oracle(const GroupPtr& group, long long d, bool reduced) {
  const bool odd = odd_parity(d);
  const auto& classes = group->conjugacy_classes();
  const std::size_t n = classes.size();
  IntMatrix rel(n + (reduced ? 1 : 0), n);
  for (std::size_t ci = 0; ci < n; ++ci) {
    rel.at(ci, ci) += 1;
    rel.at(ci, group->inverse_class_index(ci)) -= odd ? Int(-1) : Int(1);
  }
  if (reduced) rel.at(n, 0) = 1;
  return cokernel_structure(rel);
}

bool has_two_torsion(const QStructure& s) { return !s.torsion().empty(); }

QElement q_reduce(const ClassVector& v, long long d, bool reduced) {
  QStructurePtr s = q_structure(v.group(), d, reduced);
  const auto& group = v.group();
  const auto& classes = group->conjugacy_classes();
  const auto& ledger = s->ledger();
  ClassVector out(group);
  for (const auto& [rep, c] : v.coefficients()) {
    const QLedgerEntry& e = ledger[group->class_index(rep)];
    if (e.dropped) continue;
    if (e.role == QLedgerEntry::Role::Paired && !e.generator)
      out.add(classes[e.partner].representative, e.sign * c);
    else
      out.add(rep, c);
  }
  // order-2 generators carry a coefficient in {0,1}
  std::vector<std::pair<GroupElement, Int>> fixups;
  for (const auto& [rep, c] : out.coefficients()) {
    const QLedgerEntry& e = ledger[group->class_index(rep)];
    if (e.role == QLedgerEntry::Role::SelfOrder2) {
      Int canon = mod2(c);
      if (canon != c) fixups.emplace_back(rep, canon - c);
    }
  }
  for (const auto& [rep, delta] : fixups) out.add(rep, delta);
  return QElement(std::move(s), std::move(out));
}

QElement q_scale(const QElement& q, const Int& k) {
  ClassVector lifted = q.vector();
  lifted *= k;
  const auto& s = *q.structure();
  return q_reduce(lifted, s.odd() ? 1 : 0, s.reduced());
}

ClassVector transfer(const QElement& q) {
  const QStructure& s = *q.structure();
  const long long d = s.odd() ? 1 : 0;
  const ClassVector& lift = q.vector();
  ClassVector out = lift + bar(lift, d);

  // Tripwire: adding any orbit relation to the lift must not change the
  // image (exactly, or modulo the identity class for the reduced group).
  const auto& group = lift.group();
  const auto& classes = group->conjugacy_classes();
  auto check_relation = [&](const ClassVector& rel) {
    ClassVector shifted = lift + rel;
    ClassVector alt = shifted + bar(shifted, d);
    if (s.reduced() ? reduce_trace(alt) != reduce_trace(out) : alt != out)
      throw std::logic_error("transfer is not well-defined on cosets");
  };
  for (const auto& [rep, c] : lift.coefficients()) {
    const QLedgerEntry& e = s.ledger()[group->class_index(rep)];
    ClassVector rel(group);
    rel.add(rep, 1);
    if (e.role == QLedgerEntry::Role::SelfOrder2) {
      rel.add(rep, 1);  // 2[c] ~ 0
    } else {
      rel -= bar(rel, d);  // [c] - (-1)^d [c*] ~ 0
    }
    if (!rel.is_zero()) check_relation(rel);
  }
  if (s.reduced()) {
    ClassVector rel(group);
    rel.add(classes[0].representative, 1);
    check_relation(rel);
  }
  return out;
}

bool times2_composite_check(const GroupPtr& group, long long d, std::size_t samples,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto& classes = group->conjugacy_classes();
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<std::size_t> pick(0, classes.size() - 1);

  for (bool reduced : {false, true}) {
    QStructurePtr s = q_structure(group, d, reduced);
    auto check = [&](const QElement& q) {
      QElement doubled = q_reduce(transfer(q), d, reduced);
      return doubled == q_scale(q, 2);
    };
    for (const QLedgerEntry& e : s->ledger()) {
      if (!e.generator || e.dropped) continue;
      ClassVector basis(group);
      basis.add(classes[e.class_index].representative, 1);
      if (!check(QElement(s, std::move(basis)))) return false;
    }
    for (std::size_t k = 0; k < samples; ++k) {
      ClassVector v(group);
      for (std::size_t t = 0; t < 4; ++t)
        v.add(classes[pick(rng)].representative, coeff(rng));
      if (!check(q_reduce(v, d, reduced))) return false;
    }
  }
  return true;
}

}  // namespace hstrace
