#include "hstrace/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "hstrace/smith.hpp"

namespace hstrace {

namespace {

Int positive_mod(const Int& a, const Int& f) {
  Int r = a % f;
  if (r < 0) r += f;
  return r;
}

std::string fmt(const char* head, std::size_t i) {
  std::ostringstream os;
  os << head << i;
  return os.str();
}

}  // namespace

std::uint32_t Group::PermBackend::find(const std::vector<std::uint32_t>& p) const {
  auto it = std::lower_bound(lookup.begin(), lookup.end(), p,
                             [](const auto& e, const auto& key) { return e.first < key; });
  if (it == lookup.end() || it->first != p)
    throw std::logic_error("permutation not in enumerated group");
  return it->second;
}

GroupPtr Group::from_table(std::vector<std::vector<std::uint32_t>> mul, std::string name) {
  const std::size_t n = mul.size();
  if (n == 0) throw ValidationError("table group: size must be >= 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (mul[i].size() != n)
      throw ValidationError("table group: row " + std::to_string(i) + " has " +
                            std::to_string(mul[i].size()) + " entries, expected " +
                            std::to_string(n));
    for (std::size_t j = 0; j < n; ++j)
      if (mul[i][j] >= n)
        throw ValidationError("table group: mul[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] = " + std::to_string(mul[i][j]) +
                              " out of range [0, " + std::to_string(n) + ")");
  }
  // Latin square
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<bool> seen(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      if (seen[mul[i][j]])
        throw ValidationError("table group: mul[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] duplicates value " +
                              std::to_string(mul[i][j]) + " in row " + std::to_string(i));
      seen[mul[i][j]] = true;
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (seen[mul[i][j]])
        throw ValidationError("table group: mul[" + std::to_string(i) + "][" +
                              std::to_string(j) + "] duplicates value " +
                              std::to_string(mul[i][j]) + " in column " + std::to_string(j));
      seen[mul[i][j]] = true;
    }
  }
  // locate the two-sided identity, relabel it to index 0 if necessary
  std::size_t e = n;
  for (std::size_t c = 0; c < n && e == n; ++c) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j)
      ok = mul[c][j] == j && mul[j][c] == j;
    if (ok) e = c;
  }
  if (e == n) throw ValidationError("table group: no two-sided identity element");
  if (e != 0) {
    auto relabel = [&](std::uint32_t x) -> std::uint32_t {
      if (x == 0) return static_cast<std::uint32_t>(e);
      if (x == e) return 0;
      return x;
    };
    std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        out[relabel(static_cast<std::uint32_t>(i))][relabel(static_cast<std::uint32_t>(j))] =
            relabel(mul[i][j]);
    mul = std::move(out);
  }
  // two-sided inverses
  std::vector<std::uint32_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t b = 0;
    while (mul[a][b] != 0) ++b;
    if (mul[b][a] != 0)
      throw ValidationError("table group: element " + std::to_string(a) +
                            " has no two-sided inverse");
    inv[a] = static_cast<std::uint32_t>(b);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw ValidationError("table group: (a*b)*c != a*(b*c) at (a,b,c) = (" +
                                std::to_string(a) + "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");

  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = BackendKind::Table;
  g->name_ = std::move(name);
  TableBackend t{};
  t.n = n;
  t.mul.reserve(n * n);
  for (const auto& row : mul) t.mul.insert(t.mul.end(), row.begin(), row.end());
  t.inv = std::move(inv);
  bool abelian = true;
  for (std::size_t i = 0; i < n && abelian; ++i)
    for (std::size_t j = i + 1; j < n && abelian; ++j)
      abelian = t.mul[i * n + j] == t.mul[j * n + i];
  g->abelian_ = abelian;
  g->backend_ = std::move(t);
  return g;
}

GroupPtr Group::from_permutations(std::size_t degree,
                                  std::vector<std::vector<std::uint32_t>> generators,
                                  std::size_t order_bound, std::string name) {
  if (degree == 0) throw ValidationError("perm group: degree must be >= 1");
  for (std::size_t gi = 0; gi < generators.size(); ++gi) {
    const auto& p = generators[gi];
    if (p.size() != degree)
      throw ValidationError("perm group: generator " + std::to_string(gi) + " has " +
                            std::to_string(p.size()) + " images, expected degree " +
                            std::to_string(degree));
    std::vector<bool> seen(degree, false);
    for (std::size_t k = 0; k < degree; ++k) {
      if (p[k] >= degree)
        throw ValidationError("perm group: generator " + std::to_string(gi) + " image [" +
                              std::to_string(k) + "] = " + std::to_string(p[k]) +
                              " out of range");
      if (seen[p[k]])
        throw ValidationError("perm group: generator " + std::to_string(gi) +
                              " is not a permutation (value " + std::to_string(p[k]) +
                              " repeated)");
      seen[p[k]] = true;
    }
  }

  PermBackend b{};
  b.degree = degree;
  b.generators = generators;

  auto compose = [degree](const std::vector<std::uint32_t>& p,
                          const std::vector<std::uint32_t>& q) {
    // (p o q)(k) = p(q(k)); the product p*q applies q first
    std::vector<std::uint32_t> out(degree);
    for (std::size_t k = 0; k < degree; ++k) out[k] = p[q[k]];
    return out;
  };

  std::vector<std::uint32_t> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  b.elements.push_back(id);
  index.emplace(id, 0);
  for (std::size_t head = 0; head < b.elements.size(); ++head) {
    for (const auto& gen : generators) {
      auto p = compose(b.elements[head], gen);
      if (index.count(p)) continue;
      if (b.elements.size() >= order_bound)
        throw PreconditionError("perm group: enumeration exceeds order bound " +
                                std::to_string(order_bound));
      index.emplace(p, static_cast<std::uint32_t>(b.elements.size()));
      b.elements.push_back(std::move(p));
    }
  }
  b.lookup.assign(index.begin(), index.end());

  const std::size_t n = b.elements.size();
  b.inv.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> ip(degree);
    for (std::size_t k = 0; k < degree; ++k) ip[b.elements[i][k]] = static_cast<std::uint32_t>(k);
    b.inv[i] = b.find(ip);
  }

  bool abelian = true;
  for (std::size_t i = 0; i < generators.size() && abelian; ++i)
    for (std::size_t j = i + 1; j < generators.size() && abelian; ++j)
      abelian = compose(generators[i], generators[j]) == compose(generators[j], generators[i]);

  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = BackendKind::Perm;
  g->name_ = std::move(name);
  g->order_bound_ = order_bound;
  g->abelian_ = abelian;
  g->backend_ = std::move(b);
  return g;
}

GroupPtr Group::fg_abelian(std::size_t free_rank, std::vector<Int> invariant_factors,
                           std::size_t order_bound, std::string name) {
  for (std::size_t i = 0; i < invariant_factors.size(); ++i)
    if (invariant_factors[i] < 2)
      throw ValidationError("fgabelian group: invariant_factors[" + std::to_string(i) +
                            "] must be >= 2");
  // normalize to a divisibility chain via the SNF of the diagonal relations
  if (!invariant_factors.empty()) {
    IntMatrix rel(invariant_factors.size(), invariant_factors.size());
    for (std::size_t i = 0; i < invariant_factors.size(); ++i)
      rel.at(i, i) = invariant_factors[i];
    SmithResult snf = smith_normal_form(std::move(rel));
    invariant_factors.clear();
    for (const Int& d : snf.invariants)
      if (d > 1) invariant_factors.push_back(d);
  }

  auto g = std::shared_ptr<Group>(new Group());
  g->kind_ = BackendKind::FgAbelian;
  g->name_ = std::move(name);
  g->order_bound_ = order_bound;
  g->abelian_ = true;
  AbelianBackend b{};
  b.free_rank = free_rank;
  b.factors = std::move(invariant_factors);
  g->backend_ = std::move(b);
  return g;
}

std::size_t Group::finite_size() const {
  switch (kind_) {
    case BackendKind::Table:
      return std::get<TableBackend>(backend_).n;
    case BackendKind::Perm:
      return std::get<PermBackend>(backend_).elements.size();
    default:
      throw std::logic_error("finite_size on fgabelian backend");
  }
}

bool Group::is_finite() const {
  if (kind_ != BackendKind::FgAbelian) return true;
  return std::get<AbelianBackend>(backend_).free_rank == 0;
}

bool Group::is_trivial() const {
  if (kind_ == BackendKind::FgAbelian) {
    const auto& b = std::get<AbelianBackend>(backend_);
    return b.free_rank == 0 && b.factors.empty();
  }
  return finite_size() == 1;
}

Int Group::order() const {
  if (!is_finite())
    throw PreconditionError("group is infinite (free rank " +
                            std::to_string(free_rank()) + ")");
  if (kind_ == BackendKind::FgAbelian) {
    Int n = 1;
    for (const Int& f : std::get<AbelianBackend>(backend_).factors) n *= f;
    return n;
  }
  return Int(finite_size());
}

std::size_t Group::enumerable_order() const {
  Int n = order();
  if (n > Int(order_bound_))
    throw PreconditionError("group order " + n.str() + " exceeds the order bound " +
                            std::to_string(order_bound_));
  return n.convert_to<std::size_t>();
}

GroupElement Group::identity() const {
  if (kind_ == BackendKind::FgAbelian) {
    const auto& b = std::get<AbelianBackend>(backend_);
    return GroupElement::from_coords(std::vector<Int>(b.free_rank + b.factors.size()));
  }
  return GroupElement::at_index(0);
}

bool Group::is_identity(const GroupElement& a) const {
  return canonical(a) == identity();
}

GroupElement Group::element(std::size_t i) const {
  if (kind_ == BackendKind::FgAbelian) {
    const auto& b = std::get<AbelianBackend>(backend_);
    if (b.free_rank != 0)
      throw PreconditionError("cannot enumerate elements of an infinite group");
    std::vector<Int> coords(b.factors.size());
    std::size_t rem = i;
    for (std::size_t t = b.factors.size(); t-- > 0;) {
      std::size_t f = b.factors[t].convert_to<std::size_t>();
      coords[t] = Int(rem % f);
      rem /= f;
    }
    if (rem != 0) throw ValidationError(fmt("element index out of range: ", i));
    return GroupElement::from_coords(std::move(coords));
  }
  if (i >= finite_size()) throw ValidationError(fmt("element index out of range: ", i));
  return GroupElement::at_index(static_cast<std::uint32_t>(i));
}

GroupElement Group::canonical(GroupElement a) const {
  if (kind_ == BackendKind::FgAbelian) {
    const auto& b = std::get<AbelianBackend>(backend_);
    if (a.is_index())
      throw ValidationError("fgabelian element must be a coordinate vector");
    std::vector<Int> coords = a.coords();
    if (coords.size() != b.free_rank + b.factors.size())
      throw ValidationError("fgabelian element has " + std::to_string(coords.size()) +
                            " coordinates, expected " +
                            std::to_string(b.free_rank + b.factors.size()));
    for (std::size_t t = 0; t < b.factors.size(); ++t)
      coords[b.free_rank + t] = positive_mod(coords[b.free_rank + t], b.factors[t]);
    return GroupElement::from_coords(std::move(coords));
  }
  if (!a.is_index())
    throw ValidationError("finite-backend element must be an index");
  if (a.index() >= finite_size())
    throw ValidationError(fmt("element index out of range: ", a.index()));
  return a;
}

std::uint32_t Group::mul_idx(std::uint32_t a, std::uint32_t b) const {
  if (kind_ == BackendKind::Table) {
    const auto& t = std::get<TableBackend>(backend_);
    return t.mul[static_cast<std::size_t>(a) * t.n + b];
  }
  const auto& p = std::get<PermBackend>(backend_);
  std::vector<std::uint32_t> out(p.degree);
  const auto& pa = p.elements[a];
  const auto& pb = p.elements[b];
  for (std::size_t k = 0; k < p.degree; ++k) out[k] = pa[pb[k]];
  return p.find(out);
}

std::uint32_t Group::inv_idx(std::uint32_t a) const {
  if (kind_ == BackendKind::Table) return std::get<TableBackend>(backend_).inv[a];
  return std::get<PermBackend>(backend_).inv[a];
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const {
  GroupElement ca = canonical(a), cb = canonical(b);
  if (kind_ == BackendKind::FgAbelian) {
    std::vector<Int> coords = ca.coords();
    const auto& other = cb.coords();
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] += other[k];
    return canonical(GroupElement::from_coords(std::move(coords)));
  }
  return GroupElement::at_index(mul_idx(ca.index(), cb.index()));
}

GroupElement Group::inverse(const GroupElement& a) const {
  GroupElement ca = canonical(a);
  if (kind_ == BackendKind::FgAbelian) {
    std::vector<Int> coords = ca.coords();
    for (Int& c : coords) c = -c;
    return canonical(GroupElement::from_coords(std::move(coords)));
  }
  return GroupElement::at_index(inv_idx(ca.index()));
}

GroupElement Group::conjugate(const GroupElement& g, const GroupElement& x) const {
  return multiply(multiply(g, x), inverse(g));
}

std::optional<Int> Group::element_order(const GroupElement& a) const {
  GroupElement ca = canonical(a);
  if (kind_ == BackendKind::FgAbelian) {
    const auto& b = std::get<AbelianBackend>(backend_);
    const auto& coords = ca.coords();
    for (std::size_t k = 0; k < b.free_rank; ++k)
      if (coords[k] != 0) return std::nullopt;
    Int ord = 1;
    for (std::size_t t = 0; t < b.factors.size(); ++t) {
      const Int& f = b.factors[t];
      Int c = coords[b.free_rank + t];
      Int o = c == 0 ? Int(1) : f / gcd(f, c);
      ord = lcm(ord, o);
    }
    return ord;
  }
  std::uint32_t cur = ca.index();
  Int ord = 1;
  while (cur != 0) {
    cur = mul_idx(cur, ca.index());
    ++ord;
  }
  return ord;
}

void Group::ensure_classes() const {
  std::call_once(classes_once_, [this] {
    ClassCache cache;
    if (kind_ == BackendKind::FgAbelian) {
      const std::size_t n = enumerable_order();
      cache.classes.reserve(n);
      for (std::size_t i = 0; i < n; ++i) {
        GroupElement e = element(i);
        ConjClass c;
        c.representative = e;
        c.members = {e};
        c.size = 1;
        cache.classes.push_back(std::move(c));
      }
      cache.inverse_class.resize(n);
      for (std::size_t i = 0; i < n; ++i)
        cache.inverse_class[i] =
            abelian_class_index(inverse(cache.classes[i].representative));
    } else {
      const std::size_t n = finite_size();
      cache.class_index_of.assign(n, UINT32_MAX);
      for (std::uint32_t x = 0; x < n; ++x) {
        if (cache.class_index_of[x] != UINT32_MAX) continue;
        std::set<std::uint32_t> orbit;
        for (std::uint32_t g = 0; g < n; ++g)
          orbit.insert(mul_idx(mul_idx(g, x), inv_idx(g)));
        const auto ci = static_cast<std::uint32_t>(cache.classes.size());
        ConjClass c;
        c.size = orbit.size();
        c.members.reserve(orbit.size());
        for (std::uint32_t m : orbit) {
          cache.class_index_of[m] = ci;
          c.members.push_back(GroupElement::at_index(m));
        }
        c.representative = c.members.front();  // least index: x itself
        cache.classes.push_back(std::move(c));
      }
      cache.inverse_class.resize(cache.classes.size());
      for (std::size_t ci = 0; ci < cache.classes.size(); ++ci) {
        const auto& cls = cache.classes[ci];
        std::size_t target = cache.class_index_of[inv_idx(cls.representative.index())];
        // inversion is well-defined on classes: every member must agree
        for (const GroupElement& m : cls.members)
          if (cache.class_index_of[inv_idx(m.index())] != target)
            throw std::logic_error("class inversion is not well-defined");
        cache.inverse_class[ci] = target;
      }
    }
    class_cache_ = std::move(cache);
  });
}

const std::vector<ConjClass>& Group::conjugacy_classes() const {
  ensure_classes();
  return class_cache_.classes;
}

GroupElement Group::class_of(const GroupElement& a) const {
  GroupElement ca = canonical(a);
  if (abelian_) return ca;
  ensure_classes();
  return class_cache_.classes[class_cache_.class_index_of[ca.index()]].representative;
}

std::size_t Group::abelian_class_index(const GroupElement& a) const {
  const auto& b = std::get<AbelianBackend>(backend_);
  std::size_t idx = 0;
  for (std::size_t t = 0; t < b.factors.size(); ++t) {
    idx = idx * b.factors[t].convert_to<std::size_t>() +
          a.coords()[b.free_rank + t].convert_to<std::size_t>();
  }
  return idx;
}

std::size_t Group::class_index(const GroupElement& a) const {
  GroupElement ca = canonical(a);
  if (kind_ == BackendKind::FgAbelian) {
    if (!is_finite())
      throw PreconditionError("class indices require a finite group");
    return abelian_class_index(ca);
  }
  ensure_classes();
  return class_cache_.class_index_of[ca.index()];
}

GroupElement Group::inverse_class(const GroupElement& rep) const {
  return class_of(inverse(rep));
}

std::size_t Group::inverse_class_index(std::size_t ci) const {
  ensure_classes();
  if (ci >= class_cache_.inverse_class.size())
    throw ValidationError(fmt("class index out of range: ", ci));
  return class_cache_.inverse_class[ci];
}

std::size_t Group::free_rank() const {
  if (kind_ != BackendKind::FgAbelian)
    throw PreconditionError("free_rank is defined for fgabelian groups only");
  return std::get<AbelianBackend>(backend_).free_rank;
}

const std::vector<Int>& Group::invariant_factors() const {
  if (kind_ != BackendKind::FgAbelian)
    throw PreconditionError("invariant_factors is defined for fgabelian groups only");
  return std::get<AbelianBackend>(backend_).factors;
}

std::pair<GroupPtr, GroupPtr> Group::primary_decomposition() const {
  if (kind_ != BackendKind::FgAbelian)
    throw PreconditionError("primary_decomposition requires an fgabelian group");
  const auto& b = std::get<AbelianBackend>(backend_);
  std::vector<Int> two, odd;
  for (const Int& f : b.factors) {
    Int m = f, t = 1;
    while (m % 2 == 0) {
      m /= 2;
      t *= 2;
    }
    if (t > 1) two.push_back(t);
    if (m > 1) odd.push_back(m);
  }
  return {fg_abelian(0, std::move(two), order_bound_),
          fg_abelian(b.free_rank, std::move(odd), order_bound_)};
}

bool Group::all_nontrivial_odd_order() const {
  if (kind_ == BackendKind::FgAbelian) {
    const auto& b = std::get<AbelianBackend>(backend_);
    if (b.free_rank != 0)
      throw PreconditionError(
          "all_nontrivial_odd_order is undecidable by enumeration: group has free part");
    for (const Int& f : b.factors)
      if (f % 2 == 0) return false;
    return true;
  }
  const std::size_t n = finite_size();
  bool by_elements = true;
  for (std::size_t i = 1; i < n && by_elements; ++i) {
    Int ord = *element_order(GroupElement::at_index(static_cast<std::uint32_t>(i)));
    by_elements = ord % 2 == 1;
  }
  const bool by_order = n % 2 == 1;
  if (by_elements != by_order)
    throw std::logic_error("element order parity disagrees with the group order parity");
  return by_elements;
}

const std::vector<std::uint32_t>& Group::table_flat() const {
  if (kind_ != BackendKind::Table)
    throw PreconditionError("table access requires the table backend");
  return std::get<TableBackend>(backend_).mul;
}

std::size_t Group::degree() const {
  if (kind_ != BackendKind::Perm)
    throw PreconditionError("degree requires the perm backend");
  return std::get<PermBackend>(backend_).degree;
}

const std::vector<std::vector<std::uint32_t>>& Group::generators() const {
  if (kind_ != BackendKind::Perm)
    throw PreconditionError("generators require the perm backend");
  return std::get<PermBackend>(backend_).generators;
}

std::vector<Int> abelian_invariant_factors(const Group& g) {
  if (!g.is_abelian())
    throw PreconditionError("abelian_invariant_factors requires an abelian group");
  const std::size_t n = g.enumerable_order();
  std::vector<std::size_t> orders(n);
  for (std::size_t i = 0; i < n; ++i)
    orders[i] = g.element_order(g.element(i))->convert_to<std::size_t>();

  std::vector<std::size_t> primes;
  std::size_t m = n;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      primes.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) primes.push_back(m);

  // For each prime, recover the partition of the p-part from the counts
  // s_k with p^{s_k} = #{x : x^{p^k} = e}.
  std::vector<std::vector<std::size_t>> partitions;  // descending exponent lists
  for (std::size_t p : primes) {
    std::vector<std::size_t> s{0};
    for (;;) {
      std::size_t pk = 1;
      for (std::size_t t = 0; t < s.size(); ++t) pk *= p;
      std::size_t count = 0;
      for (std::size_t o : orders)
        if (pk % o == 0) ++count;
      std::size_t sk = 0;
      for (std::size_t c = count; c > 1; c /= p) {
        if (c % p != 0) throw std::logic_error("power-count is not a prime power");
        ++sk;
      }
      if (sk == s.back()) break;
      s.push_back(sk);
    }
    std::vector<std::size_t> parts;
    for (std::size_t k = 1; k < s.size(); ++k) {
      std::size_t at_least_k = s[k] - s[k - 1];
      std::size_t at_least_k1 = k + 1 < s.size() ? s[k + 1] - s[k] : 0;
      for (std::size_t c = at_least_k1; c < at_least_k; ++c) parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    partitions.push_back(std::move(parts));
  }

  std::size_t len = 0;
  for (const auto& parts : partitions) len = std::max(len, parts.size());
  std::vector<Int> factors;
  for (std::size_t j = 0; j < len; ++j) {
    Int d = 1;
    for (std::size_t pi = 0; pi < primes.size(); ++pi) {
      if (j >= partitions[pi].size()) continue;
      for (std::size_t t = 0; t < partitions[pi][j]; ++t) d *= Int(primes[pi]);
    }
    factors.push_back(d);
  }
  std::reverse(factors.begin(), factors.end());  // ascending chain
  return factors;
}

}  // namespace hstrace
