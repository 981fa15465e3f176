#pragma once

#include <algorithm>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <hstrace/group_ring.hpp>
#include <hstrace/io.hpp>

namespace testutil {

using namespace hstrace;

inline GroupPtr z_mod(long n, std::string name = {}) {
  return Group::fg_abelian(0, {Int(n)}, Group::kDefaultOrderBound, std::move(name));
}

inline GroupPtr z_free(std::size_t rank) { return Group::fg_abelian(rank, {}); }

inline GroupElement zn(long k) { return GroupElement::from_coords({Int(k)}); }

// S3 generated by a transposition and a 3-cycle. Breadth-first enumeration
// gives: 0 = id, 1 = (01), 2 = (012), 3 = (12), 4 = (02), 5 = (021).
inline GroupPtr s3_perm() {
  return Group::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, Group::kDefaultOrderBound,
                                  "S3");
}

inline std::filesystem::path catalog_dir() { return HSTRACE_CATALOG_DIR; }

struct CatalogGroup {
  std::string file;
  GroupPtr group;
};

inline std::vector<CatalogGroup> load_catalog(std::size_t max_order) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(catalog_dir()))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<CatalogGroup> out;
  for (const auto& f : files) {
    GroupPtr g = load_group(f);
    if (g->order() <= Int(max_order)) out.push_back({f.filename().string(), g});
  }
  return out;
}

// ----------------------------------------------------------------- oracles

// Conjugacy class sizes computed directly from a raw multiplication table,
// independent of the Group implementation.
inline std::vector<std::size_t> oracle_class_sizes(
    const std::vector<std::vector<std::uint32_t>>& mul) {
  const std::size_t n = mul.size();
  auto inv = [&](std::uint32_t a) {
    for (std::uint32_t b = 0; b < n; ++b)
      if (mul[a][b] == 0) return b;
    throw std::logic_error("no inverse");
  };
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> sizes;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::set<std::uint32_t> orbit;
    for (std::uint32_t g = 0; g < n; ++g) orbit.insert(mul[mul[g][x]][inv(g)]);
    for (std::uint32_t m : orbit) seen[m] = true;
    sizes.push_back(orbit.size());
  }
  return sizes;
}

// ------------------------------------------------------------- generators

inline GroupElement random_element(const GroupPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g->enumerable_order() - 1);
  return g->element(pick(rng));
}

inline GroupRingElement random_ring_element(const GroupPtr& g, std::mt19937_64& rng,
                                            int max_support = 3, int coeff_bound = 3) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  std::uniform_int_distribution<int> support(0, max_support);
  GroupRingElement out(g);
  const int k = support(rng);
  for (int t = 0; t < k; ++t) out.add_term(random_element(g, rng), coeff(rng));
  return out;
}

inline GroupRingMatrix random_matrix(const GroupPtr& g, std::size_t n,
                                     std::mt19937_64& rng, int max_support = 3,
                                     int coeff_bound = 3) {
  GroupRingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = random_ring_element(g, rng, max_support, coeff_bound);
  return m;
}

inline ClassVector random_class_vector(const GroupPtr& g, std::mt19937_64& rng,
                                       int terms = 4, int coeff_bound = 9) {
  std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
  ClassVector v(g);
  for (int t = 0; t < terms; ++t) v.add(random_element(g, rng), coeff(rng));
  return v;
}

// A random product of elementary matrices I + c*g*E_{ij} together with its
// exact inverse (factors inverted in reverse order).
inline std::pair<GroupRingMatrix, GroupRingMatrix> random_invertible(
    const GroupPtr& g, std::size_t n, std::mt19937_64& rng, int factors = 3) {
  GroupRingMatrix u = GroupRingMatrix::identity(g, n);
  GroupRingMatrix uinv = GroupRingMatrix::identity(g, n);
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  std::uniform_int_distribution<int> coeff(-2, 2);
  for (int f = 0; f < factors; ++f) {
    std::size_t i = pos(rng), j = pos(rng);
    if (i == j) continue;
    Int c = coeff(rng);
    GroupElement e = random_element(g, rng);
    GroupRingMatrix step = GroupRingMatrix::identity(g, n);
    step.at(i, j).add_term(e, c);
    GroupRingMatrix step_inv = GroupRingMatrix::identity(g, n);
    step_inv.at(i, j).add_term(e, -c);
    u = u * step;
    uinv = step_inv * uinv;
  }
  return {u, uinv};
}

}  // namespace testutil
