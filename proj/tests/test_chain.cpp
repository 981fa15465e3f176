#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hstrace/chain.hpp>

#include "test_util.hpp"

using namespace hstrace;
using namespace testutil;

namespace {

IdempotentComplex identity_complex(const GroupPtr& g,
                                   const std::vector<std::pair<std::size_t, std::size_t>>&
                                       degree_ranks) {
  std::vector<std::pair<std::size_t, GroupRingMatrix>> degrees;
  for (auto [deg, rank] : degree_ranks)
    degrees.emplace_back(deg, GroupRingMatrix::identity(g, rank));
  return IdempotentComplex::create(g, std::move(degrees));
}

}  // namespace

TEST_CASE("circle: two identity degrees over Z[Z] cancel") {
  GroupPtr z = z_free(1);
  IdempotentComplex c = identity_complex(z, {{0, 1}, {1, 1}});
  CHECK(reidemeister_characteristic(c).is_zero());
  CHECK(reidemeister_characteristic(c).augmentation() == 0);
}

TEST_CASE("single degree 0 identity of rank 2") {
  GroupPtr g = s3_perm();
  IdempotentComplex c = identity_complex(g, {{0, 2}});
  ClassVector t = reidemeister_characteristic(c);
  CHECK(t.coefficient(g->identity()) == 2);
  CHECK(t.augmentation() == 2);
  CHECK(reduced_characteristic(c).is_zero());
}

TEST_CASE("conjugated projector in degree 0") {
  GroupPtr z3 = z_mod(3);
  GroupRingMatrix e(z3, 2);
  e.at(0, 0) = GroupRingElement::unit(z3);
  e.at(0, 1) = GroupRingElement::monomial(z3, zn(1), Int(-1));
  REQUIRE(e.is_idempotent());
  IdempotentComplex c = IdempotentComplex::create(z3, {{0, e}});
  ClassVector t = reidemeister_characteristic(c);
  ClassVector expect(z3);
  expect.add(zn(0), 1);
  CHECK(t == expect);
  CHECK(reduced_characteristic(c).is_zero());
}

TEST_CASE("non-idempotent entries are rejected naming the degree") {
  GroupPtr z2 = z_mod(2);
  GroupRingMatrix bad(z2, 1);
  bad.at(0, 0) = GroupRingElement::unit(z2);
  bad.at(0, 0).add_term(zn(1), 1);
  CHECK_THROWS_WITH_AS(
      IdempotentComplex::create(z2, {{0, GroupRingMatrix::identity(z2, 1)}, {2, bad}}),
      doctest::Contains("degree 2"), PreconditionError);
}

TEST_CASE("duplicate degrees are rejected") {
  GroupPtr z2 = z_mod(2);
  CHECK_THROWS_AS(IdempotentComplex::create(z2, {{1, GroupRingMatrix::identity(z2, 1)},
                                                 {1, GroupRingMatrix::identity(z2, 2)}}),
                  ValidationError);
}

TEST_CASE("homotopy finite shadow: all-identity complexes have zero reduced characteristic") {
  for (const GroupPtr& g : {s3_perm(), z_mod(6), z_free(2)}) {
    IdempotentComplex c = identity_complex(g, {{0, 3}, {1, 5}, {2, 2}, {4, 1}});
    CHECK(reduced_characteristic(c).is_zero());
    // augmentation equals the alternating rank sum 3 - 5 + 2 + 1
    CHECK(reidemeister_characteristic(c).augmentation() == 1);
  }
}

TEST_CASE("stabilization invariance") {
  std::mt19937_64 rng(37);
  GroupPtr g = z_mod(4);
  // a pool of idempotents to stabilize: conjugates of diagonal projectors
  for (int rep = 0; rep < 20; ++rep) {
    GroupRingMatrix proj(g, 2);
    proj.at(0, 0) = GroupRingElement::unit(g);
    auto [u, uinv] = random_invertible(g, 2, rng);
    GroupRingMatrix e = u * proj * uinv;
    REQUIRE(e.is_idempotent());
    IdempotentComplex base = IdempotentComplex::create(g, {{0, e}, {1, e}});
    // E (+) 0 leaves every characteristic unchanged
    GroupRingMatrix padded = direct_sum(e, GroupRingMatrix(g, 1));
    IdempotentComplex pad0 = IdempotentComplex::create(g, {{0, padded}, {1, e}});
    CHECK(reidemeister_characteristic(pad0) == reidemeister_characteristic(base));
    // E (+) 1 in degree 1 shifts by -[e], invisible in the reduced form
    GroupRingMatrix plus = direct_sum(e, GroupRingMatrix::identity(g, 1));
    IdempotentComplex pad1 = IdempotentComplex::create(g, {{0, e}, {1, plus}});
    ClassVector unit(g);
    unit.add(g->identity(), 1);
    CHECK(reidemeister_characteristic(pad1) ==
          reidemeister_characteristic(base) - unit);
    CHECK(reduced_characteristic(pad1) == reduced_characteristic(base));
  }
}

TEST_CASE("conjugation invariance in each degree") {
  std::mt19937_64 rng(41);
  GroupPtr g = s3_perm();
  GroupRingMatrix proj(g, 3);
  proj.at(0, 0) = GroupRingElement::unit(g);
  proj.at(1, 1) = GroupRingElement::unit(g);
  for (int rep = 0; rep < 10; ++rep) {
    auto [u, uinv] = random_invertible(g, 3, rng);
    IdempotentComplex a = IdempotentComplex::create(g, {{0, proj}, {3, proj}});
    IdempotentComplex b =
        IdempotentComplex::create(g, {{0, u * proj * uinv}, {3, proj}});
    CHECK(reidemeister_characteristic(a) == reidemeister_characteristic(b));
  }
}

TEST_CASE("augmentation equals the alternating augmented trace") {
  std::mt19937_64 rng(43);
  GroupPtr g = z_mod(3);
  GroupRingMatrix proj(g, 2);
  proj.at(1, 1) = GroupRingElement::unit(g);
  auto [u, uinv] = random_invertible(g, 2, rng);
  GroupRingMatrix e = u * proj * uinv;
  IdempotentComplex c = IdempotentComplex::create(g, {{0, e}, {1, e}, {2, e}});
  Int expected = augmented_trace(e) - augmented_trace(e) + augmented_trace(e);
  CHECK(reidemeister_characteristic(c).augmentation() == expected);
}
