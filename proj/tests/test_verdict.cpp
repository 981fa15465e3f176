#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <hstrace/verdict.hpp>

#include "test_util.hpp"

using namespace hstrace;
using namespace testutil;

namespace {

bool has_rule(const Verdict& v, const std::string& rule) {
  for (const auto& step : v.certificate)
    if (step.rule == rule) return true;
  return false;
}

// All invariant-factor chains d1 | d2 | ... with product <= max_order.
void chains_rec(long product, long last, long max_order, std::vector<Int>& cur,
                std::vector<std::vector<Int>>& out) {
  out.push_back(cur);
  for (long d = std::max(last, 2L); product * d <= max_order; ++d) {
    if (d % last != 0 && last >= 2) continue;
    cur.push_back(Int(d));
    chains_rec(product * d, d, max_order, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<Int>> abelian_chains(long max_order) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur;
  chains_rec(1, 1, max_order, cur, out);
  return out;
}

SpaceHypotheses hypo(GroupPtr g, long long d, bool hf = false) {
  SpaceHypotheses h;
  h.group = std::move(g);
  h.dimension = d;
  h.homotopy_finite = hf;
  return h;
}

}  // namespace

TEST_CASE("abelian elementary-2 criterion on pinned examples") {
  CHECK(check_abelian_elementary_two(Group::fg_abelian(0, {Int(2), Int(2)}), 4).holds);
  CHECK_FALSE(check_abelian_elementary_two(z_mod(4), 4).holds);
  CHECK_FALSE(check_abelian_elementary_two(z_mod(3), 5).holds);
  // table backends go through the order-statistics decomposition
  CHECK(check_abelian_elementary_two(load_group(catalog_dir() / "C2xC2.json"), 4).holds);
  CHECK(check_abelian_elementary_two(load_group(catalog_dir() / "C6xC2.json"), 6).holds);
  CHECK_FALSE(check_abelian_elementary_two(load_group(catalog_dir() / "S3.json"), 4).holds);
  CHECK_FALSE(
      check_abelian_elementary_two(load_group(catalog_dir() / "C4xC2.json"), 4).holds);
  // infinite fgabelian: free part goes to the complement
  CHECK(check_abelian_elementary_two(Group::fg_abelian(3, {Int(2)}), 8).holds);
}

TEST_CASE("odd-order criterion on pinned examples") {
  CHECK(check_odd_order_group(z_mod(5), 4).holds);
  CHECK_FALSE(check_odd_order_group(s3_perm(), 6).holds);
  CHECK_FALSE(check_odd_order_group(z_mod(7), 3).holds);
}

TEST_CASE("free involution partition of Z/5") {
  InvolutionPartition p = free_involution_partition(z_mod(5));
  REQUIRE(p.free);
  CHECK(p.t_minus == std::vector<std::size_t>{1, 2});
  CHECK(p.t_plus == std::vector<std::size_t>{4, 3});
}

TEST_CASE("involution witnesses") {
  GroupPtr z2 = z_mod(2);
  InvolutionPartition p = free_involution_partition(z2);
  REQUIRE_FALSE(p.free);
  CHECK(p.witness_x == zn(1));
  CHECK(p.witness_g == z2->identity());

  GroupPtr g = s3_perm();
  InvolutionPartition q = free_involution_partition(g);
  REQUIRE_FALSE(q.free);
  CHECK_FALSE(g->is_identity(q.witness_x));
  CHECK(g->conjugate(q.witness_g, q.witness_x) == g->inverse(q.witness_x));
  // the relation the witness certifies also holds for the 3-cycle class:
  // conjugating the 3-cycle (012) by the transposition (01) inverts it
  CHECK(g->conjugate(g->element(1), g->element(2)) == g->inverse(g->element(2)));
}

TEST_CASE("partition exists iff the group order is odd (catalog, order <= 15)") {
  for (const auto& [file, g] : load_catalog(15)) {
    CAPTURE(file);
    InvolutionPartition p = free_involution_partition(g);
    CHECK(p.free == (g->order() % 2 == 1));
    if (p.free) {
      REQUIRE(p.t_minus.size() == p.t_plus.size());
      for (std::size_t i = 0; i < p.t_minus.size(); ++i) {
        CHECK(g->inverse_class_index(p.t_minus[i]) == p.t_plus[i]);
        CHECK(g->inverse_class_index(p.t_plus[i]) == p.t_minus[i]);
      }
    } else {
      CHECK_FALSE(g->is_identity(p.witness_x));
      CHECK(g->conjugate(p.witness_g, p.witness_x) == g->inverse(p.witness_x));
    }
  }
}

TEST_CASE("verdict: nonzero reduced characteristic blocks the embedding") {
  GroupPtr z3 = z_mod(3);
  SpaceHypotheses h = hypo(z3, 4);
  ClassVector r(z3);
  r.add(zn(1), 1);
  h.reduced_char = r;
  Verdict v = embedding_verdict(h);
  CHECK(v.outcome == Verdict::Outcome::NoEmbedding);
  REQUIRE_FALSE(v.certificate.empty());
  CHECK(v.certificate.front().rule == "reduced-characteristic-nonzero");
}

TEST_CASE("verdict: odd-order group in even dimension embeds") {
  Verdict v = embedding_verdict(hypo(z_mod(5), 4, /*hf=*/true));
  CHECK(v.outcome == Verdict::Outcome::EmbeddingExists);
  CHECK(has_rule(v, "finiteness-hypothesis"));
  CHECK(has_rule(v, "transfer-of-obstruction-vanishes"));
  CHECK(has_rule(v, "obstruction-order-divides-two"));
  CHECK(has_rule(v, "qtilde-torsion-free"));
  CHECK(has_rule(v, "diagonal-embedding-exists"));
}

TEST_CASE("verdict: 2-torsion in the reduced coinvariants is inconclusive") {
  Verdict v = embedding_verdict(hypo(z_mod(2), 5, /*hf=*/true));
  CHECK(v.outcome == Verdict::Outcome::Inconclusive);
  CHECK(has_rule(v, "qtilde-has-two-torsion"));
}

TEST_CASE("verdict: failed gates are named") {
  // no finiteness hypothesis for an infinite group
  Verdict a = embedding_verdict(hypo(z_free(1), 4));
  CHECK(a.outcome == Verdict::Outcome::Inconclusive);
  CHECK(has_rule(a, "missing-finiteness-hypothesis"));

  // dimension below four
  Verdict b = embedding_verdict(hypo(z_mod(5), 3, /*hf=*/true));
  CHECK(b.outcome == Verdict::Outcome::Inconclusive);
  CHECK(has_rule(b, "dimension-below-four"));
}

TEST_CASE("verdict for infinite fgabelian groups") {
  // Z with homotopy finiteness: torsion-free in every parity
  CHECK(embedding_verdict(hypo(z_free(1), 4, true)).outcome ==
        Verdict::Outcome::EmbeddingExists);
  CHECK(embedding_verdict(hypo(z_free(1), 5, true)).outcome ==
        Verdict::Outcome::EmbeddingExists);
  // Z x Z/2 in odd dimension has a 2-torsion class
  GroupPtr zx2 = Group::fg_abelian(1, {Int(2)});
  CHECK(embedding_verdict(hypo(zx2, 5, true)).outcome ==
        Verdict::Outcome::Inconclusive);
  CHECK(embedding_verdict(hypo(zx2, 4, true)).outcome ==
        Verdict::Outcome::EmbeddingExists);
}

TEST_CASE("verdict: contradictory hypotheses are errors") {
  GroupPtr z3 = z_mod(3);
  SpaceHypotheses h = hypo(z3, 4, /*hf=*/true);
  ClassVector r(z3);
  r.add(zn(1), 1);
  h.reduced_char = r;
  CHECK_THROWS_AS(embedding_verdict(h), PreconditionError);

  // supplied vector must agree with a supplied complex
  SpaceHypotheses h2 = hypo(z3, 4);
  h2.reduced_char = r;
  h2.complex =
      IdempotentComplex::create(z3, {{0, GroupRingMatrix::identity(z3, 1)}});
  CHECK_THROWS_AS(embedding_verdict(h2), ValidationError);
}

TEST_CASE("verdict consumes a complex and reports the source") {
  GroupPtr z3 = z_mod(3);
  SpaceHypotheses h = hypo(z3, 4, /*hf=*/true);
  h.complex = IdempotentComplex::create(
      z3, {{0, GroupRingMatrix::identity(z3, 2)}, {1, GroupRingMatrix::identity(z3, 1)}});
  Verdict v = embedding_verdict(h);
  CHECK(v.outcome == Verdict::Outcome::EmbeddingExists);
  CHECK(v.reduced_char_source == "complex");
  REQUIRE(v.reduced_char.has_value());
  CHECK(v.reduced_char->is_zero());
  CHECK(has_rule(v, "reduced-characteristic-zero"));
}

TEST_CASE("bass default for finite groups is overridable") {
  Verdict def = embedding_verdict(hypo(z_mod(5), 4));
  CHECK(def.bass_holds);
  CHECK(def.bass_source == "finite-group-default");
  CHECK(def.outcome == Verdict::Outcome::EmbeddingExists);

  SpaceHypotheses h = hypo(z_mod(5), 4);
  h.bass_override = false;
  Verdict off = embedding_verdict(h);
  CHECK_FALSE(off.bass_holds);
  CHECK(off.outcome == Verdict::Outcome::Inconclusive);
  CHECK(has_rule(off, "missing-finiteness-hypothesis"));
}

TEST_CASE("elementary-2 criterion implies an embedding verdict (order <= 16, d in {4,6})") {
  for (const auto& factors : abelian_chains(16)) {
    GroupPtr g = Group::fg_abelian(0, factors);
    for (long long d : {4, 6}) {
      CriterionResult c = check_abelian_elementary_two(g, d);
      if (!c.holds) continue;
      Verdict v = embedding_verdict(hypo(g, d));  // bass auto-asserted
      CAPTURE(d);
      REQUIRE(v.outcome == Verdict::Outcome::EmbeddingExists);
    }
  }
}

TEST_CASE("odd-order criterion implies torsion-free reduced coinvariants") {
  for (const auto& [file, g] : load_catalog(15)) {
    CAPTURE(file);
    if (!check_odd_order_group(g, 4).holds) continue;
    CHECK_FALSE(has_two_torsion(*q_structure(g, 4, true)));
    CHECK_FALSE(has_two_torsion(*q_structure(g, 5, true)));
  }
}

TEST_CASE("adding homotopy finiteness never retracts an embedding verdict") {
  for (const auto& [file, g] : load_catalog(12)) {
    CAPTURE(file);
    for (long long d : {3, 4, 5}) {
      Verdict without = embedding_verdict(hypo(g, d, false));
      if (without.outcome != Verdict::Outcome::EmbeddingExists) continue;
      Verdict with_hf = embedding_verdict(hypo(g, d, true));
      REQUIRE(with_hf.outcome == Verdict::Outcome::EmbeddingExists);
    }
  }
}
