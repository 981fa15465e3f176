#include "hstrace/verdict.hpp"

#include <sstream>

#include "hstrace/format.hpp"

namespace hstrace {

const char* outcome_name(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::NoEmbedding:
      return "NO_EMBEDDING";
    case Verdict::Outcome::EmbeddingExists:
      return "EMBEDDING_EXISTS";
    default:
      return "INCONCLUSIVE";
  }
}

namespace {

std::string factors_text(const std::vector<Int>& factors) {
  std::string out = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) out += ",";
    out += factors[i].str();
  }
  return out + "]";
}

// 2-primary and odd invariant factors of an abelian group, any backend.
struct PrimarySplit {
  std::vector<Int> two, odd;
  std::size_t free_rank = 0;
};

PrimarySplit primary_split(const GroupPtr& g) {
  PrimarySplit out;
  if (g->backend() == BackendKind::FgAbelian) {
    auto [h, k] = g->primary_decomposition();
    out.two = h->invariant_factors();
    out.odd = k->invariant_factors();
    out.free_rank = k->free_rank();
    return out;
  }
  for (const Int& f : abelian_invariant_factors(*g)) {
    Int m = f, t = 1;
    while (m % 2 == 0) {
      m /= 2;
      t *= 2;
    }
    if (t > 1) out.two.push_back(t);
    if (m > 1) out.odd.push_back(m);
  }
  return out;
}

}  // namespace

CriterionResult check_abelian_elementary_two(const GroupPtr& group, long long d) {
  CriterionResult r;
  r.holds = true;

  const bool abelian = group->backend() == BackendKind::FgAbelian || group->is_abelian();
  if (abelian) {
    r.certificate.push_back({"abelian-check", "fundamental group is abelian"});
  } else {
    r.certificate.push_back({"abelian-check", "fails: fundamental group is not abelian"});
    r.holds = false;
  }

  if (d % 2 != 0) {
    r.certificate.push_back(
        {"dimension-check", "fails: d = " + std::to_string(d) + " is odd"});
    r.holds = false;
  } else if (d < 4) {
    r.certificate.push_back(
        {"dimension-check", "fails: d = " + std::to_string(d) + " < 4"});
    r.holds = false;
  } else {
    r.certificate.push_back(
        {"dimension-check", "d = " + std::to_string(d) + " is even and >= 4"});
  }

  if (abelian) {
    PrimarySplit split = primary_split(group);
    bool elementary = true;
    for (const Int& f : split.two)
      if (f != 2) elementary = false;
    std::ostringstream os;
    os << "2-primary subgroup " << factors_text(split.two) << "; complement "
       << factors_text(split.odd) << " with free rank " << split.free_rank;
    if (elementary) {
      r.certificate.push_back(
          {"two-primary-check", os.str() + "; the 2-primary part is elementary abelian"});
    } else {
      r.certificate.push_back(
          {"two-primary-check",
           "fails: " + os.str() + "; the 2-primary part has a factor larger than 2"});
      r.holds = false;
    }
  }
  return r;
}

CriterionResult check_odd_order_group(const GroupPtr& group, long long d) {
  CriterionResult r;
  r.holds = true;

  const bool odd_orders = group->all_nontrivial_odd_order();
  if (odd_orders) {
    r.certificate.push_back({"odd-order-check",
                             "every non-trivial element has odd order (|G| = " +
                                 group->order().str() + ")"});
  } else {
    r.certificate.push_back(
        {"odd-order-check", "fails: the group contains an element of even order"});
    r.holds = false;
  }

  if (d >= 4) {
    r.certificate.push_back({"dimension-check", "d = " + std::to_string(d) + " >= 4"});
  } else {
    r.certificate.push_back(
        {"dimension-check", "fails: d = " + std::to_string(d) + " < 4"});
    r.holds = false;
  }

  if (r.holds) {
    InvolutionPartition p = free_involution_partition(group);
    if (!p.free) throw std::logic_error("odd-order group with a self-inverse class");
    std::ostringstream os;
    os << "inversion pairs the non-identity classes freely: T- = {";
    for (std::size_t i = 0; i < p.t_minus.size(); ++i)
      os << (i ? "," : "") << p.t_minus[i];
    os << "}, T+ = {";
    for (std::size_t i = 0; i < p.t_plus.size(); ++i) os << (i ? "," : "") << p.t_plus[i];
    os << "}";
    r.certificate.push_back({"free-involution-partition", os.str()});
  }
  return r;
}

InvolutionPartition free_involution_partition(const GroupPtr& group) {
  const auto& classes = group->conjugacy_classes();
  InvolutionPartition out;
  for (std::size_t ci = 1; ci < classes.size(); ++ci) {
    std::size_t pj = group->inverse_class_index(ci);
    if (pj == ci) {
      out.free = false;
      out.fixed_class = ci;
      const GroupElement x = classes[ci].representative;
      const GroupElement xinv = group->inverse(x);
      const std::size_t n = group->enumerable_order();
      for (std::size_t i = 0; i < n; ++i) {
        GroupElement g = group->element(i);
        if (group->conjugate(g, x) == xinv) {
          out.witness_g = g;
          out.witness_x = x;
          return out;
        }
      }
      throw std::logic_error("self-inverse class without a conjugating witness");
    }
    if (ci < pj) {
      out.t_minus.push_back(ci);
      out.t_plus.push_back(pj);
    }
  }
  out.free = true;
  return out;
}

Verdict embedding_verdict(const SpaceHypotheses& h) {
  if (!h.group) throw ValidationError("verdict: no group supplied");
  if (h.dimension < 0) throw ValidationError("verdict: dimension must be >= 0");
  const GroupPtr& g = h.group;
  const long long d = h.dimension;

  Verdict v;
  v.homotopy_finite = h.homotopy_finite;
  if (h.bass_override) {
    v.bass_holds = *h.bass_override;
    v.bass_source = "flag";
  } else if (g->is_finite()) {
    // known case of the Bass trace conjecture, assumed unless overridden
    v.bass_holds = true;
    v.bass_source = "finite-group-default";
  } else {
    v.bass_holds = false;
    v.bass_source = "none";
  }

  std::optional<ClassVector> supplied;
  if (h.reduced_char) {
    if (h.reduced_char->group() != g)
      throw ValidationError("verdict: reduced characteristic refers to a different group");
    supplied = reduce_trace(*h.reduced_char);
  }
  std::optional<ClassVector> computed;
  if (h.complex) {
    if (h.complex->group() != g)
      throw ValidationError("verdict: complex refers to a different group");
    computed = reduced_characteristic(*h.complex);
  }
  if (supplied && computed) {
    if (*supplied != *computed)
      throw ValidationError(
          "verdict: supplied reduced characteristic " + class_vector_text(*supplied) +
          " disagrees with the complex value " + class_vector_text(*computed));
    v.reduced_char = supplied;
    v.reduced_char_source = "both";
  } else if (supplied) {
    v.reduced_char = supplied;
    v.reduced_char_source = "supplied";
  } else if (computed) {
    v.reduced_char = computed;
    v.reduced_char_source = "complex";
  } else {
    v.reduced_char_source = "none";
  }

  if (v.reduced_char && !v.reduced_char->is_zero()) {
    if (h.homotopy_finite)
      throw PreconditionError(
          "verdict: contradictory hypotheses: a homotopy finite space has vanishing "
          "reduced characteristic, but r~ = " +
          class_vector_text(*v.reduced_char));
    v.outcome = Verdict::Outcome::NoEmbedding;
    v.certificate.push_back(
        {"reduced-characteristic-nonzero",
         "r~ = " + class_vector_text(*v.reduced_char) + " != 0 (source: " +
             v.reduced_char_source +
             "); a nonzero reduced Reidemeister characteristic rules out a Poincare "
             "embedding of the diagonal"});
    return v;
  }

  if (v.reduced_char)
    v.certificate.push_back({"reduced-characteristic-zero",
                             "r~ = 0 (source: " + v.reduced_char_source + ")"});

  if (!h.homotopy_finite && !v.bass_holds) {
    v.outcome = Verdict::Outcome::Inconclusive;
    v.certificate.push_back(
        {"missing-finiteness-hypothesis",
         "neither homotopy finiteness nor the Bass trace conjecture was asserted; the "
         "transfer of the obstruction is not known to vanish"});
    return v;
  }
  v.certificate.push_back(
      {"finiteness-hypothesis",
       h.homotopy_finite
           ? "the space is homotopy finite"
           : "the Bass trace conjecture holds for the fundamental group (" +
                 v.bass_source + ")"});
  v.certificate.push_back(
      {"transfer-of-obstruction-vanishes",
       "the reduced Reidemeister characteristic vanishes, and it equals the transfer of "
       "the diagonal obstruction, which is therefore zero"});
  v.certificate.push_back(
      {"obstruction-order-divides-two",
       "projecting the transfer back to the coinvariants multiplies by 2, so twice the "
       "obstruction vanishes"});

  if (d < 4) {
    v.outcome = Verdict::Outcome::Inconclusive;
    v.certificate.push_back(
        {"dimension-below-four",
         "d = " + std::to_string(d) +
             " < 4: a vanishing obstruction yields an embedding only in dimension >= 4"});
    return v;
  }
  v.certificate.push_back({"dimension-at-least-four", "d = " + std::to_string(d) + " >= 4"});

  bool torsion = false;
  std::string torsion_detail;
  if (g->is_finite()) {
    QStructurePtr s = q_structure(g, d, true);
    torsion = has_two_torsion(*s);
    torsion_detail = "Q~_" + std::to_string(d) + " = " +
                     structure_string(s->free_rank(), s->torsion());
  } else {
    // fgabelian with free part: classes equal elements, and for odd d the
    // non-identity self-inverse classes are exactly the 2-torsion elements
    bool even_factor = false;
    for (const Int& f : g->invariant_factors())
      if (f % 2 == 0) even_factor = true;
    torsion = (d % 2 != 0) && even_factor;
    torsion_detail =
        std::string("computed from the invariant factors (classes not enumerable): ") +
        (torsion ? "an even invariant factor contributes Z/2 in odd dimension"
                 : "no self-inverse class contributes torsion");
  }

  if (torsion) {
    v.outcome = Verdict::Outcome::Inconclusive;
    v.certificate.push_back(
        {"qtilde-has-two-torsion",
         torsion_detail + "; the order-2 obstruction class may be nonzero"});
    return v;
  }
  v.certificate.push_back(
      {"qtilde-torsion-free",
       torsion_detail + "; no 2-torsion, so the obstruction itself vanishes"});
  v.certificate.push_back(
      {"diagonal-embedding-exists",
       "the obstruction vanishes and d >= 4, so the diagonal admits a Poincare embedding"});
  v.outcome = Verdict::Outcome::EmbeddingExists;
  return v;
}

}  // namespace hstrace
