#pragma once

#include <optional>
#include <string>

#include "hstrace/chain.hpp"
#include "hstrace/class_vector.hpp"
#include "hstrace/qcalc.hpp"

namespace hstrace {

struct CertificateStep {
  std::string rule;
  std::string detail;
};

/// Outcome of the diagonal-embedding decision procedure with the ordered
/// list of applied rules.
struct Verdict {
  enum class Outcome { NoEmbedding, EmbeddingExists, Inconclusive };
  Outcome outcome = Outcome::Inconclusive;
  std::vector<CertificateStep> certificate;

  // resolved context, echoed in reports
  bool homotopy_finite = false;
  bool bass_holds = false;
  std::string bass_source;  // "flag" | "finite-group-default" | "none"
  std::optional<ClassVector> reduced_char;
  std::string reduced_char_source;  // "supplied" | "complex" | "both" | "none"
};

const char* outcome_name(Verdict::Outcome o);

/// Inputs to the decision procedure. The Bass trace conjecture is never
/// verified: it is asserted by flag, or assumed by default for finite
/// fundamental groups (a known case), and the certificate records which.
struct SpaceHypotheses {
  GroupPtr group;
  long long dimension = 0;
  bool homotopy_finite = false;
  std::optional<bool> bass_override;
  std::optional<ClassVector> reduced_char;  // supplied r-tilde, identity part ignored
  std::optional<IdempotentComplex> complex;
};

struct CriterionResult {
  bool holds = false;
  std::vector<CertificateStep> certificate;
};

/// Even d >= 4 with abelian fundamental group whose 2-primary subgroup is a
/// finite direct product of cyclic groups of order two.
CriterionResult check_abelian_elementary_two(const GroupPtr& group, long long d);

/// d >= 4 with every non-trivial element of odd order.
CriterionResult check_odd_order_group(const GroupPtr& group, long long d);

/// The inversion involution on the non-identity conjugacy classes: either a
/// fixed-point-free pairing T- <-> T+, or a witness (g, x) with
/// g x g^{-1} = x^{-1} and x != e (g = e when x is its own inverse).
struct InvolutionPartition {
  bool free = false;
  std::vector<std::size_t> t_minus;  // class indices; t_plus[i] = inverse of t_minus[i]
  std::vector<std::size_t> t_plus;
  std::size_t fixed_class = 0;
  GroupElement witness_g;
  GroupElement witness_x;
};

InvolutionPartition free_involution_partition(const GroupPtr& group);

Verdict embedding_verdict(const SpaceHypotheses& h);

}  // namespace hstrace
