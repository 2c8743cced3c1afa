#pragma once

// The linear-programming relaxation over configuration distributions q(C),
// its closed-form dual certificate, and the exact checks behind the proof
// that the K_{d+1} neighbourhood is the unique optimum.

#include <optional>
#include <string>
#include <vector>

#include "wr/config_space.hpp"
#include "wr/numerics.hpp"
#include "wr/simplex.hpp"

namespace wr {

/// One variable per configuration class; rows are normalisation (Σq = 1) and
/// balance (Σ q (α^v - α^u) = 0); objective Σ q α^v.
struct LPInstance {
  int d = 0;
  Rational lambda;
  std::vector<CanonicalKey> keys;
  std::vector<std::string> labels;
  std::vector<Rational> alpha_v;
  std::vector<Rational> alpha_u;
  EqualityLP program;

  /// Index of the K_d full-lists configuration.
  int complete_index = -1;
};

/// Throws CapacityError for d > 6, DomainError for λ <= 0.
LPInstance build_primal(int d, const Rational& lambda);
/// Cached polynomials for every configuration of enumerate_configs(d), same order.
const std::vector<ConfigStats>& enumerate_config_stats(int d);

struct DualCertificate {
  int d = 0;
  Rational activity;
  Rational lambda_p;
  Rational lambda_c;
};

/// Λ_p = α_K and Λ_c from the C₀ constraint; the two closed forms of Λ_c are
/// compared and a VerificationError raised if they differ.
DualCertificate dual_certificate(int d, const Rational& lambda);
/// The two closed forms separately: 1 - (α_K/2λ)(1+2λ) and (α_K/2λ)((1+λ)^d - 1)/(1+λ)^d.
std::pair<Rational, Rational> lambda_c_forms(int d, const Rational& lambda);

struct DualCheckRow {
  CanonicalKey key = 0;
  std::string label;
  int a1 = 0;
  int a2 = 0;
  Rational alpha_v;
  Rational alpha_u;
  /// Λ_p + Λ_c (α^v - α^u) - α^v.
  Rational slack;
  bool tight = false;
  bool equality_predicate = false;
  /// Sign of rhs - lhs in ((P⁰)' + λ(P¹²)')/(2P⁰ - P¹²) <= d(1+λ)^d/((1+λ)^d - 1);
  /// empty for all-empty-list configurations, where the denominator vanishes.
  std::optional<int> rearranged_sign;
  bool routes_agree = true;
};

struct DualReport {
  DualCertificate certificate;
  std::vector<DualCheckRow> rows;
  std::vector<std::size_t> violations;
  /// Labels of tight configurations, ordered by canonical key.
  std::vector<std::string> tight_set;
  std::size_t disagreements = 0;

  bool feasible() const { return violations.empty() && disagreements == 0; }
};

DualReport verify_dual_feasibility(const DualCertificate& cert);
std::string dual_report_csv(const DualReport& report);

struct ClaimOutcome {
  bool holds = false;
  bool tight = false;
};

struct ClaimsReport {
  ClaimOutcome claim_p12;
  ClaimOutcome claim_p0;
  bool predicate = false;
  bool flags_match() const { return claim_p12.tight == predicate && claim_p0.tight == predicate; }
};

/// λ(P¹²)'/(2P⁰-P¹²) <= dλ(1+λ)^{d-1}/((1+λ)^d - 1) and
/// (P⁰)'/(2P⁰-P¹²) <= d(1+λ)^{d-1}/((1+λ)^d - 1). DomainError on all-empty lists.
ClaimsReport verify_claims(const ConfigStats& stats, const Rational& lambda);
ClaimsReport verify_claims(const Configuration& c, const Rational& lambda);

struct ConditionalExpectation {
  Rational lhs;
  Rational rhs;
  bool holds = false;
  bool tight = false;
};

/// E_C[X_i | X_i > 0] against its value on the full K_d configuration.
/// The left side is computed by colouring enumeration and by decomposing over
/// the set S of vertices holding the other colour; a VerificationError is
/// raised if they differ. DomainError if colour i appears in no list.
ConditionalExpectation conditional_expectation_check(const Configuration& c, int colour, const Rational& lambda);

/// a(1+λ)^{a-1}/((1+λ)^a - 1) strictly increasing over a = 1..d.
bool monotone_lhs_check(int d, const Rational& lambda);

struct UniquenessReport {
  int d = 0;
  Rational lambda;
  std::vector<std::string> tight_set;
  bool tight_satisfy_predicate = false;
  bool tight_in_known_cases = false;
  bool cases_01_strict = false;
  Rational simplex_value;
  std::vector<std::string> simplex_support;
  Rational vertex_value;
  std::vector<std::vector<std::string>> vertex_optimal_supports;
  Rational alpha_k;

  bool unique() const;
};

UniquenessReport uniqueness_check(int d, const Rational& lambda);

}  // namespace wr
