#pragma once

#include <string>
#include <vector>

#include "wr/catalog.hpp"
#include "wr/graph.hpp"
#include "wr/numerics.hpp"
#include "wr/occupancy.hpp"

namespace wr {

enum class Relation { less, equal, greater };
const char* to_string(Relation r);
Relation compare(const Rational& lhs, const Rational& rhs);

/// One exact comparison of a graph against the K_{d+1} benchmark.
struct BoundReport {
  std::string graph;
  int n = 0;
  int d = 0;
  std::string check;
  Rational lambda1;
  Rational lambda2;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::less;
  /// The graph is a disjoint union of K_{d+1}'s.
  bool equality_expected = false;

  /// Never above the benchmark, and equal exactly when equality is expected.
  bool matches_expectation() const {
    return relation != Relation::greater && ((relation == Relation::equal) == equality_expected);
  }
};

/// α_G(λ) against α_{K_{d+1}}(λ). DomainError naming a vertex if G is not d-regular.
BoundReport verify_occupancy_bound(const Graph& g, const std::string& name, int d, const Rational& lambda);
/// P_G(λ)^{d+1} against P_{K_{d+1}}(λ)^{n}.
BoundReport verify_partition_bound(const Graph& g, const std::string& name, int d, const Rational& lambda);
/// hom(G, H_WR)^{d+1} against hom(K_{d+1}, H_WR)^{n}.
BoundReport verify_hom_bound(const Graph& g, const std::string& name, int d);

/// Occupancy, partition and hom checks for every catalog entry and activity.
std::vector<BoundReport> verify_catalog(const std::vector<CatalogEntry>& entries, const std::vector<Rational>& lambdas);

struct ScanResult {
  std::vector<BoundReport> reports;
  /// Indices into `reports` where the graph beat K_{d+1}.
  std::vector<std::size_t> violations;
};

/// Two-activity comparisons: "partition2" is P_G(λ₁,λ₂)^{d+1} vs P_K(λ₁,λ₂)^{n};
/// "weighted_occupancy" is ᾱ_G vs ᾱ_K. Any "greater" is a violation.
ScanResult conjecture_scan(const std::vector<CatalogEntry>& entries, const std::vector<ActivityPair>& grid);

/// graph,n,d,lambda1,lambda2,check,lhs,rhs,relation,equality_expected
std::string bound_reports_csv(const std::vector<BoundReport>& reports);

}  // namespace wr
