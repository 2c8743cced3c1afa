#include "wr/extremal.hpp"

#include <map>

#include "wr/error.hpp"
#include "wr/partition.hpp"

namespace wr {

const char* to_string(Relation r) {
  switch (r) {
    case Relation::less:
      return "<";
    case Relation::equal:
      return "=";
    case Relation::greater:
      return ">";
  }
  return "?";
}

Relation compare(const Rational& lhs, const Rational& rhs) {
  if (lhs < rhs) return Relation::less;
  if (lhs == rhs) return Relation::equal;
  return Relation::greater;
}

namespace {

void require_regular(const Graph& g, const std::string& name, int d) {
  if (d < 1) throw DomainError("degree must be >= 1");
  if (const auto v = regularity_violation(g, d)) {
    throw DomainError(name + " is not " + std::to_string(d) + "-regular: vertex " + std::to_string(*v) + " has degree " +
                      std::to_string(g.degree(*v)));
  }
}

BoundReport make_report(const Graph& g, const std::string& name, int d, std::string check, const Rational& l1,
                        const Rational& l2, Rational lhs, Rational rhs) {
  BoundReport r;
  r.graph = name;
  r.n = g.n();
  r.d = d;
  r.check = std::move(check);
  r.lambda1 = l1;
  r.lambda2 = l2;
  r.relation = compare(lhs, rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equality_expected = is_union_of_complete(g, d + 1);
  return r;
}

BoundReport occupancy_report(const Graph& g, const std::string& name, int d, const Rational& lambda,
                             const IntPolynomial& p) {
  return make_report(g, name, d, "occupancy", lambda, lambda, occupancy_from_polynomial(p, g.n(), lambda),
                     alpha_K(d, lambda));
}

BoundReport partition_report(const Graph& g, const std::string& name, int d, const Rational& lambda,
                             const IntPolynomial& p, const IntPolynomial& pk, std::string check = "partition") {
  return make_report(g, name, d, std::move(check), lambda, lambda,
                     poly_eval(p, lambda).pow(static_cast<unsigned>(d + 1)),
                     poly_eval(pk, lambda).pow(static_cast<unsigned>(g.n())));
}

}  // namespace

BoundReport verify_occupancy_bound(const Graph& g, const std::string& name, int d, const Rational& lambda) {
  require_regular(g, name, d);
  require_positive_activity(lambda);
  return occupancy_report(g, name, d, lambda, wr_partition(g));
}

BoundReport verify_partition_bound(const Graph& g, const std::string& name, int d, const Rational& lambda) {
  require_regular(g, name, d);
  require_positive_activity(lambda);
  return partition_report(g, name, d, lambda, wr_partition(g), wr_partition(make_complete(d + 1)));
}

BoundReport verify_hom_bound(const Graph& g, const std::string& name, int d) {
  require_regular(g, name, d);
  const Integer hom = hom_count_wr(g);
  const Integer hom_k = hom_count_wr(make_complete(d + 1));
  return make_report(g, name, d, "hom", Rational(1), Rational(1), Rational(integer_pow(hom, d + 1)),
                     Rational(integer_pow(hom_k, g.n())));
}

std::vector<BoundReport> verify_catalog(const std::vector<CatalogEntry>& entries, const std::vector<Rational>& lambdas) {
  std::vector<BoundReport> out;
  std::map<int, IntPolynomial> benchmarks;
  for (const auto& e : entries) {
    require_regular(e.graph, e.name, e.d);
    const auto p = wr_partition(e.graph);
    auto it = benchmarks.find(e.d);
    if (it == benchmarks.end()) it = benchmarks.emplace(e.d, wr_partition(make_complete(e.d + 1))).first;
    for (const auto& lambda : lambdas) {
      require_positive_activity(lambda);
      out.push_back(occupancy_report(e.graph, e.name, e.d, lambda, p));
      out.push_back(partition_report(e.graph, e.name, e.d, lambda, p, it->second));
    }
    out.push_back(partition_report(e.graph, e.name, e.d, Rational(1), p, it->second, "hom"));
  }
  return out;
}

ScanResult conjecture_scan(const std::vector<CatalogEntry>& entries, const std::vector<ActivityPair>& grid) {
  ScanResult result;
  std::map<int, BivariatePolynomial> benchmarks;
  for (const auto& e : entries) {
    require_regular(e.graph, e.name, e.d);
    const auto p = wr_partition_bivariate(e.graph);
    auto it = benchmarks.find(e.d);
    if (it == benchmarks.end()) it = benchmarks.emplace(e.d, wr_partition_bivariate(make_complete(e.d + 1))).first;
    const auto& pk = it->second;
    for (const auto& act : grid) {
      const Rational& l1 = act.lambda1();
      const Rational& l2 = act.lambda2();
      result.reports.push_back(make_report(e.graph, e.name, e.d, "partition2", l1, l2,
                                           bivariate_eval(p, l1, l2).pow(static_cast<unsigned>(e.d + 1)),
                                           bivariate_eval(pk, l1, l2).pow(static_cast<unsigned>(e.graph.n()))));
      result.reports.push_back(make_report(e.graph, e.name, e.d, "weighted_occupancy", l1, l2,
                                           weighted_occupancy(p, e.graph.n(), act), weighted_occupancy(pk, e.d + 1, act)));
    }
  }
  for (std::size_t i = 0; i < result.reports.size(); ++i) {
    if (result.reports[i].relation == Relation::greater) result.violations.push_back(i);
  }
  return result;
}

std::string bound_reports_csv(const std::vector<BoundReport>& reports) {
  std::string out = "graph,n,d,lambda1,lambda2,check,lhs,rhs,relation,equality_expected\n";
  for (const auto& r : reports) {
    out += "\"" + r.graph + "\"," + std::to_string(r.n) + "," + std::to_string(r.d) + "," + r.lambda1.to_string() + "," +
           r.lambda2.to_string() + "," + r.check + "," + r.lhs.to_string() + "," + r.rhs.to_string() + "," +
           to_string(r.relation) + "," + (r.equality_expected ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace wr
