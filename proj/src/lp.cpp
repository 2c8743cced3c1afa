#include "wr/lp.hpp"

#include <map>
#include <mutex>

#include "wr/error.hpp"
#include "wr/occupancy.hpp"

namespace wr {

namespace {

Rational one_plus_pow(const Rational& lambda, int k) { return (Rational(1) + lambda).pow(static_cast<unsigned>(k)); }

std::vector<std::string> support_labels(const LPInstance& inst, const SparseSolution& sol) {
  std::vector<std::string> out;
  for (const auto& [j, v] : sol) out.push_back(inst.labels[j]);
  return out;
}

}  // namespace

const std::vector<ConfigStats>& enumerate_config_stats(int d) {
  const auto& configs = enumerate_configs(d);
  static std::mutex mutex;
  static std::map<int, std::vector<ConfigStats>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) {
    std::vector<ConfigStats> stats;
    stats.reserve(configs.size());
    for (const auto& e : configs) stats.push_back(local_partition_functions(e.config));
    it = cache.emplace(d, std::move(stats)).first;
  }
  return it->second;
}

LPInstance build_primal(int d, const Rational& lambda) {
  require_positive_activity(lambda);
  const auto& configs = enumerate_configs(d);
  const auto& stats = enumerate_config_stats(d);
  LPInstance inst;
  inst.d = d;
  inst.lambda = lambda;
  const auto n = configs.size();
  inst.program.rows.assign(2, std::vector<Rational>(n));
  inst.program.rhs = {Rational(1), Rational(0)};
  inst.program.objective.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    inst.keys.push_back(configs[j].key);
    inst.labels.push_back(config_label(configs[j].config));
    const Rational av = alpha_v(stats[j], lambda);
    const Rational au = alpha_u(stats[j], lambda);
    inst.program.rows[0][j] = Rational(1);
    inst.program.rows[1][j] = av - au;
    inst.program.objective[j] = av;
    inst.alpha_v.push_back(av);
    inst.alpha_u.push_back(au);
    if (classify(configs[j].config) == ConfigClass::complete_full) inst.complete_index = static_cast<int>(j);
  }
  return inst;
}

std::pair<Rational, Rational> lambda_c_forms(int d, const Rational& lambda) {
  const Rational ak = alpha_K(d, lambda);
  const Rational scale = ak / (Rational(2) * lambda);
  const Rational from_c0 = Rational(1) - scale * (Rational(1) + Rational(2) * lambda);
  const Rational p = one_plus_pow(lambda, d);
  const Rational closed = scale * (p - Rational(1)) / p;
  return {from_c0, closed};
}

DualCertificate dual_certificate(int d, const Rational& lambda) {
  require_positive_activity(lambda);
  const auto [from_c0, closed] = lambda_c_forms(d, lambda);
  if (from_c0 != closed) {
    throw VerificationError("closed forms of Λ_c disagree: " + from_c0.to_string() + " vs " + closed.to_string());
  }
  return {d, lambda, alpha_K(d, lambda), from_c0};
}

DualReport verify_dual_feasibility(const DualCertificate& cert) {
  const int d = cert.d;
  const Rational& lambda = cert.activity;
  const auto& configs = enumerate_configs(d);
  const auto& stats = enumerate_config_stats(d);
  const Rational p = one_plus_pow(lambda, d);
  const Rational bound = Rational(d) * p / (p - Rational(1));

  DualReport report;
  report.certificate = cert;
  for (std::size_t j = 0; j < configs.size(); ++j) {
    const auto& s = stats[j];
    DualCheckRow row;
    row.key = configs[j].key;
    row.label = config_label(configs[j].config);
    row.a1 = s.a1;
    row.a2 = s.a2;
    row.alpha_v = alpha_v(s, lambda);
    row.alpha_u = alpha_u(s, lambda);
    row.slack = cert.lambda_p + cert.lambda_c * (row.alpha_v - row.alpha_u) - row.alpha_v;
    row.tight = row.slack.is_zero();
    row.equality_predicate = s.equality_predicate();
    if (s.all_lists_empty) {
      row.routes_agree = row.tight;
    } else {
      const IntPolynomial gap = Integer(2) * s.p0 - s.p12;
      const Rational lhs = (poly_eval(poly_derivative(s.p0), lambda) + lambda * poly_eval(poly_derivative(s.p12), lambda)) /
                           poly_eval(gap, lambda);
      row.rearranged_sign = (bound - lhs).sign();
      row.routes_agree = *row.rearranged_sign == row.slack.sign();
    }
    if (row.slack.sign() < 0) report.violations.push_back(j);
    if (!row.routes_agree) ++report.disagreements;
    if (row.tight) report.tight_set.push_back(row.label);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string dual_report_csv(const DualReport& report) {
  std::string out = "key,label,a1,a2,alpha_v,alpha_u,slack,tight\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.key) + ",\"" + r.label + "\"," + std::to_string(r.a1) + "," + std::to_string(r.a2) + "," +
           r.alpha_v.to_string() + "," + r.alpha_u.to_string() + "," + r.slack.to_string() + "," +
           (r.tight ? "true" : "false") + "\n";
  }
  return out;
}

ClaimsReport verify_claims(const ConfigStats& s, const Rational& lambda) {
  require_positive_activity(lambda);
  if (s.all_lists_empty) throw DomainError("verify_claims: configuration has only empty lists (C0)");
  const int d = s.d;
  const Rational p = one_plus_pow(lambda, d);
  const Rational base = Rational(d) * one_plus_pow(lambda, d - 1) / (p - Rational(1));
  const Rational gap = poly_eval(Integer(2) * s.p0 - s.p12, lambda);
  if (gap.sign() <= 0) throw VerificationError("2P0 - P12 is not positive on a configuration with a non-empty list");

  const Rational lhs12 = lambda * poly_eval(poly_derivative(s.p12), lambda) / gap;
  const Rational rhs12 = lambda * base;
  const Rational lhs0 = poly_eval(poly_derivative(s.p0), lambda) / gap;

  ClaimsReport out;
  out.claim_p12 = {lhs12 <= rhs12, lhs12 == rhs12};
  out.claim_p0 = {lhs0 <= base, lhs0 == base};
  out.predicate = s.equality_predicate();
  return out;
}

ClaimsReport verify_claims(const Configuration& c, const Rational& lambda) {
  return verify_claims(local_partition_functions(c), lambda);
}

ConditionalExpectation conditional_expectation_check(const Configuration& c, int colour, const Rational& lambda) {
  require_positive_activity(lambda);
  if (colour != 1 && colour != 2) throw UsageError("colour must be 1 or 2");
  const int d = c.d();
  if (d > kConfigStatsMaxD) throw CapacityError("conditional_expectation_check: d <= 8");
  const auto bit = static_cast<ColourList>(colour == 1 ? kListOne : kListTwo);
  const auto other_bit = static_cast<ColourList>(colour == 1 ? kListTwo : kListOne);
  bool available = false;
  for (auto l : c.lists) available = available || (l & bit);
  if (!available) throw DomainError("colour " + std::to_string(colour) + " is not in any list");

  // Route 1: enumerate colourings of H, accumulating weight and X_i by degree.
  std::vector<long> weight_positive(d + 1, 0);
  std::vector<long> moment(d + 1, 0);
  {
    std::vector<int> colours(d, 0);
    const auto edges = c.h.edges();
    for (;;) {
      bool valid = true;
      for (int u = 0; u < d && valid; ++u) {
        if (colours[u] == 1) valid = (c.lists[u] & kListOne) != 0;
        if (colours[u] == 2) valid = (c.lists[u] & kListTwo) != 0;
      }
      for (const auto& [a, b] : edges) {
        if (!valid) break;
        valid = !(colours[a] != 0 && colours[b] != 0 && colours[a] != colours[b]);
      }
      if (valid) {
        int xi = 0;
        int coloured = 0;
        for (int col : colours) {
          xi += col == colour;
          coloured += col != 0;
        }
        if (xi > 0) {
          ++weight_positive[coloured];
          moment[coloured] += xi;
        }
      }
      int pos = 0;
      while (pos < d && colours[pos] == 2) colours[pos++] = 0;
      if (pos == d) break;
      ++colours[pos];
    }
  }
  auto as_poly = [](const std::vector<long>& v) {
    std::vector<Integer> coeffs;
    for (auto x : v) coeffs.emplace_back(x);
    return IntPolynomial(std::move(coeffs));
  };
  const Rational enumerated = poly_eval(as_poly(moment), lambda) / poly_eval(as_poly(weight_positive), lambda);

  // Route 2: S = vertices holding the other colour; the remainder contributes
  // λ^{|S|}((1+λ)^{a_S} - 1) with a_S the free vertices allowing colour i.
  Rational numerator(0);
  Rational denominator(0);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << d); ++s) {
    bool ok = true;
    for (int u = 0; u < d && ok; ++u) {
      if ((s >> u) & 1U) ok = (c.lists[u] & other_bit) != 0;
    }
    if (!ok) continue;
    int a_s = 0;
    for (int u = 0; u < d; ++u) {
      if ((s >> u) & 1U) continue;
      if (!(c.lists[u] & bit)) continue;
      bool touches = false;
      for (int w : c.h.neighbours(u)) touches = touches || ((s >> w) & 1U);
      a_s += !touches;
    }
    if (a_s == 0) continue;
    const Rational lam_s = lambda.pow(static_cast<unsigned>(__builtin_popcount(s)));
    numerator += lam_s * Rational(a_s) * lambda * one_plus_pow(lambda, a_s - 1);
    denominator += lam_s * (one_plus_pow(lambda, a_s) - Rational(1));
  }
  const Rational decomposed = numerator / denominator;
  if (decomposed != enumerated) {
    throw VerificationError("conditional expectation routes disagree: " + enumerated.to_string() + " vs " +
                            decomposed.to_string());
  }

  ConditionalExpectation out;
  out.lhs = enumerated;
  out.rhs = lambda * Rational(d) * one_plus_pow(lambda, d - 1) / (one_plus_pow(lambda, d) - Rational(1));
  out.holds = out.lhs <= out.rhs;
  out.tight = out.lhs == out.rhs;
  return out;
}

bool monotone_lhs_check(int d, const Rational& lambda) {
  require_positive_activity(lambda);
  if (d < 1) throw UsageError("monotone_lhs_check: d must be >= 1");
  auto term = [&](int a) { return Rational(a) * one_plus_pow(lambda, a - 1) / (one_plus_pow(lambda, a) - Rational(1)); };
  Rational previous = term(1);
  for (int a = 2; a <= d; ++a) {
    const Rational next = term(a);
    if (!(previous < next)) return false;
    previous = next;
  }
  return true;
}

bool UniquenessReport::unique() const {
  if (!(tight_satisfy_predicate && tight_in_known_cases && cases_01_strict)) return false;
  if (simplex_value != alpha_k || vertex_value != alpha_k) return false;
  const std::vector<std::string> expected{"K" + std::to_string(d) + "-full-lists"};
  if (simplex_support != expected) return false;
  if (vertex_optimal_supports.empty()) return false;
  for (const auto& s : vertex_optimal_supports) {
    if (s != expected) return false;
  }
  return true;
}

UniquenessReport uniqueness_check(int d, const Rational& lambda) {
  const auto cert = dual_certificate(d, lambda);
  const auto dual = verify_dual_feasibility(cert);
  const auto& configs = enumerate_configs(d);
  const auto inst = build_primal(d, lambda);

  UniquenessReport out;
  out.d = d;
  out.lambda = lambda;
  out.alpha_k = cert.lambda_p;
  out.tight_set = dual.tight_set;
  out.tight_satisfy_predicate = true;
  out.tight_in_known_cases = true;
  out.cases_01_strict = true;
  for (std::size_t j = 0; j < dual.rows.size(); ++j) {
    const auto& row = dual.rows[j];
    if (!row.tight) continue;
    out.tight_satisfy_predicate = out.tight_satisfy_predicate && row.equality_predicate;
    const auto cls = classify(configs[j].config);
    if (cls == ConfigClass::other) out.tight_in_known_cases = false;
    if (cls != ConfigClass::complete_full && !(row.alpha_u < row.alpha_v)) out.cases_01_strict = false;
  }

  const auto simplex = simplex_solve(inst.program);
  if (simplex.status != LPStatus::optimal) {
    throw VerificationError(std::string("simplex did not reach an optimum: ") + to_string(simplex.status));
  }
  out.simplex_value = simplex.value;
  out.simplex_support = support_labels(inst, simplex.solution);

  const auto vertices = vertex_enumeration_solve(inst.program);
  if (vertices.status != LPStatus::optimal) throw VerificationError("vertex enumeration found no feasible vertex");
  out.vertex_value = vertices.value;
  for (const auto& sol : vertices.optimal_vertices) out.vertex_optimal_supports.push_back(support_labels(inst, sol));
  return out;
}

}  // namespace wr
