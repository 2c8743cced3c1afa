#include "wr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "wr/catalog.hpp"
#include "wr/config_space.hpp"
#include "wr/dynamics.hpp"
#include "wr/error.hpp"
#include "wr/extremal.hpp"
#include "wr/lp.hpp"
#include "wr/occupancy.hpp"
#include "wr/partition.hpp"

namespace wr::cli {

namespace {

struct GraphSource {
  std::string builtin;
  std::string file;
};

void add_graph_source(CLI::App* cmd, GraphSource& src) {
  auto* b = cmd->add_option("--builtin", src.builtin, "Builtin graph, e.g. complete:4, cycle:5, petersen, cycle:3+cycle:3");
  auto* f = cmd->add_option("--file", src.file, "Edge-list file");
  b->excludes(f);
}

struct NamedGraph {
  std::string name;
  Graph graph;
};

NamedGraph load_graph(const GraphSource& src) {
  if (!src.builtin.empty()) return {src.builtin, parse_builtin(src.builtin)};
  if (!src.file.empty()) return {src.file, read_edge_list_file(src.file)};
  throw UsageError("one of --builtin or --file is required");
}

std::vector<Rational> parse_lambda_list(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  for (const auto& t : texts) {
    std::stringstream ss(t);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(Rational::parse(piece));
  }
  for (const auto& l : out) require_positive_activity(l);
  return out;
}

std::vector<ActivityPair> parse_grid(const std::string& text) {
  std::vector<ActivityPair> out;
  for (const auto& [a, b] : split_grid(text)) out.emplace_back(Rational::parse(a), Rational::parse(b));
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << content;
}

// ------------------------------------------------------------- commands

int cmd_partition(const GraphSource& src, const std::string& lambda_text, bool bivariate, std::ostream& out) {
  const auto [name, g] = load_graph(src);
  const auto p = wr_partition(g);
  out << "graph " << name << " n=" << g.n() << " m=" << g.edge_count() << "\n";
  out << "P(λ) = " << p.to_string() << "\n";
  out << "coefficients: " << p.serialize() << "\n";
  out << "hom=" << to_string(poly_eval(p, Rational(1)).numerator()) << "\n";
  if (!lambda_text.empty()) {
    const Rational lambda = Rational::parse(lambda_text);
    out << "P=" << poly_eval(p, lambda).to_string() << " at λ=" << lambda.to_string() << "\n";
  }
  if (bivariate) out << "P(λ₁,λ₂) = " << wr_partition_bivariate(g).to_string() << "\n";
  return kSuccess;
}

int cmd_occupancy(const GraphSource& src, const std::string& lambda_text, const std::string& l1_text,
                  const std::string& l2_text, std::ostream& out) {
  const auto [name, g] = load_graph(src);
  out << "graph " << name << " n=" << g.n() << "\n";
  if (!lambda_text.empty()) {
    const Rational lambda = Rational::parse(lambda_text);
    const Rational alpha = occupancy_fraction(g, lambda);
    out << "alpha=" << alpha.to_string() << " at λ=" << lambda.to_string() << "\n";
    if (g.n() > 0 && g.degree(0) >= 1 && is_d_regular(g, g.degree(0))) {
      out << "alpha_K=" << alpha_K(g.degree(0), lambda).to_string() << " (d=" << g.degree(0) << ")\n";
    }
  }
  if (!l1_text.empty() || !l2_text.empty()) {
    if (l1_text.empty() || l2_text.empty()) throw UsageError("--lambda1 and --lambda2 go together");
    const ActivityPair act(Rational::parse(l1_text), Rational::parse(l2_text));
    const auto p = wr_partition_bivariate(g);
    const auto [a1, a2] = occupancy_by_colour(p, g.n(), act);
    out << "alpha1=" << a1.to_string() << " alpha2=" << a2.to_string()
        << " weighted=" << weighted_occupancy(p, g.n(), act).to_string() << " at (λ₁,λ₂)=(" << act.to_string() << ")\n";
  }
  if (lambda_text.empty() && l1_text.empty()) throw UsageError("occupancy needs --lambda or --lambda1/--lambda2");
  return kSuccess;
}

int cmd_verify(const std::string& catalog_name, const std::vector<std::string>& lambda_texts, const std::string& csv,
               std::ostream& out) {
  const auto lambdas = lambda_texts.empty() ? parse_lambda_list({"1/4,1/2,1,2,10"}) : parse_lambda_list(lambda_texts);
  const auto entries = catalog(catalog_name);
  const auto reports = verify_catalog(entries, lambdas);
  std::size_t mismatches = 0;
  for (const auto& r : reports) {
    const bool ok = r.matches_expectation();
    mismatches += !ok;
    out << r.graph << " n=" << r.n << " d=" << r.d << " " << r.check << " λ=" << r.lambda1.to_string() << " "
        << to_string(r.relation) << (r.equality_expected ? " (equality expected)" : "");
    if (r.check == "occupancy") out << " " << r.lhs.to_string() << " vs " << r.rhs.to_string();
    out << (ok ? " ok" : " MISMATCH") << "\n";
  }
  out << "checks=" << reports.size() << " mismatches=" << mismatches << "\n";
  if (!csv.empty()) write_file(csv, bound_reports_csv(reports));
  return mismatches == 0 ? kSuccess : kVerificationMismatch;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

int cmd_lp(int d, const std::string& lambda_text, const std::string& csv, std::ostream& out) {
  const Rational lambda = Rational::parse(lambda_text);
  const auto report = uniqueness_check(d, lambda);
  out << "d=" << d << " λ=" << lambda.to_string() << " configurations=" << enumerate_configs(d).size() << "\n";
  out << "optimum " << report.simplex_value.to_string() << ", support: " << join(report.simplex_support, ", ") << "\n";
  out << "vertex-enumeration optimum " << report.vertex_value.to_string() << ", optimal supports:";
  for (const auto& s : report.vertex_optimal_supports) out << " {" << join(s, ", ") << "}";
  out << "\n";
  out << "alpha_K=" << report.alpha_k.to_string() << "\n";
  out << "tight set (" << report.tight_set.size() << "): " << join(report.tight_set, " ") << "\n";
  out << "unique optimum: " << (report.unique() ? "yes" : "NO") << "\n";
  if (!csv.empty()) write_file(csv, dual_report_csv(verify_dual_feasibility(dual_certificate(d, lambda))));
  return report.unique() ? kSuccess : kVerificationMismatch;
}

int cmd_dualcert(int d, const std::string& lambda_text, const std::string& csv, std::ostream& out) {
  const Rational lambda = Rational::parse(lambda_text);
  const auto cert = dual_certificate(d, lambda);
  const auto report = verify_dual_feasibility(cert);
  out << "Λ_p=" << cert.lambda_p.to_string() << " Λ_c=" << cert.lambda_c.to_string()
      << " violations=" << report.violations.size() << "\n";
  out << "configurations=" << report.rows.size() << " tight=" << report.tight_set.size()
      << " route_disagreements=" << report.disagreements << "\n";
  for (auto j : report.violations) out << "VIOLATION " << report.rows[j].label << " slack=" << report.rows[j].slack.to_string() << "\n";
  if (!csv.empty()) write_file(csv, dual_report_csv(report));
  return report.feasible() ? kSuccess : kVerificationMismatch;
}

int cmd_configs(int d, const std::string& lambda_text, bool serialize, const std::string& csv, std::ostream& out) {
  const auto& configs = enumerate_configs(d);
  out << "d=" << d << " configurations=" << configs.size() << "\n";
  std::optional<Rational> lambda;
  if (!lambda_text.empty()) lambda = Rational::parse(lambda_text);
  std::string table = "key,label,a1,a2,lists_all_equal,has_dichromatic";
  if (lambda) table += ",alpha_v,alpha_u";
  table += "\n";
  for (const auto& e : configs) {
    const auto s = local_partition_functions(e.config);
    std::string row = std::to_string(e.key) + ",\"" + config_label(e.config) + "\"," + std::to_string(s.a1) + "," +
                      std::to_string(s.a2) + "," + (s.lists_all_equal ? "true" : "false") + "," +
                      (s.has_dichromatic ? "true" : "false");
    if (lambda) row += "," + alpha_v(s, *lambda).to_string() + "," + alpha_u(s, *lambda).to_string();
    table += row + "\n";
    if (serialize) {
      out << "# " << config_label(e.config) << "\n" << serialize_configuration(e.config);
    } else {
      out << e.key << " " << config_label(e.config) << " a1=" << s.a1 << " a2=" << s.a2;
      if (lambda) out << " alpha_v=" << alpha_v(s, *lambda).to_string() << " alpha_u=" << alpha_u(s, *lambda).to_string();
      out << "\n";
    }
  }
  if (!csv.empty()) write_file(csv, table);
  return kSuccess;
}

int cmd_sample(const GraphSource& src, double lambda, std::uint64_t seed, std::uint64_t burn_in, std::uint64_t samples,
               std::uint64_t thinning, const std::string& csv, std::ostream& out) {
  const auto [name, g] = load_graph(src);
  SamplerOptions opt;
  opt.lambda = lambda;
  opt.seed = seed;
  opt.burn_in = burn_in;
  opt.samples = samples;
  opt.thinning = thinning;
  std::ostringstream series;
  if (!csv.empty()) {
    series << "step,coloured_fraction\n" << std::setprecision(17);
    opt.trace = [&](std::uint64_t step, double fraction) { series << step << "," << fraction << "\n"; };
  }
  const auto est = estimate_occupancy(g, opt);
  out << std::setprecision(10);
  out << "graph " << name << " n=" << g.n() << " λ=" << lambda << " seed=" << seed << " rng=" << est.rng << "\n";
  out << "estimate=" << est.estimate << " stderr=" << est.stderr_ << " samples=" << est.samples << "\n";
  if (!csv.empty()) write_file(csv, series.str());
  return kSuccess;
}

int cmd_scan(const std::string& catalog_name, const std::string& grid_text, const std::string& csv, std::ostream& out) {
  const auto grid = parse_grid(grid_text);
  const auto result = conjecture_scan(catalog(catalog_name), grid);
  out << "catalog=" << catalog_name << " pairs=" << grid.size() << " comparisons=" << result.reports.size()
      << " violations=" << result.violations.size() << "\n";
  for (auto i : result.violations) {
    const auto& r = result.reports[i];
    out << "COUNTEREXAMPLE " << r.graph << " d=" << r.d << " " << r.check << " (λ₁,λ₂)=(" << r.lambda1.to_string() << ","
        << r.lambda2.to_string() << ") lhs=" << r.lhs.to_string() << " rhs=" << r.rhs.to_string() << "\n";
  }
  if (!csv.empty()) write_file(csv, bound_reports_csv(result.reports));
  return result.violations.empty() ? kSuccess : kCounterexample;
}

}  // namespace

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const CapacityError*>(&e)) return kCapacityError;
  if (dynamic_cast<const VerificationError*>(&e)) return kVerificationMismatch;
  return kUsageError;
}

std::vector<std::pair<std::string, std::string>> split_grid(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.empty()) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos) {
      throw ParseError("grid entry '" + item + "' must be 'λ₁,λ₂'");
    }
    out.emplace_back(item.substr(0, comma), item.substr(comma + 1));
  }
  if (out.empty()) throw ParseError("empty activity grid");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Widom–Rowlinson partition functions, occupancy fractions and LP certificates"};
  app.require_subcommand(1);

  GraphSource src;
  std::string lambda_text;
  std::string l1_text;
  std::string l2_text;
  std::string csv;
  std::string catalog_name;
  std::string grid_text = "1,1;2,1;10,1;1,1/2";
  std::vector<std::string> lambda_list;
  bool bivariate = false;
  bool serialize = false;
  int d = 0;
  double lambda_float = 1.0;
  std::uint64_t seed = 1;
  std::uint64_t burn_in = 0;
  std::uint64_t samples = 100000;
  std::uint64_t thinning = 1;

  auto* partition = app.add_subcommand("partition", "Exact partition polynomial and homomorphism count");
  add_graph_source(partition, src);
  partition->add_option("--lambda", lambda_text, "Evaluate at this exact activity (p/q)");
  partition->add_flag("--bivariate", bivariate, "Also print the two-activity polynomial");

  auto* occupancy = app.add_subcommand("occupancy", "Exact occupancy fractions");
  add_graph_source(occupancy, src);
  occupancy->add_option("--lambda", lambda_text, "Activity (p/q)");
  occupancy->add_option("--lambda1", l1_text, "Colour-1 activity (p/q)");
  occupancy->add_option("--lambda2", l2_text, "Colour-2 activity (p/q)");

  auto* verify = app.add_subcommand("verify", "Occupancy, partition and hom bounds over a catalog");
  verify->add_option("--catalog", catalog_name, "d1, d2, d3, d4 or all")->required();
  verify->add_option("--lambda", lambda_list, "Activities, repeatable or comma separated (default 1/4,1/2,1,2,10)");
  verify->add_option("--csv", csv, "Write BoundReport rows as CSV");

  auto* lp = app.add_subcommand("lp", "Solve the configuration LP exactly and check uniqueness");
  lp->add_option("--d", d, "Degree")->required();
  lp->add_option("--lambda", lambda_text, "Activity (p/q)")->required();
  lp->add_option("--csv", csv, "Write per-configuration rows as CSV");

  auto* dualcert = app.add_subcommand("dualcert", "Verify the closed-form dual certificate");
  dualcert->add_option("--d", d, "Degree")->required();
  dualcert->add_option("--lambda", lambda_text, "Activity (p/q)")->required();
  dualcert->add_option("--csv", csv, "Write per-configuration rows as CSV");

  auto* configs = app.add_subcommand("configs", "Enumerate configurations up to isomorphism");
  configs->add_option("--d", d, "Degree")->required();
  configs->add_option("--lambda", lambda_text, "Also print α^v, α^u at this activity");
  configs->add_flag("--serialize", serialize, "Print each configuration in its text form");
  configs->add_option("--csv", csv, "Write the table as CSV");

  auto* sample = app.add_subcommand("sample", "Estimate the occupancy fraction with Glauber dynamics");
  add_graph_source(sample, src);
  sample->add_option("--lambda", lambda_float, "Activity (floating point)")->required();
  sample->add_option("--seed", seed, "Generator seed");
  sample->add_option("--burnin", burn_in, "Burn-in steps (default 1000·n)");
  sample->add_option("--samples", samples, "Recorded samples");
  sample->add_option("--thinning", thinning, "Steps between samples");
  sample->add_option("--csv", csv, "Write the (step, coloured fraction) series");

  auto* scan = app.add_subcommand("scan", "Two-activity comparisons against K_{d+1}");
  scan->add_option("--catalog", catalog_name, "d1, d2, d3, d4 or all")->required();
  scan->add_option("--grid", grid_text, "Activity pairs 'λ₁,λ₂;λ₁,λ₂;...'");
  scan->add_option("--csv", csv, "Write comparisons as CSV");

  std::vector<const char*> argv{"wrtool"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*partition) return cmd_partition(src, lambda_text, bivariate, out);
    if (*occupancy) return cmd_occupancy(src, lambda_text, l1_text, l2_text, out);
    if (*verify) return cmd_verify(catalog_name, lambda_list, csv, out);
    if (*lp) return cmd_lp(d, lambda_text, csv, out);
    if (*dualcert) return cmd_dualcert(d, lambda_text, csv, out);
    if (*configs) return cmd_configs(d, lambda_text, serialize, csv, out);
    if (*sample) return cmd_sample(src, lambda_float, seed, burn_in, samples, thinning, csv, out);
    if (*scan) return cmd_scan(catalog_name, grid_text, csv, out);
  } catch (const Error& e) {
    const int code = exit_code_for(e);
    err << (code == kCapacityError ? "capacity error: " : code == kVerificationMismatch ? "verification mismatch: " : "error: ")
        << e.what() << "\n";
    return code;
  }
  return kUsageError;
}

}  // namespace wr::cli
