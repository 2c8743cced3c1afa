#include "wr/config_space.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "wr/error.hpp"

namespace wr {

namespace {

void require_stats_cap(int d) {
  if (d > kConfigStatsMaxD) {
    throw CapacityError("configuration stats: d <= " + std::to_string(kConfigStatsMaxD) + ", got " + std::to_string(d));
  }
}

bool allows(ColourList l, int colour) { return (l >> (colour - 1)) & 1U; }

// Visits every assignment V(H) -> {0,1,2} with nonzero colours drawn from the
// lists and no edge joining colour 1 to colour 2. `centre` further forbids the
// colour 3-centre on all of H (0 means unconstrained).
template <class Visit>
void for_each_list_colouring(const Configuration& c, int centre, Visit&& visit) {
  const int d = c.d();
  std::vector<std::array<std::uint8_t, 3>> options(d);
  std::vector<int> option_count(d);
  for (int u = 0; u < d; ++u) {
    int k = 0;
    options[u][k++] = 0;
    for (int colour = 1; colour <= 2; ++colour) {
      if (allows(c.lists[u], colour) && colour != 3 - centre) options[u][k++] = static_cast<std::uint8_t>(colour);
    }
    option_count[u] = k;
  }
  const auto edges = c.h.edges();
  std::vector<int> index(d, 0);
  std::vector<std::uint8_t> colouring(d, 0);
  for (;;) {
    for (int u = 0; u < d; ++u) colouring[u] = options[u][index[u]];
    bool valid = true;
    for (const auto& [a, b] : edges) {
      if (colouring[a] != 0 && colouring[b] != 0 && colouring[a] != colouring[b]) {
        valid = false;
        break;
      }
    }
    if (valid) visit(colouring);
    int pos = 0;
    while (pos < d && index[pos] + 1 == option_count[pos]) index[pos++] = 0;
    if (pos == d) break;
    ++index[pos];
  }
}

IntPolynomial from_counts(const std::vector<long>& counts) {
  std::vector<Integer> coeffs;
  for (auto c : counts) coeffs.emplace_back(c);
  return IntPolynomial(std::move(coeffs));
}

std::string edges_text(const Graph& h) {
  std::string out = "H={";
  bool first = true;
  for (const auto& [u, v] : h.edges()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out + "}";
}

}  // namespace

std::string list_to_string(ColourList l) {
  switch (l) {
    case kListEmpty:
      return "-";
    case kListOne:
      return "1";
    case kListTwo:
      return "2";
    default:
      return "12";
  }
}

Configuration make_configuration(Graph h, std::vector<ColourList> lists) {
  if (static_cast<int>(lists.size()) != h.n()) throw UsageError("configuration: one list per vertex of H");
  for (auto l : lists) {
    if (l > kListBoth) throw UsageError("configuration: list values must lie in 0..3");
  }
  return {std::move(h), std::move(lists)};
}

Configuration make_empty_lists(const Graph& h) { return make_configuration(h, std::vector<ColourList>(h.n(), kListEmpty)); }

Configuration make_single_colour(const Graph& h, int colour) {
  if (colour != 1 && colour != 2) throw UsageError("colour must be 1 or 2");
  return make_configuration(h, std::vector<ColourList>(h.n(), colour == 1 ? kListOne : kListTwo));
}

Configuration make_complete_full(int d) { return make_configuration(make_complete(d), std::vector<ColourList>(d, kListBoth)); }

ConfigStats local_partition_functions(const Configuration& c) {
  const int d = c.d();
  require_stats_cap(d);
  ConfigStats s;
  s.d = d;
  for (auto l : c.lists) {
    s.a1 += allows(l, 1);
    s.a2 += allows(l, 2);
  }
  s.lists_all_equal = std::all_of(c.lists.begin(), c.lists.end(), [&](ColourList l) { return l == c.lists.front(); });
  s.all_lists_empty = std::all_of(c.lists.begin(), c.lists.end(), [](ColourList l) { return l == kListEmpty; });

  std::vector<long> p0(d + 1, 0);
  std::vector<long> p1(d + 1, 0);
  std::vector<long> p2(d + 1, 0);
  for_each_list_colouring(c, 0, [&](const std::vector<std::uint8_t>& colouring) {
    int x1 = 0;
    int x2 = 0;
    for (auto col : colouring) {
      x1 += col == 1;
      x2 += col == 2;
    }
    ++p0[x1 + x2];
    if (x2 == 0) ++p1[x1];
    if (x1 == 0) ++p2[x2];
    if (x1 > 0 && x2 > 0) s.has_dichromatic = true;
  });
  s.p0 = from_counts(p0);
  s.p1 = from_counts(p1);
  s.p2 = from_counts(p2);
  if (s.p1 != binomial_power(s.a1) || s.p2 != binomial_power(s.a2)) {
    throw VerificationError("single-colour local partition function differs from (1+λ)^a");
  }
  s.p12 = s.p1 + s.p2;
  s.pc = s.p0 + s.p12.shifted(1);
  return s;
}

Rational alpha_v(const ConfigStats& s, const Rational& lambda) {
  if (lambda.sign() <= 0) throw DomainError("activity must be positive");
  return lambda * poly_eval(s.p12, lambda) / poly_eval(s.pc, lambda);
}

Rational alpha_u(const ConfigStats& s, const Rational& lambda) {
  if (lambda.sign() <= 0) throw DomainError("activity must be positive");
  const Rational numerator =
      poly_eval(poly_derivative(s.p0), lambda) + lambda * poly_eval(poly_derivative(s.p12), lambda);
  return lambda * numerator / (Rational(s.d) * poly_eval(s.pc, lambda));
}

Rational alpha_v(const Configuration& c, const Rational& lambda) { return alpha_v(local_partition_functions(c), lambda); }
Rational alpha_u(const Configuration& c, const Rational& lambda) { return alpha_u(local_partition_functions(c), lambda); }

PerColourAlpha star_enumeration_alpha(const Configuration& c, const Rational& lambda) {
  if (lambda.sign() <= 0) throw DomainError("activity must be positive");
  const int d = c.d();
  require_stats_cap(d);
  // Polynomials in λ indexed by the number of coloured vertices of the star.
  std::vector<long> z(d + 2, 0);
  std::array<std::vector<long>, 3> centre{std::vector<long>(d + 2, 0), std::vector<long>(d + 2, 0),
                                          std::vector<long>(d + 2, 0)};
  std::array<std::vector<long>, 3> neighbour = centre;
  for (int cv = 0; cv <= 2; ++cv) {
    for_each_list_colouring(c, cv, [&](const std::vector<std::uint8_t>& colouring) {
      std::array<int, 3> counts{0, 0, 0};
      for (auto col : colouring) ++counts[col];
      const int weight = counts[1] + counts[2] + (cv != 0);
      ++z[weight];
      ++centre[cv][weight];
      neighbour[1][weight] += counts[1];
      neighbour[2][weight] += counts[2];
    });
  }
  const Rational total = poly_eval(from_counts(z), lambda);
  const Rational dd(d);
  return {poly_eval(from_counts(centre[1]), lambda) / total, poly_eval(from_counts(centre[2]), lambda) / total,
          poly_eval(from_counts(neighbour[1]), lambda) / (dd * total),
          poly_eval(from_counts(neighbour[2]), lambda) / (dd * total)};
}

PerColourAlpha per_colour_alpha(const Configuration& c, const Rational& lambda) {
  const auto s = local_partition_functions(c);
  const Rational pc = poly_eval(s.pc, lambda);
  const auto star = star_enumeration_alpha(c, lambda);
  return {lambda * poly_eval(s.p1, lambda) / pc, lambda * poly_eval(s.p2, lambda) / pc, star.u1, star.u2};
}

ConfigClass classify(const Configuration& c) {
  const auto first = c.lists.empty() ? kListEmpty : c.lists.front();
  const bool equal = std::all_of(c.lists.begin(), c.lists.end(), [&](ColourList l) { return l == first; });
  if (!equal) return ConfigClass::other;
  switch (first) {
    case kListEmpty:
      return ConfigClass::empty_lists;
    case kListOne:
      return ConfigClass::single_colour_1;
    case kListTwo:
      return ConfigClass::single_colour_2;
    default:
      return c.h.edge_count() == c.d() * (c.d() - 1) / 2 ? ConfigClass::complete_full : ConfigClass::other;
  }
}

CanonicalKey config_key(const Configuration& c) { return canonical_labelled_form(c.h, c.lists); }

std::string config_label(const Configuration& c) {
  switch (classify(c)) {
    case ConfigClass::complete_full:
      return "K" + std::to_string(c.d()) + "-full-lists";
    case ConfigClass::empty_lists:
      return "C0[" + edges_text(c.h) + "]";
    case ConfigClass::single_colour_1:
      return "C1(1)[" + edges_text(c.h) + "]";
    case ConfigClass::single_colour_2:
      return "C1(2)[" + edges_text(c.h) + "]";
    case ConfigClass::other:
      break;
  }
  std::string lists;
  for (std::size_t i = 0; i < c.lists.size(); ++i) lists += (i ? "," : "") + list_to_string(c.lists[i]);
  return "[" + edges_text(c.h) + " L=" + lists + "]";
}

// ------------------------------------------------------------- enumeration

namespace {

struct PermTables {
  std::vector<std::vector<int>> perms;
  // pair_image[p][k]: bit position of the image of pair k under perm p.
  std::vector<std::vector<int>> pair_image;
};

PermTables build_perm_tables(int d) {
  PermTables t;
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> pair_pos;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      pair_pos[{i, j}] = static_cast<int>(pairs.size());
      pairs.emplace_back(i, j);
    }
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> image;
    for (const auto& [i, j] : pairs) image.push_back(pair_pos[{std::min(perm[i], perm[j]), std::max(perm[i], perm[j])}]);
    t.perms.push_back(perm);
    t.pair_image.push_back(std::move(image));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return t;
}

std::uint32_t permute_edges(std::uint32_t code, const std::vector<int>& image) {
  std::uint32_t out = 0;
  for (std::uint32_t bits = code; bits; bits &= bits - 1) out |= std::uint32_t{1} << image[__builtin_ctz(bits)];
  return out;
}

std::uint32_t permute_lists(std::uint32_t code, const std::vector<int>& perm) {
  std::uint32_t out = 0;
  for (std::size_t v = 0; v < perm.size(); ++v) out |= ((code >> (2 * v)) & 3U) << (2 * perm[v]);
  return out;
}

std::vector<ConfigEntry> build_configs(int d) {
  const auto tables = build_perm_tables(d);
  const int pair_count = d * (d - 1) / 2;
  std::set<std::uint32_t> graph_reps;
  for (std::uint32_t code = 0; code < (std::uint32_t{1} << pair_count); ++code) {
    std::uint32_t best = code;
    for (const auto& image : tables.pair_image) best = std::min(best, permute_edges(code, image));
    graph_reps.insert(best);
  }
  std::vector<ConfigEntry> out;
  for (const std::uint32_t rep : graph_reps) {
    std::vector<std::size_t> automorphisms;
    for (std::size_t p = 0; p < tables.perms.size(); ++p) {
      if (permute_edges(rep, tables.pair_image[p]) == rep) automorphisms.push_back(p);
    }
    const Graph h = graph_from_edge_code(d, rep);
    for (std::uint32_t lists = 0; lists < (std::uint32_t{1} << (2 * d)); ++lists) {
      bool minimal = true;
      for (auto p : automorphisms) {
        if (permute_lists(lists, tables.perms[p]) < lists) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      std::vector<ColourList> l(d);
      for (int v = 0; v < d; ++v) l[v] = static_cast<ColourList>((lists >> (2 * v)) & 3U);
      out.push_back({(static_cast<CanonicalKey>(rep) << 16) | lists, make_configuration(h, std::move(l))});
    }
  }
  std::sort(out.begin(), out.end(), [](const ConfigEntry& a, const ConfigEntry& b) { return a.key < b.key; });
  return out;
}

}  // namespace

const std::vector<ConfigEntry>& enumerate_configs(int d) {
  if (d < 1) throw UsageError("enumerate_configs: d must be >= 1");
  if (d > kConfigEnumerationMaxD) {
    throw CapacityError("enumerate_configs: d <= " + std::to_string(kConfigEnumerationMaxD) + ", got " +
                        std::to_string(d));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<ConfigEntry>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(d);
  if (it == cache.end()) it = cache.emplace(d, build_configs(d)).first;
  return it->second;
}

// ---------------------------------------------------------------- text form

std::string serialize_configuration(const Configuration& c) {
  std::string out = serialize_edge_list(c.h) + "lists:";
  for (auto l : c.lists) out += " " + list_to_string(l);
  return out + "\n";
}

Configuration parse_configuration(std::string_view text) {
  const auto pos = text.find("lists:");
  if (pos == std::string_view::npos) throw ParseError("configuration: missing 'lists:' line");
  Graph h = parse_edge_list(text.substr(0, pos));
  const int list_line = static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n')) + 1;
  auto rest = text.substr(pos + 6);
  const auto eol = rest.find('\n');
  std::istringstream fields{std::string(rest.substr(0, eol))};
  std::vector<ColourList> lists;
  std::string token;
  while (fields >> token) {
    if (token == "-") lists.push_back(kListEmpty);
    else if (token == "1") lists.push_back(kListOne);
    else if (token == "2") lists.push_back(kListTwo);
    else if (token == "12") lists.push_back(kListBoth);
    else throw ParseError("configuration: bad list token '" + token + "'", list_line);
  }
  if (static_cast<int>(lists.size()) != h.n()) {
    throw ParseError("configuration: expected " + std::to_string(h.n()) + " lists, got " + std::to_string(lists.size()),
                     list_line);
  }
  return make_configuration(std::move(h), std::move(lists));
}

}  // namespace wr
