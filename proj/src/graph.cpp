#include "wr/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "wr/error.hpp"

namespace wr {

// --------------------------------------------------------------- VertexSet

VertexSet VertexSet::full(int size) {
  VertexSet s(size);
  for (int v = 0; v < size; ++v) s.set(v);
  return s;
}

VertexSet VertexSet::from_mask(int size, std::uint64_t mask) {
  VertexSet s(size);
  if (size < 64) mask &= (std::uint64_t{1} << size) - 1;
  if (!s.words_.empty()) s.words_[0] = mask;
  return s;
}

int VertexSet::count() const {
  int c = 0;
  for (auto w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (auto w = words_[i]; w; w &= w - 1) out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
  }
  return out;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
  return *this;
}

// ------------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), adjacency_(n, VertexSet(n)), neighbours_(n) {
  if (n < 0) throw UsageError("graph vertex count must be nonnegative");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) add_edge_checked(e.u, e.v);
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
}

void Graph::add_edge_checked(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    throw UsageError("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range for n=" + std::to_string(n_));
  }
  if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
  if (adjacency_[u].test(v)) throw UsageError("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  neighbours_[u].push_back(v);
  neighbours_[v].push_back(u);
  ++m_;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbours_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::vector<std::uint32_t> Graph::adjacency_masks32() const {
  if (n_ > 32) throw CapacityError("32-bit adjacency masks need n <= 32, got " + std::to_string(n_));
  std::vector<std::uint32_t> out(n_);
  for (int v = 0; v < n_; ++v) out[v] = static_cast<std::uint32_t>(adjacency_[v].low_word());
  return out;
}

// -------------------------------------------------------------- generators

Graph make_empty(int n) {
  if (n < 1) throw UsageError("make_empty: n must be >= 1");
  return Graph(n);
}

Graph make_complete(int n) {
  if (n < 1) throw UsageError("make_complete: n must be >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, e);
}

Graph make_complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw UsageError("make_complete_bipartite: both sides must be >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, e);
}

Graph make_cycle(int n) {
  if (n < 3) throw UsageError("make_cycle: n must be >= 3");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph(n, e);
}

Graph make_path(int n) {
  if (n < 1) throw UsageError("make_path: n must be >= 1");
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(n, e);
}

Graph make_petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});           // outer cycle
    e.push_back({5 + i, 5 + (i + 2) % 5});   // inner pentagram
    e.push_back({i, 5 + i});                 // spokes
  }
  return Graph(10, e);
}

Graph make_prism(int k) {
  if (k < 3) throw UsageError("make_prism: k must be >= 3");
  std::vector<Edge> e;
  for (int i = 0; i < k; ++i) {
    e.push_back({i, (i + 1) % k});
    e.push_back({k + i, k + (i + 1) % k});
    e.push_back({i, k + i});
  }
  return Graph(2 * k, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> e = g.edges();
  for (const auto& [u, v] : h.edges()) e.push_back({u + g.n(), v + g.n()});
  return Graph(g.n() + h.n(), e);
}

Graph make_random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
  if (n < 1 || d < 0 || d >= n) throw UsageError("make_random_regular: need 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0) throw UsageError("make_random_regular: n*d must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
    // Fisher-Yates with an explicit draw so the sequence is library independent.
    for (std::size_t i = points.size(); i > 1; --i) {
      const std::size_t j = rng() % i;
      std::swap(points[i - 1], points[j]);
    }
    std::vector<VertexSet> seen(n, VertexSet(n));
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
      int u = points[i];
      int v = points[i + 1];
      if (u == v || seen[u].test(v)) {
        ok = false;
        break;
      }
      seen[u].set(v);
      seen[v].set(u);
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
    if (ok) return Graph(n, edges);
  }
  throw RetryExhaustedError("make_random_regular: no simple pairing after " + std::to_string(max_attempts) + " attempts");
}

// ----------------------------------------------------------------- queries

int component_count(const Graph& g, const VertexSet& subset) {
  VertexSet remaining = subset;
  int components = 0;
  std::vector<int> stack;
  for (int start : subset.members()) {
    if (!remaining.test(start)) continue;
    ++components;
    remaining.reset(start);
    stack.push_back(start);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbours(v)) {
        if (remaining.test(w)) {
          remaining.reset(w);
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<int> label(g.n(), -1);
  std::vector<VertexSet> out;
  for (int s = 0; s < g.n(); ++s) {
    if (label[s] >= 0) continue;
    VertexSet comp(g.n());
    std::vector<int> stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comp.set(v);
      for (int w : g.neighbours(v)) {
        if (label[w] < 0) {
          label[w] = label[s];
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<int> regularity_violation(const Graph& g, int d) {
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) != d) return v;
  }
  return std::nullopt;
}

bool is_d_regular(const Graph& g, int d) { return !regularity_violation(g, d).has_value(); }

bool is_union_of_complete(const Graph& g, int k) {
  if (g.n() == 0) return true;
  for (const auto& comp : connected_components(g)) {
    if (comp.count() != k) return false;
    for (int v : comp.members()) {
      if (g.degree(v) != k - 1) return false;
    }
  }
  return true;
}

Graph permuted(const Graph& g, std::span<const int> perm) {
  std::vector<Edge> e;
  for (const auto& [u, v] : g.edges()) {
    const int a = perm[u];
    const int b = perm[v];
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.n(), e);
}

// ------------------------------------------------------- canonical labelling

namespace {

int pair_index(int i, int j, int n) {
  // (i<j) in row-major upper-triangle order.
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

}  // namespace

std::uint32_t edge_code(const Graph& h) {
  if (h.n() > kCanonicalMaxVertices) throw CapacityError("edge_code: at most 8 vertices");
  std::uint32_t code = 0;
  for (const auto& [u, v] : h.edges()) code |= std::uint32_t{1} << pair_index(u, v, h.n());
  return code;
}

Graph graph_from_edge_code(int n, std::uint32_t code) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((code >> pair_index(i, j, n)) & 1U) e.push_back({i, j});
  return Graph(n, e);
}

CanonicalKey canonical_labelled_form(const Graph& h, std::span<const std::uint8_t> labels) {
  const int n = h.n();
  if (n > kCanonicalMaxVertices) {
    throw CapacityError("canonical_labelled_form: at most 8 vertices, got " + std::to_string(n));
  }
  if (static_cast<int>(labels.size()) != n) throw UsageError("canonical_labelled_form: one label per vertex");
  for (auto l : labels) {
    if (l > 3) throw UsageError("canonical_labelled_form: labels must lie in 0..3");
  }
  const auto edges = h.edges();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  CanonicalKey best = std::numeric_limits<CanonicalKey>::max();
  do {
    std::uint32_t code = 0;
    for (const auto& [u, v] : edges) {
      const int a = perm[u];
      const int b = perm[v];
      code |= std::uint32_t{1} << (a < b ? pair_index(a, b, n) : pair_index(b, a, n));
    }
    std::uint32_t list_code = 0;
    for (int v = 0; v < n; ++v) list_code |= static_cast<std::uint32_t>(labels[v]) << (2 * perm[v]);
    best = std::min(best, (static_cast<CanonicalKey>(code) << 16) | list_code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// ------------------------------------------------------------- edge lists

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  bool have_header = false;
  int n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::vector<VertexSet> seen;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long long a = 0;
    long long b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("malformed line, expected two integers: '" + line + "'", line_no);
    }
    if (!have_header) {
      if (a < 0 || b < 0 || a > std::numeric_limits<int>::max()) throw ParseError("invalid header", line_no);
      n = static_cast<int>(a);
      m = b;
      seen.assign(n, VertexSet(n));
      have_header = true;
      continue;
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError("vertex out of range 0.." + std::to_string(n - 1) + ": '" + line + "'", line_no);
    }
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a), line_no);
    const int u = static_cast<int>(std::min(a, b));
    const int v = static_cast<int>(std::max(a, b));
    if (seen[u].test(v)) throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), line_no);
    seen[u].set(v);
    edges.push_back({u, v});
    if (static_cast<long long>(edges.size()) > m) {
      throw ParseError("more edges than the header's m=" + std::to_string(m), line_no);
    }
  }
  if (!have_header) throw ParseError("missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), line_no);
  }
  return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge-list file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_edge_list(buffer.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace wr
