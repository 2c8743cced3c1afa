#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wr {

/// Bitset over vertex ids 0..size-1. Bits at or beyond size are always clear.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int size) : size_(size), words_((size + 63) / 64, 0) {}
  static VertexSet full(int size);
  static VertexSet from_mask(int size, std::uint64_t mask);

  int size() const { return size_; }
  bool test(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  int count() const;
  bool empty() const;
  std::vector<int> members() const;
  /// Low 64 bits; only meaningful for size <= 64.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct Edge {
  int u;
  int v;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  /// Empty graph on n vertices.
  explicit Graph(int n);
  /// Throws UsageError on out-of-range endpoints, self-loops or repeated edges.
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  int edge_count() const { return m_; }
  bool adjacent(int u, int v) const { return adjacency_[u].test(v); }
  const VertexSet& neighbourhood(int v) const { return adjacency_[v]; }
  const std::vector<int>& neighbours(int v) const { return neighbours_[v]; }
  int degree(int v) const { return static_cast<int>(neighbours_[v].size()); }
  /// Sorted, each edge once with u < v.
  std::vector<Edge> edges() const;
  /// One 32-bit neighbourhood mask per vertex; requires n <= 32.
  std::vector<std::uint32_t> adjacency_masks32() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adjacency_ == b.adjacency_; }

 private:
  void add_edge_checked(int u, int v);

  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<std::vector<int>> neighbours_;
};

Graph make_empty(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int a, int b);
Graph make_cycle(int n);
Graph make_path(int n);
Graph make_petersen();
/// C_k × K_2: two k-cycles joined by a perfect matching.
Graph make_prism(int k);
Graph disjoint_union(const Graph& g, const Graph& h);
/// Pairing model with whole-sample rejection of loops and multi-edges.
/// Deterministic for a given seed.
Graph make_random_regular(int n, int d, std::uint64_t seed, int max_attempts = 100000);

/// Components of the subgraph induced by `subset`; 0 for the empty set.
int component_count(const Graph& g, const VertexSet& subset);
std::vector<VertexSet> connected_components(const Graph& g);
bool is_d_regular(const Graph& g, int d);
/// First vertex whose degree differs from d, if any.
std::optional<int> regularity_violation(const Graph& g, int d);
/// Every component is a complete graph on exactly k vertices.
bool is_union_of_complete(const Graph& g, int k);
/// Image of g under the vertex map v -> perm[v].
Graph permuted(const Graph& g, std::span<const int> perm);

/// Canonical form of a vertex-labelled graph on at most 8 vertices, with labels in 0..3.
/// Two inputs share a key exactly when a label-preserving isomorphism maps one onto the other.
using CanonicalKey = std::uint64_t;
inline constexpr int kCanonicalMaxVertices = 8;
CanonicalKey canonical_labelled_form(const Graph& h, std::span<const std::uint8_t> labels);
/// Edge code of the upper triangle in (0,1),(0,2),...,(n-2,n-1) order, bit 0 first.
std::uint32_t edge_code(const Graph& h);
Graph graph_from_edge_code(int n, std::uint32_t code);

/// Text format: "n m" header, then m lines "u v"; '#' comments and blank lines ignored.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);
Graph read_edge_list_file(const std::string& path);

}  // namespace wr
