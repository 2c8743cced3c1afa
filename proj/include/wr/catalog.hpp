#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wr/graph.hpp"

namespace wr {

struct CatalogEntry {
  std::string name;
  Graph graph;
  /// Common degree; -1 when the graph is not regular.
  int d = -1;
};

/// Builtin graph specification: "complete:4", "cycle:5", "path:3", "empty:2",
/// "complete_bipartite:3,3", "petersen", "prism:3", "random_regular:10,3,1".
/// Terms joined by '+' are combined by disjoint union.
Graph parse_builtin(std::string_view spec);

/// Named catalogs: "d1", "d2", "d3", "d4", "oracle" (n <= 12, mixed degrees)
/// and "all" (d1..d4). Throws UsageError for unknown names.
std::vector<CatalogEntry> catalog(std::string_view name);

/// The twenty random 3-regular graphs of the d3 catalog (n in 6..14).
std::vector<CatalogEntry> random_cubic_sample();

}  // namespace wr
