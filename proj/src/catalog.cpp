#include "wr/catalog.hpp"

#include <charconv>

#include "wr/error.hpp"

namespace wr {

namespace {

std::vector<int> parse_int_params(std::string_view text, std::string_view spec) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (piece.empty() || ec != std::errc{} || ptr != piece.data() + piece.size()) {
      throw UsageError("bad builtin parameters in '" + std::string(spec) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Graph parse_single(std::string_view term) {
  const auto colon = term.find(':');
  const std::string name(term.substr(0, colon));
  const std::vector<int> p =
      colon == std::string_view::npos ? std::vector<int>{} : parse_int_params(term.substr(colon + 1), term);
  auto need = [&](std::size_t count) {
    if (p.size() != count) {
      throw UsageError("builtin '" + name + "' takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "petersen") {
    need(0);
    return make_petersen();
  }
  if (name == "complete_bipartite") {
    need(2);
    return make_complete_bipartite(p[0], p[1]);
  }
  if (name == "complete" || name == "cycle" || name == "path" || name == "empty" || name == "prism") {
    need(1);
    if (name == "complete") return make_complete(p[0]);
    if (name == "cycle") return make_cycle(p[0]);
    if (name == "path") return make_path(p[0]);
    if (name == "empty") return make_empty(p[0]);
    return make_prism(p[0]);
  }
  if (name == "random_regular") {
    need(3);
    if (p[2] < 0) throw UsageError("random_regular seed must be nonnegative");
    return make_random_regular(p[0], p[1], static_cast<std::uint64_t>(p[2]));
  }
  throw UsageError("unknown builtin graph '" + name + "'");
}

void add(std::vector<CatalogEntry>& out, const std::string& spec) {
  Graph g = parse_builtin(spec);
  int d = g.n() > 0 ? g.degree(0) : 0;
  if (!is_d_regular(g, d)) d = -1;
  out.push_back({spec, std::move(g), d});
}

}  // namespace

Graph parse_builtin(std::string_view spec) {
  if (spec.empty()) throw UsageError("empty builtin graph specification");
  Graph result;
  bool first = true;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto plus = spec.find('+', start);
    const auto term = spec.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
    Graph g = parse_single(term);
    result = first ? std::move(g) : disjoint_union(result, g);
    first = false;
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return result;
}

std::vector<CatalogEntry> random_cubic_sample() {
  static const int sizes[] = {6, 8, 10, 12, 14};
  std::vector<CatalogEntry> out;
  for (int i = 0; i < 20; ++i) add(out, "random_regular:" + std::to_string(sizes[i % 5]) + ",3," + std::to_string(i + 1));
  return out;
}

std::vector<CatalogEntry> catalog(std::string_view name) {
  std::vector<CatalogEntry> out;
  if (name == "d1") {
    for (const char* s : {"complete:2", "complete:2+complete:2", "complete:2+complete:2+complete:2"}) add(out, s);
  } else if (name == "d2") {
    for (int n = 3; n <= 12; ++n) add(out, "cycle:" + std::to_string(n));
    for (const char* s : {"cycle:3+cycle:3", "cycle:3+cycle:4", "cycle:4+cycle:4", "cycle:3+cycle:5", "cycle:5+cycle:6",
                          "cycle:4+cycle:8", "cycle:6+cycle:6", "cycle:3+cycle:3+cycle:3", "cycle:3+cycle:3+cycle:3+cycle:3",
                          "cycle:5+cycle:7+cycle:9"}) {
      add(out, s);
    }
  } else if (name == "d3") {
    for (const char* s : {"complete:4", "complete_bipartite:3,3", "petersen", "prism:3", "prism:4", "prism:5", "prism:6",
                          "complete:4+complete:4", "complete:4+complete_bipartite:3,3", "complete:4+petersen",
                          "complete:4+complete:4+complete:4"}) {
      add(out, s);
    }
    auto sample = random_cubic_sample();
    out.insert(out.end(), std::make_move_iterator(sample.begin()), std::make_move_iterator(sample.end()));
  } else if (name == "d4") {
    for (const char* s : {"complete:5", "complete_bipartite:4,4", "complete:5+complete:5", "random_regular:8,4,1",
                          "random_regular:9,4,2", "random_regular:10,4,3", "random_regular:12,4,4"}) {
      add(out, s);
    }
  } else if (name == "oracle") {
    for (int n = 3; n <= 8; ++n) add(out, "cycle:" + std::to_string(n));
    for (int n = 1; n <= 9; ++n) add(out, "complete:" + std::to_string(n));
    for (const char* s : {"complete_bipartite:3,3", "complete_bipartite:2,3", "petersen", "prism:3", "prism:4", "prism:5",
                          "prism:6", "path:1", "path:5", "empty:2", "empty:4", "cycle:3+cycle:3", "cycle:4+cycle:5",
                          "complete:4+complete:4", "complete:4+cycle:3", "complete:2+path:3", "random_regular:10,3,1",
                          "random_regular:12,3,7", "random_regular:12,4,3"}) {
      add(out, s);
    }
  } else if (name == "all") {
    for (const char* part : {"d1", "d2", "d3", "d4"}) {
      auto more = catalog(part);
      out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    }
  } else {
    throw UsageError("unknown catalog '" + std::string(name) + "' (expected d1, d2, d3, d4, oracle, all)");
  }
  return out;
}

}  // namespace wr
