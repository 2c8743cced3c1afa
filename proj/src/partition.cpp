#include "wr/partition.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <thread>
#include <unordered_map>

#include "wr/error.hpp"

namespace wr {

namespace {

void require_exact_cap(const Graph& g, int cap, const char* what) {
  if (g.n() > cap) {
    throw CapacityError(std::string(what) + ": at most " + std::to_string(cap) + " vertices, got " +
                        std::to_string(g.n()));
  }
}

constexpr std::uint32_t kBlock = 4096;

void tabulate_range(std::span<const std::uint32_t> adjacency, std::uint64_t begin, std::uint64_t end,
                    kernels::ComponentCountFn count_fn, SubsetComponentTable& table) {
  std::vector<std::uint8_t> counts(kBlock);
  for (std::uint64_t start = begin; start < end; start += kBlock) {
    const auto len = static_cast<std::size_t>(std::min<std::uint64_t>(kBlock, end - start));
    std::span<std::uint8_t> out(counts.data(), len);
    count_fn(adjacency, static_cast<std::uint32_t>(start), out);
    for (std::size_t i = 0; i < len; ++i) {
      const int size = std::popcount(static_cast<std::uint32_t>(start + i));
      ++table[size][out[i]];
    }
  }
}

}  // namespace

bool is_valid_colouring(const Graph& g, const Colouring& colouring) {
  if (static_cast<int>(colouring.size()) != g.n()) return false;
  for (const auto& [u, v] : g.edges()) {
    if (colouring[u] != 0 && colouring[v] != 0 && colouring[u] != colouring[v]) return false;
  }
  return std::all_of(colouring.begin(), colouring.end(), [](std::uint8_t c) { return c <= 2; });
}

SubsetComponentTable subset_component_table(const Graph& g, const PartitionOptions& options) {
  require_exact_cap(g, kExactVertexCap, "wr_partition");
  const int n = g.n();
  const auto adjacency = g.adjacency_masks32();
  const auto count_fn = kernels::component_counter(options.isa);
  const std::uint64_t total = std::uint64_t{1} << n;
  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(total / kBlock) + 1));

  std::vector<SubsetComponentTable> partial(workers, SubsetComponentTable(n + 1, std::vector<std::uint64_t>(n + 1, 0)));
  if (workers == 1) {
    tabulate_range(adjacency, 0, total, count_fn, partial[0]);
  } else {
    const std::uint64_t chunk = (total + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = std::min(total, chunk * w);
      const std::uint64_t end = std::min(total, begin + chunk);
      threads.emplace_back([&, w, begin, end] { tabulate_range(adjacency, begin, end, count_fn, partial[w]); });
    }
    for (auto& t : threads) t.join();
  }
  SubsetComponentTable table = std::move(partial[0]);
  for (int w = 1; w < workers; ++w)
    for (int k = 0; k <= n; ++k)
      for (int c = 0; c <= n; ++c) table[k][c] += partial[w][k][c];
  return table;
}

IntPolynomial wr_partition(const Graph& g, const PartitionOptions& options) {
  const auto table = subset_component_table(g, options);
  std::vector<Integer> coeffs(g.n() + 1);
  for (int k = 0; k <= g.n(); ++k) {
    for (int c = 0; c <= g.n(); ++c) {
      if (table[k][c] == 0) continue;
      Integer term(static_cast<unsigned long>(table[k][c]));
      mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), static_cast<mp_bitcnt_t>(c));
      coeffs[k] += term;
    }
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial wr_partition_brute(const Graph& g) {
  require_exact_cap(g, kBruteVertexCap, "wr_partition_brute");
  const int n = g.n();
  const auto edges = g.edges();
  std::vector<unsigned long> counts(n + 1, 0);
  Colouring colouring(n, 0);
  for (;;) {
    bool valid = true;
    for (const auto& [u, v] : edges) {
      if (colouring[u] != 0 && colouring[v] != 0 && colouring[u] != colouring[v]) {
        valid = false;
        break;
      }
    }
    if (valid) {
      const auto coloured = std::count_if(colouring.begin(), colouring.end(), [](std::uint8_t c) { return c != 0; });
      ++counts[coloured];
    }
    int pos = 0;
    while (pos < n && colouring[pos] == 2) colouring[pos++] = 0;
    if (pos == n) break;
    ++colouring[pos];
  }
  std::vector<Integer> coeffs;
  for (auto c : counts) coeffs.emplace_back(c);
  return IntPolynomial(std::move(coeffs));
}

BivariatePolynomial wr_partition_bivariate(const Graph& g) {
  require_exact_cap(g, kExactVertexCap, "wr_partition_bivariate");
  const int n = g.n();
  const auto adjacency = g.adjacency_masks32();
  // Subsets are grouped by the multiset of their component sizes.
  std::unordered_map<std::string, std::uint64_t> signatures;
  std::string sizes;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < total; ++s) {
    sizes.clear();
    auto remaining = static_cast<std::uint32_t>(s);
    while (remaining) {
      std::uint32_t frontier = remaining & (~remaining + 1);
      std::uint32_t component = frontier;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint32_t fresh = adjacency[v] & remaining & ~component;
        component |= fresh;
        frontier |= fresh;
      }
      sizes.push_back(static_cast<char>(std::popcount(component)));
      remaining &= ~component;
    }
    std::sort(sizes.begin(), sizes.end());
    ++signatures[sizes];
  }
  std::vector<std::pair<std::string, std::uint64_t>> ordered(signatures.begin(), signatures.end());
  std::sort(ordered.begin(), ordered.end());
  BivariatePolynomial total_poly;
  for (const auto& [signature, count] : ordered) {
    BivariatePolynomial term = BivariatePolynomial::monomial(Integer(static_cast<unsigned long>(count)), 0, 0);
    for (char size : signature) {
      const auto k = static_cast<unsigned>(size);
      BivariatePolynomial factor;
      factor.add_term(1, k, 0);
      factor.add_term(1, 0, k);
      term = term * factor;
    }
    total_poly = total_poly + term;
  }
  return total_poly;
}

Integer hom_count_wr(const Graph& g) {
  Integer total = 0;
  const auto p = wr_partition(g);
  for (const auto& c : p.coefficients()) total += c;
  return total;
}

}  // namespace wr
