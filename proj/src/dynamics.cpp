#include "wr/dynamics.hpp"

#include <algorithm>
#include <cmath>

#include "wr/error.hpp"

namespace wr {

namespace {

double uniform01(ChainRng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

ChainState initial_state(const Graph& g) { return {Colouring(g.n(), 0), 0, 0}; }

unsigned allowed_colours(const Graph& g, const Colouring& colouring, int v) {
  unsigned allowed = 3;
  for (int w : g.neighbours(v)) {
    if (colouring[w] == 1) allowed &= ~2U;
    if (colouring[w] == 2) allowed &= ~1U;
  }
  return allowed;
}

void glauber_step(ChainState& state, const Graph& g, double lambda, ChainRng& rng) {
  const int v = static_cast<int>(rng() % static_cast<std::uint64_t>(g.n()));
  const unsigned allowed = allowed_colours(g, state.colouring, v);
  const double w1 = (allowed & 1U) ? lambda : 0.0;
  const double w2 = (allowed & 2U) ? lambda : 0.0;
  const double r = uniform01(rng) * (1.0 + w1 + w2);
  std::uint8_t next = 0;
  if (r >= 1.0) next = r < 1.0 + w1 ? 1 : 2;
  state.coloured += (next != 0) - (state.colouring[v] != 0);
  state.colouring[v] = next;
  ++state.step;
}

OccupancyEstimate estimate_occupancy(const Graph& g, const SamplerOptions& options) {
  if (g.n() < 1) throw UsageError("estimate_occupancy: graph has no vertices");
  if (options.samples < 1 || options.thinning < 1) throw UsageError("estimate_occupancy: samples and thinning must be >= 1");
  if (!(options.lambda > 0.0)) throw DomainError("estimate_occupancy: lambda must be positive");
  ChainRng rng(options.seed);
  ChainState state = initial_state(g);
  const std::uint64_t burn_in = options.burn_in == 0 ? 1000ULL * static_cast<std::uint64_t>(g.n()) : options.burn_in;
  for (std::uint64_t i = 0; i < burn_in; ++i) glauber_step(state, g, options.lambda, rng);

  const auto batches = static_cast<std::uint64_t>(std::max<long long>(
      1, std::min<long long>(options.batches, static_cast<long long>(options.samples))));
  const std::uint64_t per_batch = options.samples / batches;
  std::vector<double> batch_sum(batches, 0.0);
  std::vector<std::uint64_t> batch_count(batches, 0);
  double total = 0.0;
  const double n = g.n();
  for (std::uint64_t s = 0; s < options.samples; ++s) {
    for (std::uint64_t t = 0; t < options.thinning; ++t) glauber_step(state, g, options.lambda, rng);
    const double fraction = state.coloured / n;
    total += fraction;
    const std::uint64_t b = std::min(batches - 1, s / per_batch);
    batch_sum[b] += fraction;
    ++batch_count[b];
    if (options.trace) options.trace(state.step, fraction);
  }
  OccupancyEstimate out;
  out.samples = options.samples;
  out.estimate = total / static_cast<double>(options.samples);
  if (batches > 1) {
    double var = 0.0;
    for (std::uint64_t b = 0; b < batches; ++b) {
      const double mean = batch_sum[b] / static_cast<double>(batch_count[b]);
      var += (mean - out.estimate) * (mean - out.estimate);
    }
    var /= static_cast<double>(batches - 1);
    out.stderr_ = std::sqrt(var / static_cast<double>(batches));
  }
  return out;
}

OccupancyEstimate pool_estimates(std::span<const OccupancyEstimate> chains) {
  if (chains.empty()) throw UsageError("pool_estimates: no chains");
  OccupancyEstimate out;
  double sum = 0.0;
  double var = 0.0;
  for (const auto& c : chains) {
    sum += c.estimate;
    var += c.stderr_ * c.stderr_;
    out.samples += c.samples;
  }
  const double k = static_cast<double>(chains.size());
  out.estimate = sum / k;
  out.stderr_ = std::sqrt(var) / k;
  out.rng = chains.front().rng;
  return out;
}

TransitionMatrix transition_matrix(const Graph& g, double lambda) {
  if (g.n() > 8) throw CapacityError("transition_matrix: at most 8 vertices");
  TransitionMatrix tm;
  const int n = g.n();
  Colouring c(n, 0);
  for (;;) {
    if (is_valid_colouring(g, c)) tm.states.push_back(c);
    int pos = 0;
    while (pos < n && c[pos] == 2) c[pos++] = 0;
    if (pos == n) break;
    ++c[pos];
  }
  const auto index_of = [&](const Colouring& x) {
    for (std::size_t i = 0; i < tm.states.size(); ++i)
      if (tm.states[i] == x) return i;
    throw VerificationError("transition leaves the valid state space");
  };
  tm.p.assign(tm.states.size(), std::vector<double>(tm.states.size(), 0.0));
  for (std::size_t i = 0; i < tm.states.size(); ++i) {
    for (int v = 0; v < n; ++v) {
      const unsigned allowed = allowed_colours(g, tm.states[i], v);
      const double z = 1.0 + ((allowed & 1U) ? lambda : 0.0) + ((allowed & 2U) ? lambda : 0.0);
      for (std::uint8_t colour = 0; colour <= 2; ++colour) {
        if (colour != 0 && !((allowed >> (colour - 1)) & 1U)) continue;
        Colouring next = tm.states[i];
        next[v] = colour;
        tm.p[i][index_of(next)] += (colour == 0 ? 1.0 : lambda) / z / n;
      }
    }
  }
  return tm;
}

bool reaches_empty_by_uncolouring(const Graph& g, const Colouring& start) {
  if (!is_valid_colouring(g, start)) return false;
  Colouring c = start;
  for (int v = 0; v < g.n(); ++v) {
    if (c[v] == 0) continue;
    // Colour 0 always carries weight 1 in the heat-bath draw.
    c[v] = 0;
    if (!is_valid_colouring(g, c)) return false;
  }
  return std::all_of(c.begin(), c.end(), [](std::uint8_t x) { return x == 0; });
}

}  // namespace wr
