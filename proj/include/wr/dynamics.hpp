#pragma once

// Single-site heat-bath (Glauber) dynamics for the Widom–Rowlinson model.
// Sampling runs in floating point; exact values live in the other modules.

#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "wr/graph.hpp"
#include "wr/partition.hpp"

namespace wr {

using ChainRng = std::mt19937_64;
inline constexpr const char* kChainRngName = "mt19937_64";

struct ChainState {
  Colouring colouring;
  std::uint64_t step = 0;
  int coloured = 0;
};

/// All vertices unoccupied.
ChainState initial_state(const Graph& g);

/// Colours v may take given its neighbours: bit 0 for colour 1, bit 1 for colour 2.
unsigned allowed_colours(const Graph& g, const Colouring& colouring, int v);

/// Picks a uniform vertex and redraws its colour from {0} ∪ allowed with weights 1, λ, λ.
void glauber_step(ChainState& state, const Graph& g, double lambda, ChainRng& rng);

struct SamplerOptions {
  double lambda = 1.0;
  /// 0 selects the default of 1000·n steps.
  std::uint64_t burn_in = 0;
  std::uint64_t samples = 100000;
  std::uint64_t thinning = 1;
  std::uint64_t seed = 1;
  int batches = 50;
  /// Called with (step, coloured fraction) for every recorded sample.
  std::function<void(std::uint64_t, double)> trace;
};

struct OccupancyEstimate {
  double estimate = 0.0;
  double stderr_ = 0.0;
  std::uint64_t samples = 0;
  std::string rng = kChainRngName;
};

/// Time average of the coloured fraction after burn-in; standard error by batch means.
OccupancyEstimate estimate_occupancy(const Graph& g, const SamplerOptions& options);
/// Average of independent chains with pooled standard error.
OccupancyEstimate pool_estimates(std::span<const OccupancyEstimate> chains);

/// Heat-bath transition matrix over all valid colourings of a small graph (n <= 8).
struct TransitionMatrix {
  std::vector<Colouring> states;
  std::vector<std::vector<double>> p;
};
TransitionMatrix transition_matrix(const Graph& g, double lambda);

/// Uncolours vertices one at a time, checking each move is a positive-probability
/// heat-bath move to a valid colouring, until the all-zero colouring is reached.
bool reaches_empty_by_uncolouring(const Graph& g, const Colouring& start);

}  // namespace wr
