#pragma once

#include <cstdint>
#include <vector>

#include "wr/graph.hpp"
#include "wr/kernels.hpp"
#include "wr/numerics.hpp"

namespace wr {

inline constexpr int kExactVertexCap = 24;
inline constexpr int kBruteVertexCap = 12;

/// Colour 0 is unoccupied; colours 1 and 2 may not sit on adjacent vertices.
using Colouring = std::vector<std::uint8_t>;

bool is_valid_colouring(const Graph& g, const Colouring& colouring);

struct PartitionOptions {
  /// Worker threads for the subset sum; results do not depend on it.
  int workers = 1;
  kernels::Isa isa = kernels::detect_isa();
};

/// P_G(λ) via the subset identity  sum over S ⊆ V of 2^{c(G[S])} λ^{|S|}.
IntPolynomial wr_partition(const Graph& g, const PartitionOptions& options = {});
/// P_G(λ) by enumerating all 3^n colourings.
IntPolynomial wr_partition_brute(const Graph& g);
/// P_G(λ₁, λ₂) via  sum over S of the product over components K of G[S] of (λ₁^|K| + λ₂^|K|).
BivariatePolynomial wr_partition_bivariate(const Graph& g);
/// Number of homomorphisms to the Widom–Rowlinson target, P_G(1).
Integer hom_count_wr(const Graph& g);

/// count[k][c] = number of k-subsets S with c(G[S]) = c.
using SubsetComponentTable = std::vector<std::vector<std::uint64_t>>;
SubsetComponentTable subset_component_table(const Graph& g, const PartitionOptions& options = {});

}  // namespace wr
