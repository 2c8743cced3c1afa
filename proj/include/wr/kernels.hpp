#pragma once

// Inner loop of the subset-sum partition computation: the number of connected
// components of G[S] for a run of consecutive subset masks S. A scalar
// reference and an AVX2 variant (8 subsets per register) are provided; the
// variant is chosen once at runtime from CPU features.

#include <cstdint>
#include <span>
#include <string_view>

namespace wr::kernels {

inline constexpr int kMaxKernelVertices = 32;

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// out[i] = number of components of G[first + i], where bit v of a subset
/// mask selects vertex v. `adjacency[v]` is the neighbourhood mask of v.
using ComponentCountFn = void (*)(std::span<const std::uint32_t> adjacency, std::uint32_t first,
                                  std::span<std::uint8_t> out);

void component_counts_scalar(std::span<const std::uint32_t> adjacency, std::uint32_t first,
                             std::span<std::uint8_t> out);
#if defined(WR_HAVE_AVX2_KERNEL)
void component_counts_avx2(std::span<const std::uint32_t> adjacency, std::uint32_t first,
                           std::span<std::uint8_t> out);
#endif

/// Best ISA the running CPU and this build both support.
Isa detect_isa();
bool isa_available(Isa isa);
/// Throws UsageError for an ISA that is not available.
ComponentCountFn component_counter(Isa isa);
/// Dispatches to the detected ISA. Honours WR_FORCE_SCALAR=1 in the environment.
ComponentCountFn component_counter();

/// Single-mask reference used by the scalar kernel.
inline int component_count_mask(std::span<const std::uint32_t> adjacency, std::uint32_t subset) {
  int components = 0;
  std::uint32_t remaining = subset;
  while (remaining) {
    ++components;
    std::uint32_t frontier = remaining & (~remaining + 1);
    std::uint32_t component = frontier;
    while (frontier) {
      const int v = __builtin_ctz(frontier);
      frontier &= frontier - 1;
      const std::uint32_t fresh = adjacency[v] & remaining & ~component;
      component |= fresh;
      frontier |= fresh;
    }
    remaining &= ~component;
  }
  return components;
}

}  // namespace wr::kernels
