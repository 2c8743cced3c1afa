#include <immintrin.h>

#include <array>

#include "wr/kernels.hpp"

namespace wr::kernels {

// Eight subsets per __m256i lane group. Each round peels the lowest remaining
// vertex of every lane and floods its component by sweeping the vertices in
// order, OR-ing in the neighbourhood of every vertex already reached. The
// sweep is Gauss-Seidel style so ordered paths close in a single pass.
void component_counts_avx2(std::span<const std::uint32_t> adjacency, std::uint32_t first,
                           std::span<std::uint8_t> out) {
  const int n = static_cast<int>(adjacency.size());
  std::array<__m256i, kMaxKernelVertices> adj{};
  std::array<__m256i, kMaxKernelVertices> bit{};
  for (int v = 0; v < n; ++v) {
    adj[v] = _mm256_set1_epi32(static_cast<int>(adjacency[v]));
    bit[v] = _mm256_set1_epi32(static_cast<int>(std::uint32_t{1} << v));
  }

  const __m256i zero = _mm256_setzero_si256();
  const __m256i lane_offsets = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

  const std::size_t full = out.size() / 8 * 8;
  for (std::size_t i = 0; i < full; i += 8) {
    __m256i remaining =
        _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(first + static_cast<std::uint32_t>(i))), lane_offsets);
    __m256i count = zero;
    for (;;) {
      const __m256i live = _mm256_xor_si256(_mm256_cmpeq_epi32(remaining, zero), _mm256_set1_epi32(-1));
      if (_mm256_testz_si256(live, live)) break;
      count = _mm256_sub_epi32(count, live);  // live lanes hold -1
      __m256i component = _mm256_and_si256(remaining, _mm256_sub_epi32(zero, remaining));
      for (;;) {
        __m256i grown = component;
        for (int v = 0; v < n; ++v) {
          const __m256i select = _mm256_cmpeq_epi32(_mm256_and_si256(grown, bit[v]), bit[v]);
          grown = _mm256_or_si256(grown, _mm256_and_si256(select, adj[v]));
          grown = _mm256_and_si256(grown, remaining);
        }
        const __m256i diff = _mm256_xor_si256(grown, component);
        component = grown;
        if (_mm256_testz_si256(diff, diff)) break;
      }
      remaining = _mm256_andnot_si256(component, remaining);
    }
    alignas(32) std::array<std::int32_t, 8> lanes{};
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes.data()), count);
    for (int k = 0; k < 8; ++k) out[i + k] = static_cast<std::uint8_t>(lanes[k]);
  }
  for (std::size_t i = full; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(component_count_mask(adjacency, first + static_cast<std::uint32_t>(i)));
  }
}

}  // namespace wr::kernels
