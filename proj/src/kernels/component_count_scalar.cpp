#include "wr/kernels.hpp"

namespace wr::kernels {

void component_counts_scalar(std::span<const std::uint32_t> adjacency, std::uint32_t first,
                             std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(component_count_mask(adjacency, first + static_cast<std::uint32_t>(i)));
  }
}

}  // namespace wr::kernels
