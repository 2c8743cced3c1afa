#include <cstdlib>
#include <string>

#include "wr/error.hpp"
#include "wr/kernels.hpp"

namespace wr::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(WR_HAVE_AVX2_KERNEL)
      return __builtin_cpu_supports("avx2") != 0;
#else
      return false;
#endif
  }
  return false;
}

Isa detect_isa() {
  if (const char* force = std::getenv("WR_FORCE_SCALAR"); force && std::string(force) == "1") return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

ComponentCountFn component_counter(Isa isa) {
  if (!isa_available(isa)) throw UsageError("kernel ISA '" + std::string(isa_name(isa)) + "' not available");
  switch (isa) {
    case Isa::scalar:
      return &component_counts_scalar;
    case Isa::avx2:
#if defined(WR_HAVE_AVX2_KERNEL)
      return &component_counts_avx2;
#else
      break;
#endif
  }
  return &component_counts_scalar;
}

ComponentCountFn component_counter() {
  static const ComponentCountFn selected = component_counter(detect_isa());
  return selected;
}

}  // namespace wr::kernels
