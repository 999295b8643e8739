#include "ybx/limits.hpp"

#include <cstdlib>

#include "ybx/error.hpp"

namespace ybx {

std::size_t max_tensor_dim() {
  // Read on every call so tests and the CLI can adjust the cap at runtime.
  if (const char* env = std::getenv("YBX_MAX_DIM")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::size_t checked_power(std::size_t base, std::size_t exponent,
                          const std::string& what) {
  const std::size_t cap = max_tensor_dim();
  std::size_t d = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && d > cap / base)
      throw ResourceLimitError(what + ": dimension " + std::to_string(base) +
                               "^" + std::to_string(exponent) +
                               " exceeds cap " + std::to_string(cap) +
                               " (set YBX_MAX_DIM to raise it)");
    d *= base;
  }
  if (d > cap)
    throw ResourceLimitError(what + ": dimension " + std::to_string(d) +
                             " exceeds cap " + std::to_string(cap));
  return d;
}

}  // namespace ybx
