#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace ybx {

// Largest tensor dimension (n^k) any chain or multi-site computation may
// allocate: YBX_MAX_DIM if set, otherwise 4096.
std::size_t max_tensor_dim();

// Throws ResourceLimitError when base^exponent exceeds max_tensor_dim().
std::size_t checked_power(std::size_t base, std::size_t exponent,
                          const std::string& what);

// Carriers up to this size are validated exhaustively; larger ones are
// sampled unless exhaustive checking is requested.
inline constexpr std::size_t kExhaustiveCarrierBound = 32;

struct ValidationOptions {
  bool exhaustive = false;
  std::uint64_t seed = 0x5eed;
  std::size_t samples = 20000;
};

}  // namespace ybx
