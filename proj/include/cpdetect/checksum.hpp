#pragma once

#include <cstddef>
#include <cstdint>

namespace cpd {

inline constexpr std::uint64_t kFnv1a64Basis = 0xcbf29ce484222325ULL;

// Incremental FNV-1a over raw bytes; feed chunks, pass the running state back in.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t state = kFnv1a64Basis) {
  const auto* bytes = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    state ^= bytes[i];
    state *= 0x100000001b3ULL;
  }
  return state;
}

}  // namespace cpd
