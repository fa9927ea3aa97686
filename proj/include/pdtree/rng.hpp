#pragma once

#include <cstdint>
#include <random>

namespace pdtree {

/// (seed, stream_id) names an independent, reproducible random stream. Draw
/// number k of a simulation uses stream_id = k, so results do not depend on
/// which thread produced them.
struct SeededRng {
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;

  std::mt19937_64 engine() const {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream_id),
                      static_cast<std::uint32_t>(stream_id >> 32), 0x70647472u};
    return std::mt19937_64(seq);
  }
};

}  // namespace pdtree
