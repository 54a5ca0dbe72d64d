#pragma once

#include <cstdint>
#include <random>

namespace rliff {

using Rng = std::mt19937_64;

// splitmix64 finalizer; decorrelates nearby seeds.
inline std::uint64_t mix_bits(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stream seed derivation: every RNG in a run is seeded as
// derive_seed(master, stream_index). Repetition i of a multi-run
// experiment uses master + i as its master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return mix_bits(master + 0x9e3779b97f4a7c15ULL * (stream + 1));
}

}  // namespace rliff
