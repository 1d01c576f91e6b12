#pragma once

#include <cstdint>
#include <random>

#include "gfl/field.hpp"

namespace gfl {

/// Mixes a root seed with a stream index into an independent child seed (splitmix64
/// finalizer). Used wherever trials, primes or generators need their own randomness.
constexpr std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) {
  std::uint64_t z = root + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Deterministic residue source. Uses its own rejection sampling rather than
/// std::uniform_int_distribution so streams are identical across standard libraries.
class ResidueStream {
 public:
  explicit ResidueStream(std::uint64_t seed) : engine_(seed) {}

  Residue next(std::uint32_t p) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % p;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return static_cast<Residue>(x % p);
  }

  Residue next_nonzero(std::uint32_t p) {
    Residue r;
    do {
      r = next(p);
    } while (r == 0);
    return r;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gfl
