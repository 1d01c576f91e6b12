#pragma once

#include <cstdint>

namespace gfl {

using Residue = std::uint32_t;

bool is_prime(std::uint64_t n);

/// Arithmetic in F_p for a prime p < 2^31. Residues are plain integers in [0, p);
/// the field object carries the modulus and is cheap to copy.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Residue pow(Residue base, std::uint64_t e) const;
  // Throws InvalidArgument on zero.
  Residue inv(Residue a) const;
  Residue from_int(std::int64_t v) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// A square root of -1 in F_p; requires p ≡ 1 (mod 4).
Residue sqrt_minus_one(const PrimeField& field);

/// The primes used when the caller does not choose: all ≡ 1 (mod 4) and above 2^20.
inline constexpr std::uint32_t kDefaultPrimes[] = {1000033u, 1048589u, 2097169u};
inline constexpr std::uint32_t kDefaultPrime = kDefaultPrimes[0];

}  // namespace gfl
