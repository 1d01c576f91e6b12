#include "gfl/field.hpp"

#include <string>

#include "gfl/errors.hpp"

namespace gfl {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull}) {
    if (n % q == 0) return n == q;
  }
  for (std::uint64_t q = 11; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Residue PrimeField::pow(Residue base, std::uint64_t e) const {
  Residue result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

Residue PrimeField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Residue>(r);
}

Residue sqrt_minus_one(const PrimeField& field) {
  const std::uint32_t p = field.modulus();
  if (p % 4 != 1) {
    throw InvalidArgument("sqrt(-1) needs p ≡ 1 (mod 4), got p = " + std::to_string(p));
  }
  // g^((p-1)/4) squares to g^((p-1)/2) = -1 for any non-residue g.
  for (Residue g = 2; g < p; ++g) {
    if (field.pow(g, (p - 1) / 2) == p - 1) return field.pow(g, (p - 1) / 4);
  }
  throw InvariantViolation("no quadratic non-residue found");
}

}  // namespace gfl
