#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace gfl::semigroup {

/// Polynomial with int64 coefficients; every operation checks for overflow and throws
/// LimitExceeded rather than wrapping.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);
  static IntPolynomial monomial(int degree, std::int64_t c = 1);
  // 1 - t^b
  static IntPolynomial one_minus_t_pow(int b);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t operator[](int i) const { return i >= 0 && i <= degree() ? coeffs_[i] : 0; }
  std::span<const std::int64_t> coefficients() const { return coeffs_; }
  std::int64_t at_one() const;
  int lowest_degree() const;  // -1 for zero

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  // Exact division by a divisor whose leading coefficient is ±1; nullopt when it leaves a remainder.
  std::optional<IntPolynomial> divide_exact(const IntPolynomial& divisor) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// The m-th cyclotomic polynomial, built as (t^m - 1) / prod_{d | m, d < m} Phi_d and cached.
const IntPolynomial& cyclotomic(int m);
std::int64_t euler_phi(std::int64_t m);

class NumericalSemigroup {
 public:
  const std::vector<std::int64_t>& generators() const { return generators_; }
  std::int64_t frobenius() const { return frobenius_; }
  const std::vector<std::int64_t>& gaps() const { return gaps_; }
  bool contains(std::int64_t a) const;
  // The minimal generating set (generators not expressible through the others).
  std::vector<std::int64_t> minimal_generators() const;

 private:
  friend NumericalSemigroup build(std::span<const std::int64_t> generators);
  std::vector<std::int64_t> generators_;
  std::int64_t frobenius_ = -1;
  std::vector<std::int64_t> gaps_;
  std::vector<bool> member_;  // up to frobenius + max generator
};

/// Sorted, de-duplicated generators; rejects empty input, non-positive entries and gcd ≠ 1.
NumericalSemigroup build(std::span<const std::int64_t> generators);

/// p(t) with sum_{s in S} t^s = p(t) / prod (1 - t^{s_i}) over the stored generators.
IntPolynomial hilbert_numerator(const NumericalSemigroup& s);
/// Coefficients of p(t) / prod (1 - t^{s_i}) up to t^cap.
std::vector<std::int64_t> series_from_numerator(const IntPolynomial& p, std::span<const std::int64_t> generators,
                                                int cap);
/// Multiplicity of t = 1 as a root.
int zero_order_at_one(const IntPolynomial& p);

struct CyclotomicCertificate {
  bool cyclotomic;
  std::vector<int> factors;  // indices m of the Phi_m divided out, with multiplicity
  int shift;                 // power of t divided out first
  IntPolynomial residue;
};
CyclotomicCertificate is_cyclotomic(const IntPolynomial& p);

/// b_1 ≤ ... ≤ b_{k-1} with prod (1 - t^{b_j}) = p, if any.
std::optional<std::vector<int>> ci_numerator_test(const IntPolynomial& p, int k);

struct ConjectureReport {
  std::vector<std::int64_t> generators;
  IntPolynomial numerator;
  CyclotomicCertificate cyclotomic;
  std::optional<std::vector<int>> ci_degrees;  // "numerator-shape CI"
  bool agree() const { return cyclotomic.cyclotomic == ci_degrees.has_value(); }
};

/// Throws InvariantViolation if the numerator has CI shape but is not cyclotomic.
ConjectureReport conjecture_check(std::span<const std::int64_t> generators);

struct SweepReport {
  int max_generator;
  int max_count;
  std::uint64_t semigroups;
  std::uint64_t cyclotomic;
  std::uint64_t complete_intersections;
  std::vector<ConjectureReport> disagreements;
};

/// Every minimal generating set {s_1 < ... < s_k} with s_k ≤ max_generator, k ≤ max_count
/// and gcd 1 (the semigroup <1> included).
SweepReport sweep(int max_generator, int max_count);

}  // namespace gfl::semigroup
