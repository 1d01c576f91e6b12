#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gfl {

using BigInt = boost::multiprecision::cpp_int;

BigInt binomial(long long n, long long k);
BigInt ceil_div(const BigInt& a, const BigInt& b);

/// Power series with exact integer coefficients c_0..c_cap.
class IntSeries {
 public:
  explicit IntSeries(int cap);
  IntSeries(int cap, std::vector<BigInt> coefficients);

  int cap() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& operator[](int i) const { return coeffs_[i]; }
  BigInt& operator[](int i) { return coeffs_[i]; }
  std::span<const BigInt> coefficients() const { return coeffs_; }
  std::vector<std::string> to_strings() const;

  IntSeries& operator+=(const IntSeries& other);
  friend IntSeries operator*(const IntSeries& a, const IntSeries& b);
  friend bool operator==(const IntSeries&, const IntSeries&) = default;

  // Multiplies by (1-t)^{-n}: the binomial series with coefficients C(n+j-1, n-1).
  IntSeries divided_by_one_minus_t(int n) const;
  // Multiplies by (1 - t^d).
  IntSeries times_one_minus_t_pow(int d) const;

 private:
  std::vector<BigInt> coeffs_;
};

/// Coefficients of prod(1 - t^{d_i}) / (1-t)^n up to t^cap.
IntSeries series_from_product(int n, std::span<const int> degrees, int cap);

/// Zeroes every coefficient from the first one that is ≤ 0 onward.
IntSeries truncate_plus(const IntSeries& s);

}  // namespace gfl
