#include "gfl/series.hpp"

#include "gfl/errors.hpp"

namespace gfl {

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt c = 1;
  for (long long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw InvalidArgument("ceil_div: divisor must be positive");
  BigInt q = a / b;
  if (q * b < a) ++q;
  return q;
}

IntSeries::IntSeries(int cap) : coeffs_(cap < 0 ? 0 : cap + 1, 0) {
  if (cap < 0) throw InvalidArgument("IntSeries: negative cap");
}

IntSeries::IntSeries(int cap, std::vector<BigInt> coefficients) : IntSeries(cap) {
  for (std::size_t i = 0; i < coefficients.size() && i < coeffs_.size(); ++i) coeffs_[i] = std::move(coefficients[i]);
}

std::vector<std::string> IntSeries::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

IntSeries& IntSeries::operator+=(const IntSeries& other) {
  const int n = std::min(cap(), other.cap());
  for (int i = 0; i <= n; ++i) coeffs_[i] += other.coeffs_[i];
  coeffs_.resize(n + 1);
  return *this;
}

IntSeries operator*(const IntSeries& a, const IntSeries& b) {
  const int cap = std::min(a.cap(), b.cap());
  IntSeries out(cap);
  for (int i = 0; i <= cap; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= cap; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

IntSeries IntSeries::divided_by_one_minus_t(int n) const {
  if (n < 0) throw InvalidArgument("divided_by_one_minus_t: negative exponent");
  IntSeries out = *this;
  // Each factor 1/(1-t) is a running prefix sum.
  for (int k = 0; k < n; ++k) {
    for (int i = 1; i <= cap(); ++i) out.coeffs_[i] += out.coeffs_[i - 1];
  }
  return out;
}

IntSeries IntSeries::times_one_minus_t_pow(int d) const {
  if (d < 0) throw InvalidArgument("times_one_minus_t_pow: negative degree");
  IntSeries out = *this;
  for (int i = cap(); i >= d; --i) out.coeffs_[i] -= coeffs_[i - d];
  return out;
}

IntSeries series_from_product(int n, std::span<const int> degrees, int cap) {
  IntSeries s(cap);
  s[0] = 1;
  for (int d : degrees) {
    if (d <= 0) throw InvalidArgument("series_from_product: degrees must be positive");
    s = s.times_one_minus_t_pow(d);
  }
  return s.divided_by_one_minus_t(n);
}

IntSeries truncate_plus(const IntSeries& s) {
  IntSeries out = s;
  bool cut = false;
  for (int i = 0; i <= s.cap(); ++i) {
    if (!cut && s[i] <= 0) cut = true;
    if (cut) out[i] = 0;
  }
  return out;
}

}  // namespace gfl
