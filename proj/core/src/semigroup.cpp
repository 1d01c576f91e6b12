#include "gfl/semigroup.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gfl/errors.hpp"
#include "gfl/parallel.hpp"

namespace gfl::semigroup {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw LimitExceeded("integer polynomial coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw LimitExceeded("integer polynomial coefficient overflow");
  return r;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

IntPolynomial IntPolynomial::monomial(int degree, std::int64_t c) {
  if (degree < 0) throw InvalidArgument("negative degree");
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_t_pow(int b) {
  if (b < 1) throw InvalidArgument("1 - t^b needs b ≥ 1");
  std::vector<std::int64_t> v(b + 1, 0);
  v[0] = 1;
  v[b] = -1;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::int64_t IntPolynomial::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

int IntPolynomial::lowest_degree() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = checked_add(coeffs_[i], other.coeffs_[i]);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] = checked_add(coeffs_[i], checked_neg(other.coeffs_[i]));
  }
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return IntPolynomial(std::move(out));
}

std::optional<IntPolynomial> IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw InvalidArgument("division by the zero polynomial");
  const std::int64_t lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1) throw InvalidArgument("divisor must have leading coefficient ±1");
  if (is_zero()) return IntPolynomial{};
  if (degree() < divisor.degree()) return std::nullopt;
  std::vector<std::int64_t> rem = coeffs_;
  const int dd = divisor.degree();
  std::vector<std::int64_t> quot(degree() - dd + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    const std::int64_t q = rem[i] * lead;  // lead is ±1
    quot[i - dd] = q;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] = checked_add(rem[i - dd + j], checked_neg(checked_mul(q, divisor.coeffs_[j])));
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t c) { return c != 0; })) return std::nullopt;
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 't';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::int64_t euler_phi(std::int64_t m) {
  if (m < 1) throw InvalidArgument("euler_phi needs m ≥ 1");
  std::int64_t result = m;
  for (std::int64_t q = 2; q * q <= m; ++q) {
    if (m % q != 0) continue;
    while (m % q == 0) m /= q;
    result -= result / q;
  }
  if (m > 1) result -= result / m;
  return result;
}

const IntPolynomial& cyclotomic(int m) {
  if (m < 1) throw InvalidArgument("cyclotomic index must be positive");
  static std::mutex mutex;
  static std::map<int, IntPolynomial> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(m); it != cache.end()) return it->second;
  }
  IntPolynomial poly = IntPolynomial::monomial(m) - IntPolynomial::monomial(0);
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    auto q = poly.divide_exact(cyclotomic(d));
    if (!q) throw InvariantViolation("cyclotomic construction left a remainder");
    poly = std::move(*q);
  }
  std::lock_guard lock(mutex);
  return cache.try_emplace(m, std::move(poly)).first->second;
}

bool NumericalSemigroup::contains(std::int64_t a) const {
  if (a < 0) return false;
  if (a > frobenius_) return true;
  return member_[static_cast<std::size_t>(a)];
}

std::vector<std::int64_t> NumericalSemigroup::minimal_generators() const {
  std::vector<std::int64_t> minimal;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const std::int64_t g = generators_[i];
    // g is redundant iff g - s lies in S for some smaller generator s ≤ g, s ≠ g.
    std::vector<bool> reach(static_cast<std::size_t>(g) + 1, false);
    reach[0] = true;
    for (std::int64_t a = 1; a <= g; ++a) {
      for (std::size_t j = 0; j < generators_.size() && !reach[a]; ++j) {
        if (j != i && generators_[j] <= a && reach[a - generators_[j]]) reach[a] = true;
      }
    }
    if (!reach[g]) minimal.push_back(g);
  }
  return minimal;
}

NumericalSemigroup build(std::span<const std::int64_t> generators) {
  if (generators.empty()) throw InvalidArgument("a numerical semigroup needs at least one generator");
  std::vector<std::int64_t> gens(generators.begin(), generators.end());
  for (auto g : gens) {
    if (g <= 0) throw InvalidArgument("generators must be positive");
    if (g > 1'000'000) throw LimitExceeded("generators above 10^6 are not supported");
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::int64_t g = 0;
  for (auto x : gens) g = std::gcd(g, x);
  if (g != 1) throw InvalidArgument("generators must have gcd 1");

  // Frobenius number is below s_1 * s_k.
  const std::int64_t bound = gens.front() * gens.back() + gens.back();
  std::vector<bool> member(static_cast<std::size_t>(bound) + 1, false);
  member[0] = true;
  for (std::int64_t a = 1; a <= bound; ++a) {
    for (auto s : gens) {
      if (s > a) break;
      if (member[a - s]) {
        member[a] = true;
        break;
      }
    }
  }
  NumericalSemigroup out;
  out.generators_ = gens;
  for (std::int64_t a = bound; a >= 0; --a) {
    if (!member[a]) {
      out.frobenius_ = a;
      break;
    }
  }
  for (std::int64_t a = 0; a <= out.frobenius_; ++a) {
    if (!member[a]) out.gaps_.push_back(a);
  }
  member.resize(static_cast<std::size_t>(std::max<std::int64_t>(out.frobenius_ + gens.back(), 0)) + 1);
  out.member_ = std::move(member);
  return out;
}

IntPolynomial hilbert_numerator(const NumericalSemigroup& s) {
  IntPolynomial denom({1});
  for (auto g : s.generators()) denom = denom * IntPolynomial::one_minus_t_pow(static_cast<int>(g));
  auto head = denom.divide_exact(IntPolynomial::one_minus_t_pow(1));
  if (!head) throw InvariantViolation("product of (1 - t^s) not divisible by 1 - t");
  IntPolynomial p = *head;
  for (auto gap : s.gaps()) p -= IntPolynomial::monomial(static_cast<int>(gap)) * denom;
  // The numerator has degree at most frobenius + sum of generators.
  std::int64_t bound = s.frobenius();
  for (auto g : s.generators()) bound += g;
  if (p.degree() > bound) throw InvariantViolation("Hilbert numerator exceeds its degree bound");
  return p;
}

std::vector<std::int64_t> series_from_numerator(const IntPolynomial& p, std::span<const std::int64_t> generators,
                                                int cap) {
  std::vector<std::int64_t> series(cap + 1, 0);
  for (int i = 0; i <= cap; ++i) series[i] = p[i];
  // Dividing by 1 - t^g is the running sum with stride g.
  for (auto g : generators) {
    for (int i = static_cast<int>(g); i <= cap; ++i) series[i] = checked_add(series[i], series[i - g]);
  }
  return series;
}

int zero_order_at_one(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("zero polynomial has no finite root order");
  int order = 0;
  IntPolynomial q = p;
  const IntPolynomial linear = IntPolynomial::one_minus_t_pow(1);
  while (auto next = q.divide_exact(linear)) {
    q = std::move(*next);
    ++order;
  }
  return order;
}

CyclotomicCertificate is_cyclotomic(const IntPolynomial& p) {
  if (p.is_zero()) throw InvalidArgument("is_cyclotomic needs a nonzero polynomial");
  CyclotomicCertificate cert{false, {}, p.lowest_degree(), {}};
  std::vector<std::int64_t> shifted(p.coefficients().begin() + cert.shift, p.coefficients().end());
  IntPolynomial q(std::move(shifted));
  const int deg = q.degree();
  // phi(m) ≥ sqrt(m / 2), so only m ≤ 2 deg^2 can contribute.
  const std::int64_t limit = 2 * static_cast<std::int64_t>(deg) * deg;
  for (std::int64_t m = 1; m <= limit && q.degree() > 0; ++m) {
    if (euler_phi(m) > q.degree()) continue;
    const auto& phi_m = cyclotomic(static_cast<int>(m));
    while (q.degree() >= phi_m.degree()) {
      auto next = q.divide_exact(phi_m);
      if (!next) break;
      q = std::move(*next);
      cert.factors.push_back(static_cast<int>(m));
    }
  }
  cert.cyclotomic = q.degree() == 0 && (q[0] == 1 || q[0] == -1);
  cert.residue = std::move(q);
  return cert;
}

std::optional<std::vector<int>> ci_numerator_test(const IntPolynomial& p, int k) {
  if (k < 1) throw InvalidArgument("generator count must be positive");
  if (p.is_zero() || p[0] != 1) return std::nullopt;
  // prod (1 - t^b) factors uniquely, and its lowest non-constant term is -c t^{min b}, so
  // peeling off the lowest exponent is forced at every step.
  std::vector<int> degrees;
  IntPolynomial q = p;
  while (q.degree() > 0) {
    if (static_cast<int>(degrees.size()) >= k - 1) return std::nullopt;
    int b = 1;
    while (q[b] == 0) ++b;
    if (q[b] > 0) return std::nullopt;
    auto next = q.divide_exact(IntPolynomial::one_minus_t_pow(b));
    if (!next) return std::nullopt;
    q = std::move(*next);
    degrees.push_back(b);
  }
  if (q[0] != 1 || static_cast<int>(degrees.size()) != k - 1) return std::nullopt;
  return degrees;
}

ConjectureReport conjecture_check(std::span<const std::int64_t> generators) {
  const auto s = build(generators);
  ConjectureReport report{s.generators(), hilbert_numerator(s), {}, {}};
  report.cyclotomic = is_cyclotomic(report.numerator);
  report.ci_degrees = ci_numerator_test(report.numerator, static_cast<int>(s.generators().size()));
  if (report.ci_degrees && !report.cyclotomic.cyclotomic) {
    throw InvariantViolation("numerator " + report.numerator.to_string() + " has CI shape but is not cyclotomic");
  }
  return report;
}

SweepReport sweep(int max_generator, int max_count) {
  if (max_generator < 1 || max_count < 1) throw InvalidArgument("sweep bounds must be positive");
  if (max_generator > 30) throw LimitExceeded("sweep supports generators up to 30");
  std::vector<std::vector<std::int64_t>> candidates;
  const std::uint32_t full = std::uint32_t{1} << max_generator;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    const int count = std::popcount(mask);
    if (count > max_count) continue;
    std::vector<std::int64_t> gens;
    std::int64_t g = 0;
    for (int b = 0; b < max_generator; ++b) {
      if (mask >> b & 1) {
        gens.push_back(b + 1);
        g = std::gcd(g, std::int64_t{b + 1});
      }
    }
    if (g != 1) continue;
    if (gens.size() > 1 && gens.front() == 1) continue;
    candidates.push_back(std::move(gens));
  }
  const auto minimal = parallel_map(candidates.size(), [&](std::size_t i) {
    return build(candidates[i]).minimal_generators().size() == candidates[i].size();
  });
  std::vector<std::vector<std::int64_t>> sets;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (minimal[i]) sets.push_back(candidates[i]);
  }
  const auto reports = parallel_map(sets.size(), [&](std::size_t i) { return conjecture_check(sets[i]); });
  SweepReport out{max_generator, max_count, sets.size(), 0, 0, {}};
  for (const auto& r : reports) {
    if (r.cyclotomic.cyclotomic) ++out.cyclotomic;
    if (r.ci_degrees) ++out.complete_intersections;
    if (!r.agree()) out.disagreements.push_back(r);
  }
  return out;
}

}  // namespace gfl::semigroup
