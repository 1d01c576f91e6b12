#include "gfl/monomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <string>

#include "gfl/errors.hpp"

namespace gfl {

std::uint64_t monomial_count(int n, int d) {
  if (n < 1) throw InvalidArgument("monomial_count: n must be positive");
  if (d < 0) return 0;
  // C(n-1+d, n-1) built as a running product that stays integral at every step.
  const int k = std::min(n - 1, d);
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * static_cast<unsigned>(n - 1 + d - k + i) / static_cast<unsigned>(i);
    if (c > UINT64_MAX) throw LimitExceeded("monomial count overflows 64 bits");
  }
  return static_cast<std::uint64_t>(c);
}

std::size_t monomial_rank(std::span<const int> exponents) {
  const int n = static_cast<int>(exponents.size());
  int d = std::accumulate(exponents.begin(), exponents.end(), 0);
  std::size_t rank = 0;
  // Monomials whose last exponent is below a_k come first: count(k,d) - count(k,d-a_k).
  for (int k = n; k >= 2; --k) {
    const int a = exponents[k - 1];
    rank += monomial_count(k, d) - monomial_count(k, d - a);
    d -= a;
  }
  return rank;
}

Exponents monomial_unrank(std::size_t rank, int n, int d) {
  if (rank >= monomial_count(n, d)) throw InvalidArgument("monomial_unrank: rank out of range");
  Exponents e(n, 0);
  for (int k = n; k >= 2; --k) {
    int a = 0;
    for (;; ++a) {
      const std::uint64_t block = monomial_count(k - 1, d - a);
      if (rank < block) break;
      rank -= block;
    }
    e[k - 1] = a;
    d -= a;
  }
  e[0] = d;
  return e;
}

namespace {

void append_basis(int n, int d, Exponents& prefix_tail, std::vector<Exponents>& out) {
  // prefix_tail holds exponents of variables n+1.. already fixed (stored at the back).
  if (n == 1) {
    Exponents e;
    e.reserve(1 + prefix_tail.size());
    e.push_back(d);
    e.insert(e.end(), prefix_tail.rbegin(), prefix_tail.rend());
    out.push_back(std::move(e));
    return;
  }
  for (int a = 0; a <= d; ++a) {
    prefix_tail.push_back(a);
    append_basis(n - 1, d - a, prefix_tail, out);
    prefix_tail.pop_back();
  }
}

}  // namespace

std::vector<Exponents> monomial_basis(int n, int d) {
  if (n < 1) throw InvalidArgument("monomial_basis: n must be positive");
  std::vector<Exponents> out;
  if (d < 0) return out;
  out.reserve(monomial_count(n, d));
  Exponents tail;
  append_basis(n, d, tail, out);
  return out;
}

MonomialTable::MonomialTable(int n, int d) : n_(n), d_(d), size_(monomial_count(n, d)) {
  exps_.reserve(size_ * n);
  for (const auto& e : monomial_basis(n, d)) exps_.insert(exps_.end(), e.begin(), e.end());
  times_var_.assign(n, std::vector<std::uint32_t>(size_));
  Exponents e(n);
  for (std::size_t r = 0; r < size_; ++r) {
    const auto row = (*this)[r];
    std::copy(row.begin(), row.end(), e.begin());
    for (int i = 0; i < n; ++i) {
      ++e[i];
      times_var_[i][r] = static_cast<std::uint32_t>(monomial_rank(e));
      --e[i];
    }
  }
}

const MonomialTable& monomial_table(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<MonomialTable>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, d}];
  if (!slot) slot = std::make_unique<MonomialTable>(n, d);
  return *slot;
}

}  // namespace gfl
