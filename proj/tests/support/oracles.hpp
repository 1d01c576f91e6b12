#pragma once

// Brute-force reference implementations. They share nothing with the library beyond the
// data types, so agreement is meaningful.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;
using Exps = std::vector<int>;

inline Big pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::vector<Big> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<Big> next(i + 1, 1);
    for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  return row[k];
}

// Every exponent tuple of length n summing to d, in no particular order.
inline std::vector<Exps> tuples(int n, int d) {
  std::vector<Exps> out;
  Exps cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Sparse polynomial over F_p keyed by exponent tuple.
struct Poly {
  std::uint64_t p;
  std::map<Exps, std::uint64_t> terms;

  void add(const Exps& e, std::uint64_t c) {
    auto& slot = terms[e];
    slot = (slot + c % p) % p;
    if (slot == 0) terms.erase(e);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out{a.p, {}};
    for (const auto& [ea, ca] : a.terms) {
      for (const auto& [eb, cb] : b.terms) {
        Exps e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add(e, ca * cb % a.p);
      }
    }
    return out;
  }
  friend bool operator==(const Poly&, const Poly&) = default;
};

// Rank over F_p by plain Gauss-Jordan on a dense copy.
inline std::size_t rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    const std::uint64_t inv = invmod(m[r][c], p);
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
    }
    ++r;
  }
  return r;
}

// Coefficients of prod(1 - t^{d_i}) * sum_j C(n+j-1, n-1) t^j up to cap, by direct convolution.
inline std::vector<Big> product_series(int n, const std::vector<int>& degrees, int cap) {
  std::vector<Big> num(1, 1);
  for (int d : degrees) {
    std::vector<Big> next(num.size() + d, 0);
    for (std::size_t i = 0; i < num.size(); ++i) {
      next[i] += num[i];
      next[i + d] -= num[i];
    }
    num = std::move(next);
  }
  std::vector<Big> out(cap + 1, 0);
  for (int j = 0; j <= cap; ++j) {
    for (int i = 0; i <= j && i < static_cast<int>(num.size()); ++i) {
      out[j] += num[i] * (n == 0 ? Big(j - i == 0 ? 1 : 0) : pascal(n + (j - i) - 1, n - 1));
    }
  }
  return out;
}

inline std::vector<Big> truncate(std::vector<Big> s) {
  bool zero = false;
  for (auto& c : s) {
    if (c <= 0) zero = true;
    if (zero) c = 0;
  }
  return s;
}

// Sign of e_{a_1} ... e_{a_k} reordered increasingly, counting adjacent swaps.
inline int bubble_sign(std::vector<int> idx) {
  int swaps = 0;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j + 1 < idx.size() - i; ++j) {
      if (idx[j] > idx[j + 1]) {
        std::swap(idx[j], idx[j + 1]);
        ++swaps;
      }
    }
  }
  return swaps % 2 ? -1 : 1;
}

// Lattice paths by enumerating every up/down sequence.
inline std::uint64_t paths_brute(int width, int height) {
  if (width <= 0) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << height); ++mask) {
    int x = 0;
    bool ok = true;
    for (int step = 0; step < height && ok; ++step) {
      x += (mask >> step & 1) ? 1 : -1;
      ok = x >= 0 && x <= width;
    }
    if (ok && x == width) ++count;
  }
  return count;
}

// Semigroup membership by trying every combination of the generators.
inline bool in_semigroup(std::int64_t a, const std::vector<std::int64_t>& gens, std::size_t from = 0) {
  if (a == 0) return true;
  if (from == gens.size() || a < 0) return false;
  for (std::int64_t c = 0; c * gens[from] <= a; ++c) {
    if (in_semigroup(a - c * gens[from], gens, from + 1)) return true;
  }
  return false;
}

// Integer polynomial product, coefficients low to high.
inline std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace oracle
