#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace gfl {

using Exponents = std::vector<int>;

/// Number of monomials of degree d in n variables, C(n+d-1, n-1). Throws LimitExceeded
/// when the count does not fit in 64 bits.
std::uint64_t monomial_count(int n, int d);

/// Position of a monomial in the graded-reverse-lexicographic listing of its degree.
/// The listing puts smaller powers of the last variable first, recursively, so that
/// n=3, d=2 reads x^2, xy, y^2, xz, yz, z^2.
std::size_t monomial_rank(std::span<const int> exponents);
Exponents monomial_unrank(std::size_t rank, int n, int d);

/// All degree-d monomials in n variables, in grevlex order.
std::vector<Exponents> monomial_basis(int n, int d);

/// Flat exponent table for one (n, d): row r holds the exponents of monomial r.
/// Tables are cached process-wide and never invalidated.
class MonomialTable {
 public:
  MonomialTable(int n, int d);

  int num_vars() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return size_; }
  std::span<const int> operator[](std::size_t r) const {
    return {exps_.data() + r * static_cast<std::size_t>(n_), static_cast<std::size_t>(n_)};
  }
  // times_var[i][r]: rank in degree d+1 of x_i times monomial r.
  const std::vector<std::uint32_t>& times_variable(int i) const { return times_var_[i]; }

 private:
  int n_;
  int d_;
  std::size_t size_;
  std::vector<int> exps_;
  std::vector<std::vector<std::uint32_t>> times_var_;
};

const MonomialTable& monomial_table(int n, int d);

}  // namespace gfl
