#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gfl/field.hpp"
#include "gfl/series.hpp"

namespace gfl::exterior {

using Subset = std::uint32_t;  // bit i set when e_{i+1} is present

inline constexpr int kMaxGenerators = 24;

/// Number of d-subsets of {1..n}, C(n, d).
std::size_t subset_count(int n, int d);
/// Position of a subset among those of its size; colex order is numeric order of masks.
std::size_t subset_rank(Subset s);
/// The d-subsets of {1..n}, in colex order.
const std::vector<Subset>& subset_basis(int n, int d);
/// (-1)^{#{(s, t) : s in S, t in T, s > t}}, i.e. e_S * e_T = sign * e_{S ∪ T} for disjoint S, T.
int product_sign(Subset s, Subset t);

/// Homogeneous element of the exterior algebra on n generators over F_p.
class ExtForm {
 public:
  ExtForm(PrimeField field, int n, int degree);
  ExtForm(PrimeField field, int n, int degree, std::vector<Residue> coefficients);
  static ExtForm basis(PrimeField field, int n, Subset s, Residue coeff = 1);

  const PrimeField& field() const { return field_; }
  int num_vars() const { return n_; }
  int degree() const { return degree_; }
  std::span<const Residue> coefficients() const { return coeffs_; }
  Residue coefficient(Subset s) const;
  bool is_zero() const;

  ExtForm& operator+=(const ExtForm& other);
  ExtForm scaled(Residue c) const;
  friend ExtForm operator+(ExtForm a, const ExtForm& b) { return a += b; }
  friend bool operator==(const ExtForm&, const ExtForm&) = default;

 private:
  PrimeField field_;
  int n_;
  int degree_;
  std::vector<Residue> coeffs_;
};

ExtForm ext_mul(const ExtForm& f, const ExtForm& g);
ExtForm random_ext_form(int n, int d, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

/// dim (E/(gens))_i for i = 0..dmax. Degree pieces of the ideal are grown from
/// e_j * I_{i-1} plus the generators; right multiples are added as well whenever some
/// generator has odd degree.
std::vector<std::size_t> ext_quotient_dims(int n, std::span<const ExtForm> gens, int dmax);
std::vector<std::size_t> ext_quotient_dims(std::span<const ExtForm> gens, int dmax);
/// Same, but built from left multiples only (used to confirm the two-sided spans agree).
std::vector<std::size_t> ext_quotient_dims_left(std::span<const ExtForm> gens, int dmax);

/// [(1+t)^n (1-t^d)]_+ up to t^cap.
IntSeries expected_ext_series(int n, int d, int cap);

/// dim Ann(f)_i, the kernel of multiplication by f from E_i, for i = 0..imax.
std::vector<std::size_t> annihilator_dims(const ExtForm& f, int imax);
/// dim (f)_i for i = 0..imax.
std::vector<std::size_t> principal_ideal_dims(const ExtForm& f, int imax);

/// Diagonal lattice paths from (0, 0) to (W, H), W = n+2-2s, H = n+2, with steps
/// (x±1, y+1) and 0 ≤ x ≤ W. Zero when W ≤ 0.
BigInt lattice_path_count(int n, int s);
/// The same count as the (0, W) entry of the H-th power of the path-graph adjacency matrix.
BigInt lattice_path_count_transfer(int n, int s);

struct TwoQuadricsRow {
  int degree;
  std::size_t exterior;
  std::uint64_t symmetric;
  BigInt paths;
  bool agree() const { return exterior == symmetric && BigInt(exterior) == paths; }
};

struct TwoQuadricsReport {
  int n;
  std::uint64_t seed;
  std::uint32_t prime;
  std::vector<TwoQuadricsRow> rows;
  bool all_agree() const;
};

/// E/(f, g) for random even quadrics, S/(x_1^2, ..., x_n^2, l_1^2, l_2^2) for random linear
/// l_i, and the lattice-path counts, compared degree by degree up to n.
TwoQuadricsReport two_quadrics_check(int n, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

}  // namespace gfl::exterior
