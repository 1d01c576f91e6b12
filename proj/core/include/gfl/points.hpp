#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gfl/echelon.hpp"
#include "gfl/form.hpp"
#include "gfl/series.hpp"

namespace gfl::points {

/// Points in P^{n-1} (one factor of n coordinates) or in a product of projective spaces.
/// Coordinates are stored concatenated across factors; each factor is normalized so its
/// first nonzero coordinate is 1.
struct PointConfig {
  PrimeField field;
  std::vector<int> factor_dims;  // coordinates per factor
  std::vector<std::vector<Residue>> points;

  int num_vars() const;
  bool is_projective() const { return factor_dims.size() == 1; }
  std::size_t size() const { return points.size(); }
};

/// Validates (no zero factor, projectively distinct) and normalizes.
PointConfig make_config(PrimeField field, std::vector<int> factor_dims, std::vector<std::vector<Residue>> points);
PointConfig random_points(std::vector<int> factor_dims, int s, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

/// One point per line, integer coordinates separated by spaces or commas, factors
/// separated by '|'. Blank lines and lines starting with '#' are skipped.
PointConfig parse_points(std::string_view text, PrimeField field);

/// Exponent vectors spanning the (multi)degree piece S_I, in the order used for rows.
std::vector<Exponents> multidegree_basis(std::span<const int> factor_dims, std::span<const int> multidegree);

/// Functionals f ↦ (∂^β f)(P) for every point P and |β| < m, as rows over the basis.
std::vector<Row> vanishing_conditions(const PointConfig& cfg, int m, std::span<const Exponents> basis);

/// dim (I_X^{(m)})_d for d = 0..dmax (projective configurations).
std::vector<std::size_t> symbolic_power_dims(const PointConfig& cfg, int m, int dmax);

/// min{ C(n-1+d, n-1), s*C(n+m-2, n-1) }.
BigInt expected_fat_hf(int n, int s, int m, int d);

struct ApolarityCheck {
  int m;
  int d;
  int power_exponent;  // d - m + 1, clamped to 0
  std::size_t vanishing_side;
  std::size_t power_ideal_side;
};

/// HF_{S/I^{(m)}}(d) from vanishing conditions and from the degree-d piece of the ideal
/// generated by L_i^{d-m+1} (L_i carrying the coordinates of P_i). A non-positive
/// exponent means the whole of S_d. Throws InvariantViolation on disagreement.
ApolarityCheck apolarity_check(const PointConfig& cfg, int m, int d);

/// dim (I^m)_d for d = 0..dmax, I = I_X. Throws LimitExceeded above kMaxGeneratorDegree.
inline constexpr int kMaxGeneratorDegree = 64;
std::vector<std::size_t> ordinary_power_dims(const PointConfig& cfg, int m, int dmax);

/// Minimal generators of I_X of degree ≤ dmax.
std::vector<Form> point_ideal_generators(const PointConfig& cfg, int dmax);

struct DefectReport {
  std::vector<std::size_t> per_degree;  // new generators of I^{(m)} / I^m in each degree
  std::size_t total;
  bool stabilized;  // the last two degrees contribute nothing
};
DefectReport symbolic_defect(const PointConfig& cfg, int m, int dmax);

struct ContainmentReport {
  std::vector<bool> contained;  // (I^{(m)})_d ⊆ (I^r)_d for d = 0..dmax
  std::optional<int> first_failure;
};
ContainmentReport containment_check(const PointConfig& cfg, int m, int r, int dmax);

struct MultigradedValue {
  std::size_t space_dim;  // dim S_I
  std::size_t ideal_dim;  // dim (I_X^{(m)})_I
  std::size_t hf;         // dim (S / I_X^{(m)})_I
};
MultigradedValue multigraded_hf(const PointConfig& cfg, int m, std::span<const int> multidegree);

}  // namespace gfl::points
