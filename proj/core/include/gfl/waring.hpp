#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gfl/form.hpp"
#include "gfl/series.hpp"

namespace gfl::waring {

/// k-th powers of degree-d forms in n variables; the target degree is k*d.
struct RankQuery {
  int k;
  int d;
  int n;
};

/// Exponents of a monomial with zeros removed, sorted ascending.
struct MonomialQuery {
  std::vector<int> exponents;

  static MonomialQuery from_exponents(std::span<const int> exponents);
  int num_vars() const { return static_cast<int>(exponents.size()); }
  int degree() const;
};

/// Generic Waring rank of degree-k forms in n variables (Alexander–Hirschowitz),
/// with the quadric and four sporadic exceptions applied.
BigInt generic_rank(int k, int n);

struct RankBounds {
  BigInt lower;  // parameter count
  BigInt upper;  // k^{n-1}
};
RankBounds k_rank_bounds(const RankQuery& q);

/// Conjectured generic k-rank: least s with s*dim S_d - C(s,2) >= dim S_{2d} for k = 2,
/// least s with s*dim S_d >= dim S_{kd} for k >= 3.
BigInt conjectured_k_rank(const RankQuery& q);

/// Smallest d0 such that the conjectured k-rank equals its large-d limit k^{n-1} for every
/// d in [d0, dmax_search]. Conjecture-conditional.
struct Threshold {
  std::optional<int> d0;  // empty: not reached by dmax_search
  BigInt limit;
};
Threshold d_threshold(int k, int n, int dmax_search);

BigInt monomial_rank(const MonomialQuery& m);
int monomial_2rank(const MonomialQuery& m);

struct MonomialBound {
  BigInt value;
  std::vector<std::string> applied;  // names of the bounds that were applicable
};
MonomialBound monomial_krank_upper(const MonomialQuery& m, int k);

/// (g1, g2) with g1^2 + g2^2 = m1*m2; needs p ≡ 1 (mod 4). The identity is verified
/// before returning.
std::pair<Form, Form> two_square_decomposition(const Form& m1, const Form& m2);

struct PerfectPair {
  int j;
  int quotient;  // (kd+1)/(d+1) = j*d + 1
};
std::optional<PerfectPair> perfect_pair(int k, int d);

struct DataPoint {
  std::string statement;
  int value;
};

struct MaxRankFacts {
  RankQuery query;
  std::optional<BigInt> known_exact;
  std::optional<BigInt> upper_bound;    // unconditional, when one is known (binary k = 2)
  BigInt generic_value;
  bool generic_conjectural = false;     // from the conjectured formula rather than a theorem
  BigInt blekherman_teitler_bound;      // 2 * generic value
  std::optional<BigInt> conjectured_binary_max;
  std::vector<DataPoint> registry;
};
MaxRankFacts max_rank_facts(int k, int d, int n);

/// Dimension of span{ g_i^{k-1} * m : i ≤ s, m a degree-d monomial } in S_{kd} for s
/// random degree-d forms: the tangent space at a general point of the s-th secant.
std::size_t secant_dimension(const RankQuery& q, int s, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

struct ExperimentalRank {
  std::uint64_t rank;                   // least s whose tangent space fills S_{kd}
  std::uint64_t ambient;                // dim S_{kd}
  std::vector<std::size_t> dimensions;  // tangent dimension for s = 1..rank
};
ExperimentalRank experimental_k_rank(const RankQuery& q, std::uint64_t seed, std::uint32_t p = kDefaultPrime);

}  // namespace gfl::waring
