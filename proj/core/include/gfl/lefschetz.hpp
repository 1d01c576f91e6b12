#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gfl/hilbert.hpp"

namespace gfl::lefschetz {

struct MapRank {
  std::size_t rank;
  std::size_t dim_source;
  std::size_t dim_target;
  bool maximal() const { return rank == std::min(dim_source, dim_target); }
};

/// Rank of multiplication by `multiplier` from A_i to A_{i+e}, A = S/I, e = deg multiplier.
/// The span must reach degree i+e.
MapRank multiplication_rank(const hilbert::GradedSpan& span, const Form& multiplier, int i);
MapRank multiplication_rank(const hilbert::IdealSpec& spec, const Form& multiplier, int i, int dmax_span);

struct PrimeOutcome {
  std::uint32_t prime;
  std::size_t best_rank;  // over trials
  bool maximal;
};

struct MapRecord {
  int source_degree;
  int target_degree;
  int power;  // k for l^k; the partition size for mu maps
  std::size_t dim_source;
  std::size_t dim_target;
  std::size_t best_rank;  // over all primes and trials
  bool maximal;           // some prime and trial reached full rank
  std::vector<PrimeOutcome> per_prime;
};

struct LefschetzVerdict {
  std::string property;
  std::vector<MapRecord> maps;
  bool holds;  // conjunction of the per-map flags
  std::vector<std::uint32_t> primes;
  std::uint64_t seed;
  int trials;
  int dmax;
};

/// Highest degree with A_d ≠ 0. Throws InvalidArgument if A does not vanish by search_cap
/// (a non-Artinian quotient needs an explicit dmax).
int top_degree(const hilbert::IdealSpec& spec, int search_cap = 200);

/// dmax empty → top_degree(spec). Spec randomness comes from spec.seed; the linear forms
/// for trial t use a separate stream so the ideal is the same in every trial.
LefschetzVerdict wlp_test(const hilbert::IdealSpec& spec, std::optional<int> dmax, int trials,
                          std::span<const std::uint32_t> primes);
LefschetzVerdict slp_test(const hilbert::IdealSpec& spec, std::optional<int> dmax, int kmax, int trials,
                          std::span<const std::uint32_t> primes);
LefschetzVerdict mu_lefschetz_test(const hilbert::IdealSpec& spec, std::span<const int> mu, std::optional<int> dmax,
                                   int trials, std::span<const std::uint32_t> primes);

}  // namespace gfl::lefschetz
