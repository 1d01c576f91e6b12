#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gfl/echelon.hpp"
#include "gfl/form.hpp"
#include "gfl/series.hpp"

namespace gfl::hilbert {

// Generator recipes. Random ingredients are drawn from the spec's seed and prime.
struct ExplicitGenerators {
  std::vector<Form> gens;
};
struct GenericForms {
  std::vector<int> degrees;
};
struct PowerIdeal {  // l_1^d, ..., l_r^d for random linear l_i
  int r;
  int d;
};
struct MuPowerIdeal {  // r products l_{i,1}^{mu_1} ... l_{i,k}^{mu_k}
  int r;
  std::vector<int> mu;
};
struct PowersOfForms {  // g_1^k, ..., g_r^k for random g_i of degree d
  int r;
  int d;
  int k;
};
struct StanleyWitness {  // x_1^{d_1}, ..., x_n^{d_n}, (x_1 + ... + x_n)^{d_{n+1}}
  std::vector<int> degrees;
};
struct GottliebWitness {  // x_1^{d_1}, ..., x_n^{d_n}, h_{d_{n+1}}
  std::vector<int> degrees;
};
struct MonomialCompleteIntersection {  // x_1^{d_1}, ..., x_n^{d_n}
  std::vector<int> degrees;
};
struct PowerOfMonomialCI {  // (x_1^d, ..., x_n^d)^k, the ideal of T_{n,d,k}
  int d;
  int k;
};

using Recipe = std::variant<ExplicitGenerators, GenericForms, PowerIdeal, MuPowerIdeal, PowersOfForms,
                            StanleyWitness, GottliebWitness, MonomialCompleteIntersection, PowerOfMonomialCI>;

struct IdealSpec {
  int n;
  Recipe recipe;
  std::uint64_t seed = 0;
  std::uint32_t prime = kDefaultPrime;
};

std::string recipe_name(const Recipe& recipe);

/// Checks that mu is a partition (non-empty, positive, weakly decreasing).
void validate_partition(std::span<const int> mu);

/// Degrees of the generators a spec expands to, without drawing them.
std::vector<int> generator_degrees(const IdealSpec& spec);

std::vector<Form> expand_spec(const IdealSpec& spec);

/// Degree pieces I_0..I_dmax of the ideal generated by a list of forms. I_d is the
/// span of x_i * I_{d-1} together with the degree-d generators.
class GradedSpan {
 public:
  GradedSpan(PrimeField field, int n, int dmax, std::span<const Form> gens);

  int num_vars() const { return n_; }
  int dmax() const { return static_cast<int>(pieces_.size()) - 1; }
  const PrimeField& field() const { return field_; }
  const EchelonBasis& piece(int d) const { return pieces_.at(d); }
  std::size_t dim(int d) const { return pieces_.at(d).rank(); }
  std::vector<std::size_t> dims() const;

 private:
  PrimeField field_;
  int n_;
  std::vector<EchelonBasis> pieces_;
};

GradedSpan graded_span(std::span<const Form> gens, int dmax);
GradedSpan graded_span(PrimeField field, int n, std::span<const Form> gens, int dmax);

std::vector<std::uint64_t> hilbert_function(const GradedSpan& span);
std::vector<std::uint64_t> hilbert_function(const IdealSpec& spec, int dmax);

/// [prod(1 - t^{d_i}) / (1-t)^n]_+ up to t^cap.
IntSeries froberg_series(int n, std::span<const int> degrees, int cap);

/// Degree at which the Froberg series first vanishes, plus two; falls back to
/// max(12, sum of degrees) when it never vanishes (fewer generators than variables).
int default_dmax(int n, std::span<const int> degrees);

/// Throws InvariantViolation if the observed Hilbert function is lexicographically
/// smaller than the Froberg series. Every call is counted (see lex_checks_performed).
void check_lex_minimality(int n, std::span<const int> degrees, std::span<const std::uint64_t> observed);
std::uint64_t lex_checks_performed();

struct HilbertRun {
  std::uint32_t prime;
  std::uint64_t seed;
  std::vector<std::uint64_t> actual;
  std::vector<int> deviating_degrees;
};

struct FrobergComparison {
  int n;
  std::string recipe;
  std::vector<int> degrees;
  int dmax;
  std::vector<std::uint64_t> conjectured;
  std::vector<HilbertRun> runs;
  std::vector<int> deviating_degrees;  // union over runs, ascending
  bool match() const { return deviating_degrees.empty(); }
};

/// Hilbert function of `trials` independent draws of the spec over each prime, compared
/// degree by degree with the Froberg series. Trial t uses seed derive_seed(spec.seed, t).
FrobergComparison compare_to_froberg(const IdealSpec& spec, int dmax, int trials,
                                     std::span<const std::uint32_t> primes);

}  // namespace gfl::hilbert
