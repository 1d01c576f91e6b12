#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gfl/field.hpp"

namespace gfl::dynamics {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 24;
inline constexpr std::uint64_t kPsiOrderBound = 10'000'000;

/// A function F_p^n -> F_p written as a polynomial whose exponents all lie in [0, p-1].
/// The coefficient of x^a sits at flat index a_1 + a_2 p + ... + a_n p^{n-1}.
class FuncPoly {
 public:
  FuncPoly(std::uint32_t p, int n);
  FuncPoly(std::uint32_t p, int n, std::vector<Residue> coefficients);

  std::uint32_t prime() const { return p_; }
  int num_vars() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const Residue> coefficients() const { return coeffs_; }
  Residue operator[](std::size_t index) const { return coeffs_[index]; }
  Residue& operator[](std::size_t index) { return coeffs_[index]; }
  bool is_zero() const;
  std::size_t term_count() const;

  friend bool operator==(const FuncPoly&, const FuncPoly&) = default;

 private:
  std::uint32_t p_;
  int n_;
  std::vector<Residue> coeffs_;
};

/// Flat index of an exponent tuple and back.
std::size_t flat_index(std::span<const int> exponents, std::uint32_t p);
std::vector<int> unflatten(std::size_t index, std::uint32_t p, int n);

/// f(a) for every a in F_p^n, with a at the same flat position as the exponent tuple a.
std::vector<Residue> evaluation_table(const FuncPoly& f);
/// The unique reduced polynomial with the given evaluation table.
FuncPoly interpolate(std::uint32_t p, int n, std::span<const Residue> table);

/// Sum of x^a over the zeros a of f.
FuncPoly phi(const FuncPoly& f);
/// Sum of f(a) x^a over all a.
FuncPoly psi(const FuncPoly& f);

FuncPoly sum_of_all_monomials(std::uint32_t p, int n);
FuncPoly random_func_poly(std::uint32_t p, int n, std::uint64_t seed);

struct Period {
  std::uint64_t tail;
  std::uint64_t cycle;
};

/// Brent cycle detection on f, phi(f), phi^2(f), ...; throws LimitExceeded once more than
/// step_limit applications of phi would be needed.
Period find_period_phi(const FuncPoly& f, std::uint64_t step_limit);

/// The cycle reached from f, listed from its first element.
std::vector<FuncPoly> phi_cycle(const FuncPoly& f, const Period& period);

/// Smallest i > 0 with psi^i = id on polynomials in n variables over F_p.
std::uint64_t psi_order(std::uint32_t p, int n = 1, std::uint64_t bound = kPsiOrderBound);

struct OrbitSurvey {
  std::uint32_t p;
  int n;
  std::uint64_t seed;
  std::uint64_t samples;
  bool exhaustive;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> cycle_histogram;  // (length, count)
  std::uint64_t through_zero;       // orbits ending in the cycle through 0
  std::uint64_t odd_cycles;         // cycles of odd length (none expected)
  std::uint64_t max_tail;
};

/// Runs find_period_phi from random starting polynomials, or from every polynomial when
/// exhaustive is set (only allowed while p^{p^n} ≤ 2^20).
OrbitSurvey survey_orbits(std::uint32_t p, int n, std::uint64_t samples, std::uint64_t seed, bool exhaustive,
                          std::uint64_t step_limit = 1'000'000);

struct Phi2Report {
  int n;
  std::uint64_t checked;
  bool exhaustive;
  bool bijective;
  bool period_four;     // phi^4(f) = f for every f checked
  bool psi_relation;    // phi(f) = psi(f) + sum of all x^a
  std::vector<std::string> failures;
  bool holds() const { return bijective && period_four && psi_relation; }
};

/// Checks that phi permutes the multilinear polynomials over F_2 with phi^4 = id. Exhaustive
/// for n ≤ 4; otherwise `samples` random polynomials (bijectivity then rests on phi^4 = id).
Phi2Report phi2_multilinear_check(int n, std::uint64_t samples = 10'000, std::uint64_t seed = 0);

/// Sparse text "c*x^e + ..." (n = 1) or "c*x1^e1*x2^e2 + ..." (n > 1); coefficients are
/// reduced mod p and exponents e ≥ p are reduced using x^p = x.
FuncPoly parse_func_poly(std::string_view text, std::uint32_t p, int n);
std::string to_string(const FuncPoly& f);

}  // namespace gfl::dynamics
