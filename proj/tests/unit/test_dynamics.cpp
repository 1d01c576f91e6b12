#include <gtest/gtest.h>

#include <set>

#include "gfl/dynamics.hpp"
#include "gfl/errors.hpp"
#include "gfl/field.hpp"
#include "oracles.hpp"

using namespace gfl;
using namespace gfl::dynamics;

namespace {

FuncPoly from_text(std::string_view s, std::uint32_t p, int n = 1) { return parse_func_poly(s, p, n); }

// f(a) by direct substitution, 0^0 = 1.
std::uint64_t eval_oracle(const FuncPoly& f, const std::vector<int>& a) {
  const std::uint32_t p = f.prime();
  std::uint64_t total = 0;
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (f[idx] == 0) continue;
    const auto e = unflatten(idx, p, f.num_vars());
    std::uint64_t term = f[idx];
    for (int i = 0; i < f.num_vars(); ++i) term = term * oracle::powmod(a[i], e[i], p) % p;
    total = (total + term) % p;
  }
  return total;
}

FuncPoly phi_oracle(const FuncPoly& f) {
  FuncPoly out(f.prime(), f.num_vars());
  for (std::size_t idx = 0; idx < f.size(); ++idx) {
    if (eval_oracle(f, unflatten(idx, f.prime(), f.num_vars())) == 0) out[idx] = 1;
  }
  return out;
}

FuncPoly add(const FuncPoly& a, const FuncPoly& b) {
  FuncPoly out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Residue>((out[i] + b[i]) % a.prime());
  return out;
}

FuncPoly iterate_phi(FuncPoly f, int times) {
  for (int i = 0; i < times; ++i) f = phi(f);
  return f;
}

}  // namespace

TEST(FuncPoly, FlatIndexRoundTrip) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= 3; ++n) {
      std::size_t count = 1;
      for (int i = 0; i < n; ++i) count *= p;
      for (std::size_t idx = 0; idx < count; ++idx) EXPECT_EQ(flat_index(unflatten(idx, p, n), p), idx);
    }
  }
  EXPECT_THROW(FuncPoly(4, 1), InvalidArgument);
}

TEST(FuncPoly, EvaluationMatchesDirectSubstitution) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int n = 1; n <= 2; ++n) {
      const auto f = random_func_poly(p, n, p * 10 + n);
      const auto table = evaluation_table(f);
      for (std::size_t idx = 0; idx < table.size(); ++idx) {
        EXPECT_EQ(table[idx], eval_oracle(f, unflatten(idx, p, n)));
      }
    }
  }
}

TEST(FuncPoly, InterpolationRoundTrip) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (int n = 1; n <= 3; ++n) {
      if (n == 3 && p > 5) continue;
      for (std::uint64_t s = 0; s < 3; ++s) {
        const auto f = random_func_poly(p, n, s);
        EXPECT_EQ(interpolate(p, n, evaluation_table(f)), f);
      }
    }
  }
}

TEST(Phi, Examples) {
  for (std::uint32_t p : {3u, 5u, 7u, 71u}) {
    const auto all = sum_of_all_monomials(p, 1);
    EXPECT_EQ(phi(FuncPoly(p, 1)), all);
    EXPECT_TRUE(phi(from_text("1", p)).is_zero());
    EXPECT_EQ(phi(all), from_text("x", p));
  }
}

TEST(Phi, AgreesWithOracleAndHasBinaryCoefficients) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int n = 1; n <= 2; ++n) {
      for (std::uint64_t s = 0; s < 5; ++s) {
        const auto f = random_func_poly(p, n, s);
        const auto g = phi(f);
        EXPECT_EQ(g, phi_oracle(f));
        for (auto c : g.coefficients()) EXPECT_LE(c, 1u);
        EXPECT_LE(g.term_count(), g.size());
      }
    }
  }
}

TEST(Phi, TwoCycleAtSeventyOne) {
  const auto start = from_text("1 + x^63", 71);
  const auto mid = phi(start);
  EXPECT_EQ(to_string(mid), "x^23 + x^26 + x^34 + x^39 + x^41 + x^51 + x^70");
  EXPECT_EQ(phi(mid), start);
  const auto period = find_period_phi(start, 100);
  EXPECT_EQ(period.tail, 0u);
  EXPECT_EQ(period.cycle, 2u);
  const auto cycle = phi_cycle(start, period);
  ASSERT_EQ(cycle.size(), 2u);
  EXPECT_EQ(cycle[1], mid);
}

TEST(Phi, FourCycleThroughZeroForSmallPrimes) {
  for (std::uint32_t p = 2; p <= 50; ++p) {
    if (!is_prime(p)) continue;
    const FuncPoly zero(p, 1);
    const auto period = find_period_phi(zero, 100);
    EXPECT_EQ(period.tail, 0u) << p;
    EXPECT_EQ(period.cycle, 4u) << p;
    const auto cycle = phi_cycle(zero, period);
    EXPECT_EQ(cycle[1], sum_of_all_monomials(p, 1));
    EXPECT_EQ(cycle[2], from_text("x", p));
    EXPECT_EQ(cycle[3], from_text("1", p));
  }
}

TEST(Phi, PeriodDetectionMatchesDirectIteration) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto f = random_func_poly(7, 1, s);
    const auto period = find_period_phi(f, 10000);
    const auto entry = iterate_phi(f, static_cast<int>(period.tail));
    EXPECT_EQ(iterate_phi(entry, static_cast<int>(period.cycle)), entry);
    for (std::uint64_t c = 1; c < period.cycle; ++c) EXPECT_NE(iterate_phi(entry, static_cast<int>(c)), entry);
    if (period.tail > 0) {
      const auto before = iterate_phi(f, static_cast<int>(period.tail - 1));
      EXPECT_NE(iterate_phi(before, static_cast<int>(period.cycle)), before);
    }
  }
  EXPECT_THROW(find_period_phi(FuncPoly(3, 1), 2), LimitExceeded);
}

TEST(Phi, SurveyAtFiveEndsInTheZeroCycle) {
  const auto survey = survey_orbits(5, 1, 10000, 1, false);
  EXPECT_EQ(survey.samples, 10000u);
  EXPECT_EQ(survey.through_zero, 10000u);
  EXPECT_EQ(survey.odd_cycles, 0u);
  ASSERT_EQ(survey.cycle_histogram.size(), 1u);
  EXPECT_EQ(survey.cycle_histogram[0].first, 4u);
  const auto all = survey_orbits(3, 1, 0, 0, true);
  EXPECT_EQ(all.samples, 27u);
  EXPECT_EQ(all.through_zero, 27u);
  EXPECT_THROW(survey_orbits(11, 1, 0, 0, true), LimitExceeded);
}

TEST(Psi, Examples) {
  EXPECT_TRUE(psi(FuncPoly(5, 2)).is_zero());
  for (int n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto f = random_func_poly(2, n, s);
      EXPECT_EQ(phi(f), add(psi(f), sum_of_all_monomials(2, n)));
    }
  }
  for (std::size_t code = 0; code < 27; ++code) {
    FuncPoly f(3, 1, {static_cast<Residue>(code % 3), static_cast<Residue>(code / 3 % 3),
                      static_cast<Residue>(code / 9)});
    FuncPoly g = f;
    for (int i = 0; i < 8; ++i) g = psi(g);
    EXPECT_EQ(g, f);
  }
}

TEST(Psi, LinearAndBijective) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const PrimeField F(p);
    for (std::uint64_t s = 0; s < 1000; ++s) {
      const auto f = random_func_poly(p, 1, 2 * s), g = random_func_poly(p, 1, 2 * s + 1);
      const Residue c = static_cast<Residue>(s % p);
      FuncPoly cf = f;
      for (std::size_t i = 0; i < cf.size(); ++i) cf[i] = F.mul(c, f[i]);
      FuncPoly pcf = psi(f);
      for (std::size_t i = 0; i < pcf.size(); ++i) pcf[i] = F.mul(c, pcf[i]);
      ASSERT_EQ(psi(add(f, g)), add(psi(f), psi(g)));
      ASSERT_EQ(psi(cf), pcf);
    }
    // Matrix of psi on the monomial basis has full rank.
    std::vector<std::vector<std::uint64_t>> m;
    for (std::uint32_t a = 0; a < p; ++a) {
      FuncPoly basis(p, 1);
      basis[a] = 1;
      const auto img = psi(basis);
      m.emplace_back(img.coefficients().begin(), img.coefficients().end());
    }
    EXPECT_EQ(oracle::rank(m, p), p);
  }
}

TEST(Psi, Orders) {
  EXPECT_EQ(psi_order(3), 8u);
  EXPECT_EQ(psi_order(5), 124u);
  EXPECT_EQ(psi_order(7), 1368u);
  EXPECT_THROW(psi_order(7, 1, 100), LimitExceeded);
}

TEST(Psi, OrderAnnihilatesEveryPolynomial) {
  for (std::uint32_t p : {3u, 5u}) {
    const auto order = psi_order(p);
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto f = random_func_poly(p, 1, s);
      FuncPoly g = f;
      for (std::uint64_t i = 0; i < order; ++i) g = psi(g);
      EXPECT_EQ(g, f);
    }
  }
}

TEST(Phi2, MultilinearOverTwo) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = phi2_multilinear_check(n);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_EQ(r.checked, std::uint64_t{1} << (1u << n));
    EXPECT_TRUE(r.holds()) << n;
  }
  const auto sampled = phi2_multilinear_check(6, 200, 3);
  EXPECT_FALSE(sampled.exhaustive);
  EXPECT_TRUE(sampled.holds());
  EXPECT_EQ(iterate_phi(FuncPoly(2, 3), 4), FuncPoly(2, 3));
}

TEST(Text, ParseAndPrint) {
  EXPECT_EQ(to_string(FuncPoly(5, 1)), "0");
  EXPECT_EQ(to_string(from_text("x^63 + 1", 71)), "1 + x^63");
  const auto f = from_text("2*x1^2*x2 + 3", 5, 2);
  EXPECT_EQ(f[flat_index(std::vector<int>{2, 1}, 5)], 2u);
  EXPECT_EQ(f[0], 3u);
  EXPECT_EQ(from_text("x^5", 5), from_text("x", 5));
  EXPECT_EQ(from_text("x^8", 5), from_text("x^4", 5));
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto g = random_func_poly(7, 2, s);
    EXPECT_EQ(parse_func_poly(to_string(g), 7, 2), g);
  }
  EXPECT_THROW(from_text("x^", 5), InvalidArgument);
  EXPECT_THROW(from_text("q", 5), InvalidArgument);
  EXPECT_THROW(from_text("x^99999999999999999999999", 5), InvalidArgument);
}
