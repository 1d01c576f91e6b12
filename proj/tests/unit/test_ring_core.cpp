#include <gtest/gtest.h>

#include <random>

#include "gfl/echelon.hpp"
#include "gfl/errors.hpp"
#include "gfl/field.hpp"
#include "gfl/form.hpp"
#include "gfl/monomial.hpp"
#include "gfl/parallel.hpp"
#include "gfl/random.hpp"
#include "gfl/series.hpp"
#include "oracles.hpp"

using namespace gfl;

namespace {

const PrimeField F(kDefaultPrime);

oracle::Poly to_poly(const Form& f) {
  oracle::Poly out{f.field().modulus(), {}};
  for (const auto& e : oracle::tuples(f.num_vars(), f.degree())) out.add(e, f.coefficient(e));
  return out;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

std::vector<BigInt> coeffs(const IntSeries& s) { return {s.coefficients().begin(), s.coefficients().end()}; }

}  // namespace

TEST(PrimeField, RejectsCompositeAndLargeModuli) {
  EXPECT_THROW(PrimeField(15), InvalidArgument);
  EXPECT_THROW(PrimeField(1), InvalidArgument);
  EXPECT_THROW(PrimeField(2147483659u), InvalidArgument);
  EXPECT_NO_THROW(PrimeField(2));
}

TEST(PrimeField, DefaultPrimesAreOneModFour) {
  for (auto p : kDefaultPrimes) {
    EXPECT_TRUE(is_prime(p));
    EXPECT_EQ(p % 4, 1u);
    EXPECT_GT(p, 1u << 19);
  }
}

TEST(PrimeField, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto p : {kDefaultPrimes[0], kDefaultPrimes[2], 3u, 101u}) {
    const PrimeField G(p);
    for (int i = 0; i < 10000; ++i) {
      const Residue a = rng() % p, b = rng() % p, c = rng() % p;
      EXPECT_EQ(G.mul(G.mul(a, b), c), G.mul(a, G.mul(b, c)));
      EXPECT_EQ(G.add(G.add(a, b), c), G.add(a, G.add(b, c)));
      EXPECT_EQ(G.mul(a, G.add(b, c)), G.add(G.mul(a, b), G.mul(a, c)));
      EXPECT_EQ(G.add(a, G.neg(a)), 0u);
      if (a != 0) EXPECT_EQ(G.mul(a, G.inv(a)), 1u);
      EXPECT_LT(G.sub(a, b), p);
    }
  }
  EXPECT_THROW(F.inv(0), InvalidArgument);
}

TEST(PrimeField, SqrtMinusOne) {
  for (auto p : kDefaultPrimes) {
    const PrimeField G(p);
    const Residue i = sqrt_minus_one(G);
    EXPECT_EQ(G.mul(i, i), G.neg(1));
  }
  EXPECT_THROW(sqrt_minus_one(PrimeField(1000003)), InvalidArgument);
}

TEST(Monomial, BasisExamples) {
  const auto b = monomial_basis(1, 5);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], Exponents{5});
  EXPECT_EQ(monomial_basis(3, 2).size(), 6u);
  EXPECT_EQ(monomial_basis(4, 3).size(), oracle::tuples(4, 3).size());
  EXPECT_EQ(monomial_basis(4, 3).size(), 20u);
}

TEST(Monomial, GrevlexOrderForThreeVariables) {
  const std::vector<Exponents> expected{{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {1, 0, 1}, {0, 1, 1}, {0, 0, 2}};
  EXPECT_EQ(monomial_basis(3, 2), expected);
}

TEST(Monomial, CountsMatchBinomialsAndRankRoundTrips) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= 12; ++d) {
      const auto basis = monomial_basis(n, d);
      EXPECT_EQ(BigInt(basis.size()), oracle::pascal(n + d - 1, n - 1));
      EXPECT_EQ(monomial_count(n, d), basis.size());
      for (std::size_t r = 0; r < basis.size(); ++r) {
        ASSERT_EQ(monomial_rank(basis[r]), r);
        ASSERT_EQ(monomial_unrank(r, n, d), basis[r]);
      }
    }
  }
  EXPECT_THROW(monomial_count(200, 200), LimitExceeded);
}

TEST(Monomial, TimesVariableTable) {
  const auto& t = monomial_table(3, 2);
  for (std::size_t r = 0; r < t.size(); ++r) {
    for (int i = 0; i < 3; ++i) {
      Exponents e(t[r].begin(), t[r].end());
      ++e[i];
      EXPECT_EQ(t.times_variable(i)[r], monomial_rank(e));
    }
  }
}

TEST(Form, ProductExamples) {
  const Form x = Form::variable(F, 2, 0), y = Form::variable(F, 2, 1);
  EXPECT_EQ(mul(x, y), Form::monomial(F, std::vector<int>{1, 1}));
  const Form sq = power(x + y, 2);
  EXPECT_EQ(sq.coefficient(std::vector<int>{2, 0}), 1u);
  EXPECT_EQ(sq.coefficient(std::vector<int>{1, 1}), 2u);
  EXPECT_EQ(sq.coefficient(std::vector<int>{0, 2}), 1u);
  const Form cube = power(x + y, 3);
  EXPECT_EQ(cube.coefficients().size(), 4u);
  for (int a = 0; a <= 3; ++a) {
    EXPECT_EQ(cube.coefficient(std::vector<int>{a, 3 - a}), static_cast<Residue>(oracle::pascal(3, a)));
  }
  EXPECT_EQ(power(x, 3), Form::monomial(F, std::vector<int>{3, 0}));
}

TEST(Form, MulAgreesWithSparseOracle) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Form f = random_form(3, 2, seed), g = random_form(3, 3, seed + 100);
    const Form h = mul(f, g);
    EXPECT_EQ(h.degree(), 5);
    EXPECT_EQ(h.coefficients().size(), monomial_count(3, 5));
    EXPECT_EQ(to_poly(h), to_poly(f) * to_poly(g));
  }
}

TEST(Form, RingLaws) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Form f = random_form(3, 2, seed), g = random_form(3, 2, seed + 1), h = random_form(3, 1, seed + 2);
    EXPECT_EQ(mul(f, g), mul(g, f));
    EXPECT_EQ(mul(mul(f, g), h), mul(f, mul(g, h)));
    EXPECT_EQ(mul(f + g, h), mul(f, h) + mul(g, h));
    EXPECT_EQ(mul(f.scaled(5), h), mul(f, h).scaled(5));
    EXPECT_EQ(power(f, 4), mul(power(f, 2), power(f, 2)));
    EXPECT_EQ(power(f, 3), mul(mul(f, f), f));
  }
}

TEST(Form, MismatchedShapesThrow) {
  EXPECT_THROW(mul(random_form(2, 1, 0), random_form(3, 1, 0)), InvalidArgument);
  EXPECT_THROW(mul(random_form(2, 1, 0, 1000033), random_form(2, 1, 0, 1048589)), InvalidArgument);
  EXPECT_THROW(Form(F, 2, 2, std::vector<Residue>{1, 2}), InvalidArgument);
}

TEST(Form, RandomFormIsDeterministicAndSeedSensitive) {
  EXPECT_EQ(random_form(3, 4, 9), random_form(3, 4, 9));
  for (std::uint64_t s = 0; s < 100; ++s) EXPECT_NE(random_form(2, 1, 2 * s), random_form(2, 1, 2 * s + 1));
  EXPECT_EQ(random_form(3, 0, 5).coefficients().size(), 1u);
  EXPECT_THROW(random_form(2, 2, 0, 1000000), InvalidArgument);
}

TEST(Form, TextRoundTrip) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Form f = random_form(3, 3, seed);
    EXPECT_EQ(parse_form(to_string(f), F, 3), f);
  }
  const Form g = parse_form("x^2 - 3*x*y + y^2", F, 2);
  EXPECT_EQ(g.coefficient(std::vector<int>{1, 1}), F.neg(3));
  EXPECT_EQ(to_string(Form(F, 2, 3)), "0");
  EXPECT_THROW(parse_form("x^2 + y", F, 2), InvalidArgument);
  EXPECT_THROW(parse_form("x^2 + q", F, 2), InvalidArgument);
}

TEST(Series, ProductExamples) {
  const std::vector<int> three{3};
  EXPECT_EQ(coeffs(series_from_product(2, three, 5)), ints({1, 2, 3, 3, 3, 3}));
  const std::vector<int> quads{2, 2, 2, 2};
  EXPECT_EQ(coeffs(series_from_product(3, quads, 5)), ints({1, 3, 2, -2, -3, -1}));
  EXPECT_EQ(coeffs(series_from_product(1, {}, 3)), ints({1, 1, 1, 1}));
}

TEST(Series, ProductMatchesConvolutionOracle) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + rng() % 5;
    std::vector<int> degs(rng() % 7);
    for (auto& d : degs) d = 1 + rng() % 5;
    const int cap = rng() % 20;
    EXPECT_EQ(coeffs(series_from_product(n, degs, cap)), oracle::product_series(n, degs, cap));
  }
}

TEST(Series, TruncatePlus) {
  EXPECT_EQ(coeffs(truncate_plus(IntSeries(4, ints({1, 3, 2, -2, -3})))), ints({1, 3, 2, 0, 0}));
  EXPECT_EQ(coeffs(truncate_plus(IntSeries(2, ints({1, 2, 3})))), ints({1, 2, 3}));
  EXPECT_EQ(coeffs(truncate_plus(IntSeries(2, ints({0, 2, 3})))), ints({0, 0, 0}));
  EXPECT_EQ(coeffs(truncate_plus(IntSeries(3, ints({1, 0, 3, 1})))), ints({1, 0, 0, 0}));
}

TEST(Series, TruncatePlusIsIdempotent) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<BigInt> c(1 + rng() % 12);
    for (auto& x : c) x = static_cast<int>(rng() % 21) - 5;
    const IntSeries s(static_cast<int>(c.size()) - 1, c);
    const auto once = truncate_plus(s);
    EXPECT_EQ(truncate_plus(once), once);
    EXPECT_EQ(coeffs(once), oracle::truncate(c));
  }
}

TEST(Series, CompleteIntersectionProductIsNonNegative) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + rng() % 5;
    std::vector<int> degs(1 + rng() % n);
    int socle = 0;
    for (auto& d : degs) {
      d = 1 + rng() % 4;
      socle += d - 1;
    }
    const auto s = series_from_product(n, degs, socle + 6);
    for (int i = 0; i <= socle; ++i) EXPECT_GE(s[i], 0);
    if (static_cast<int>(degs.size()) == n) {
      for (int i = socle + 1; i <= socle + 6; ++i) EXPECT_EQ(s[i], 0);
    }
  }
}

TEST(Series, DivisionByOneMinusT) {
  IntSeries one(6, ints({1, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(coeffs(one.divided_by_one_minus_t(3)), ints({1, 3, 6, 10, 15, 21, 28}));
  EXPECT_EQ(coeffs(one.divided_by_one_minus_t(3).times_one_minus_t_pow(1).times_one_minus_t_pow(1)
                       .times_one_minus_t_pow(1)),
            ints({1, 0, 0, 0, 0, 0, 0}));
}

TEST(Echelon, RankAgreesWithGaussJordanOracle) {
  std::mt19937_64 rng(19);
  for (auto p : {3u, 7u, kDefaultPrime}) {
    const PrimeField G(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t rows = rng() % 9, cols = 1 + rng() % 9;
      std::vector<Row> m(rows, Row(cols));
      std::vector<std::vector<std::uint64_t>> copy(rows, std::vector<std::uint64_t>(cols));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) copy[i][j] = m[i][j] = (rng() % 3 == 0) ? 0 : rng() % p;
      // Add dependent rows now and then.
      if (rows >= 2 && trial % 3 == 0) {
        for (std::size_t j = 0; j < cols; ++j) copy[rows - 1][j] = m[rows - 1][j] = G.add(m[0][j], m[1][j]);
      }
      EXPECT_EQ(matrix_rank(G, cols, m), oracle::rank(copy, p));
      const auto kernel = null_space(G, cols, m);
      EXPECT_EQ(kernel.size() + matrix_rank(G, cols, m), cols);
      for (const auto& v : kernel) {
        for (const auto& r : m) {
          std::uint64_t dot = 0;
          for (std::size_t j = 0; j < cols; ++j) dot = (dot + std::uint64_t{r[j]} * v[j]) % p;
          EXPECT_EQ(dot, 0u);
        }
      }
    }
  }
}

TEST(Echelon, ReducedRowsAreReducedEchelon) {
  EchelonBasis b(F, 6);
  for (std::uint64_t s = 0; s < 4; ++s) {
    const Form f = random_form(2, 5, s);
    b.insert(Row(f.coefficients().begin(), f.coefficients().end()));
  }
  const auto rref = b.reduced_rows();
  const auto pivots = b.pivot_columns();
  ASSERT_EQ(rref.size(), 4u);
  for (std::size_t i = 0; i < rref.size(); ++i) {
    EXPECT_EQ(rref[i][pivots[i]], 1u);
    for (std::size_t j = 0; j < rref.size(); ++j) {
      if (j != i) EXPECT_EQ(rref[j][pivots[i]], 0u);
    }
    for (std::size_t c = 0; c < pivots[i]; ++c) EXPECT_EQ(rref[i][c], 0u);
  }
  EXPECT_TRUE(std::is_sorted(pivots.begin(), pivots.end()));
}

TEST(Echelon, FullSpaceBehavesLikeIdentity) {
  const auto full = EchelonBasis::full_space(F, 5);
  EXPECT_TRUE(full.full());
  EXPECT_EQ(full.rank(), 5u);
  EXPECT_TRUE(full.contains(Row{1, 2, 3, 4, 5}));
  EXPECT_EQ(full.rows().size(), 5u);
  EchelonBasis copy = full;
  EXPECT_FALSE(copy.insert(Row{0, 1, 0, 0, 0}));
}

TEST(Random, DeriveSeedSeparatesStreams) {
  EXPECT_EQ(derive_seed(1, 2), derive_seed(1, 2));
  EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
  ResidueStream a(5), b(5);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(97), b.next(97));
}

TEST(Parallel, ResultsKeepIndexOrderAndPropagateErrors) {
  const auto out = parallel_map(1000, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_THROW(parallel_map(10,
                            [](std::size_t i) {
                              if (i == 7) throw InvalidArgument("boom");
                              return i;
                            }),
               InvalidArgument);
}
