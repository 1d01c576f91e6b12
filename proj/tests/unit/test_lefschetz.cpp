#include <gtest/gtest.h>

#include "gfl/errors.hpp"
#include "gfl/lefschetz.hpp"
#include "oracles.hpp"

using namespace gfl;
using namespace gfl::lefschetz;
using hilbert::IdealSpec;

namespace {

const PrimeField F(kDefaultPrime);
const std::span<const std::uint32_t> kAll(kDefaultPrimes);
const std::span<const std::uint32_t> kOne(kDefaultPrimes, 1);

IdealSpec squares(int n) { return {n, hilbert::MonomialCompleteIntersection{std::vector<int>(n, 2)}}; }

// Rank of multiplication A_i → A_{i+e} from scratch: rank(I_{i+e} ∪ ℓ·S_i) − dim I_{i+e},
// with I_{i+e} spanned by generators times monomials.
std::size_t map_rank_oracle(const std::vector<Form>& gens, const Form& mult, int n, int i) {
  const int t = i + mult.degree();
  const auto target = oracle::tuples(n, t);
  auto row_of = [&](const Form& f) {
    std::vector<std::uint64_t> row;
    for (const auto& e : target) row.push_back(f.coefficient(e));
    return row;
  };
  std::vector<std::vector<std::uint64_t>> ideal;
  for (const auto& g : gens) {
    if (g.degree() > t) continue;
    for (const auto& m : oracle::tuples(n, t - g.degree())) ideal.push_back(row_of(mul(g, Form::monomial(F, m))));
  }
  auto joined = ideal;
  for (const auto& m : oracle::tuples(n, i)) joined.push_back(row_of(mul(mult, Form::monomial(F, m))));
  return oracle::rank(joined, F.modulus()) - oracle::rank(ideal, F.modulus());
}

}  // namespace

TEST(MultiplicationRank, SquaresIsMaximal) {
  const auto spec = squares(3);
  const Form l = random_form(3, 1, 5);
  const auto r = multiplication_rank(spec, l, 1, 4);
  EXPECT_EQ(r.dim_source, 3u);
  EXPECT_EQ(r.dim_target, 3u);
  EXPECT_TRUE(r.maximal());
  EXPECT_EQ(r.rank, map_rank_oracle(hilbert::expand_spec(spec), l, 3, 1));
}

TEST(MultiplicationRank, ZeroMultiplierAndZeroIdeal) {
  EXPECT_EQ(multiplication_rank(squares(3), Form(F, 3, 1), 1, 4).rank, 0u);
  const IdealSpec zero{3, hilbert::ExplicitGenerators{}};
  const Form l = random_form(3, 1, 2);
  for (int i = 0; i <= 4; ++i) EXPECT_EQ(multiplication_rank(zero, l, i, 6).rank, monomial_count(3, i));
}

TEST(MultiplicationRank, AgreesWithOracleOnRandomIdeals) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const std::vector<Form> gens{random_form(3, 2, seed), random_form(3, 2, seed + 10), random_form(3, 3, seed + 20)};
    const IdealSpec spec{3, hilbert::ExplicitGenerators{gens}};
    for (int e = 1; e <= 2; ++e) {
      const Form mult = random_form(3, e, seed + 30);
      for (int i = 0; i + e <= 5; ++i) {
        const auto r = multiplication_rank(spec, mult, i, 5);
        EXPECT_EQ(r.rank, map_rank_oracle(gens, mult, 3, i));
        EXPECT_LE(r.rank, std::min(r.dim_source, r.dim_target));
      }
    }
  }
}

TEST(TopDegree, CompleteIntersections) {
  EXPECT_EQ(top_degree(squares(3)), 3);
  EXPECT_EQ(top_degree({2, hilbert::MonomialCompleteIntersection{{3, 4}}}), 5);
  EXPECT_THROW(top_degree({3, hilbert::ExplicitGenerators{}}, 20), InvalidArgument);
}

TEST(Wlp, Examples) {
  EXPECT_TRUE(wlp_test(squares(3), std::nullopt, 2, kAll).holds);
  const auto t333 = wlp_test({3, hilbert::PowerOfMonomialCI{3, 3}}, std::nullopt, 5, kAll);
  EXPECT_FALSE(t333.holds);
  bool some_failure = false;
  for (const auto& m : t333.maps) some_failure |= !m.maximal;
  EXPECT_TRUE(some_failure);
  EXPECT_TRUE(wlp_test({3, hilbert::ExplicitGenerators{}}, 6, 1, kOne).holds);
}

TEST(Slp, Examples) {
  EXPECT_TRUE(slp_test({2, hilbert::MonomialCompleteIntersection{{4, 4}}}, std::nullopt, 6, 2, kOne).holds);
  EXPECT_TRUE(slp_test(squares(3), std::nullopt, 3, 2, kAll).holds);
  EXPECT_FALSE(slp_test({3, hilbert::PowerOfMonomialCI{3, 3}}, std::nullopt, 2, 2, kOne).holds);
}

TEST(Slp, ImpliesWlp) {
  const std::vector<IdealSpec> specs{squares(4),
                                     {3, hilbert::GenericForms{{2, 2, 2, 2}}, 3},
                                     {3, hilbert::PowerIdeal{4, 2}, 8},
                                     {3, hilbert::PowerOfMonomialCI{2, 2}}};
  for (const auto& spec : specs) {
    const bool slp = slp_test(spec, std::nullopt, 2, 2, kOne).holds;
    const bool wlp = wlp_test(spec, std::nullopt, 2, kOne).holds;
    if (slp) EXPECT_TRUE(wlp);
  }
}

TEST(Wlp, GorensteinHilbertFunctionIsSymmetric) {
  for (const auto& degs : {std::vector<int>{2, 2, 2}, std::vector<int>{2, 3, 4}, std::vector<int>{3, 3, 3, 2}}) {
    const int n = static_cast<int>(degs.size());
    const IdealSpec spec{n, hilbert::MonomialCompleteIntersection{degs}};
    const int top = top_degree(spec);
    const auto hf = hilbert::hilbert_function(spec, top);
    for (int i = 0; i <= top; ++i) EXPECT_EQ(hf[i], hf[top - i]);
  }
}

TEST(MuLefschetz, SingletonPartitionMatchesSlpPower) {
  const IdealSpec spec{3, hilbert::GenericForms{{2, 2, 2}}, 4};
  const auto mu = mu_lefschetz_test(spec, std::vector<int>{2}, std::nullopt, 2, kOne);
  const auto slp = slp_test(spec, std::nullopt, 2, 2, kOne);
  for (const auto& rec : mu.maps) {
    bool found = false;
    for (const auto& s : slp.maps) {
      if (s.power == 2 && s.source_degree == rec.source_degree) {
        EXPECT_EQ(s.best_rank, rec.best_rank);
        found = true;
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(MuLefschetz, RanksNeverExceedDimensions) {
  const IdealSpec spec{3, hilbert::GenericForms{{2, 2, 2, 2}}, 1};
  const auto v = mu_lefschetz_test(spec, std::vector<int>{1, 1}, std::nullopt, 2, kAll);
  EXPECT_FALSE(v.maps.empty());
  for (const auto& rec : v.maps) {
    EXPECT_LE(rec.best_rank, std::min(rec.dim_source, rec.dim_target));
    EXPECT_EQ(rec.per_prime.size(), 3u);
  }
  const auto zero = mu_lefschetz_test({3, hilbert::ExplicitGenerators{}}, std::vector<int>{2, 1}, 4, 1, kOne);
  EXPECT_TRUE(zero.holds);
  EXPECT_THROW(mu_lefschetz_test(spec, std::vector<int>{1, 2}, 3, 1, kOne), InvalidArgument);
}
