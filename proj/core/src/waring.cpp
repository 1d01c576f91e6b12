#include "gfl/waring.hpp"

#include <algorithm>
#include <numeric>

#include "gfl/echelon.hpp"
#include "gfl/errors.hpp"
#include "gfl/random.hpp"

namespace gfl::waring {

namespace {

void check_query(const RankQuery& q) {
  if (q.k < 1 || q.d < 1 || q.n < 1) throw InvalidArgument("rank query needs k, d, n ≥ 1");
}

BigInt dim_s(int n, int d) { return binomial(n + d - 1, n - 1); }

BigInt pow_int(int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

MonomialQuery MonomialQuery::from_exponents(std::span<const int> exponents) {
  MonomialQuery m;
  for (int e : exponents) {
    if (e < 0) throw InvalidArgument("negative exponent");
    if (e > 0) m.exponents.push_back(e);
  }
  std::sort(m.exponents.begin(), m.exponents.end());
  return m;
}

int MonomialQuery::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

BigInt generic_rank(int k, int n) {
  if (k < 1 || n < 1) throw InvalidArgument("generic_rank needs k, n ≥ 1");
  if (k == 2) return n;
  BigInt value = ceil_div(binomial(n + k - 1, n - 1), n);
  const bool sporadic = (k == 4 && n >= 3 && n <= 5) || (k == 3 && n == 5);
  if (sporadic) value += 1;
  return value;
}

RankBounds k_rank_bounds(const RankQuery& q) {
  check_query(q);
  if (q.k < 2) throw InvalidArgument("k_rank_bounds needs k ≥ 2");
  return {ceil_div(dim_s(q.n, q.k * q.d), dim_s(q.n, q.d)), pow_int(q.k, q.n - 1)};
}

BigInt conjectured_k_rank(const RankQuery& q) {
  check_query(q);
  if (q.k < 2) throw InvalidArgument("conjectured_k_rank needs k ≥ 2");
  const BigInt inner = dim_s(q.n, q.d);
  if (q.k >= 3) return ceil_div(dim_s(q.n, q.k * q.d), inner);
  const BigInt target = dim_s(q.n, 2 * q.d);
  for (BigInt s = 1; s <= target + 1; ++s) {
    if (s * inner - s * (s - 1) / 2 >= target) return s;
  }
  throw InvariantViolation("conjectured_k_rank: no s satisfies the k = 2 inequality");
}

Threshold d_threshold(int k, int n, int dmax_search) {
  if (dmax_search < 1) throw InvalidArgument("d_threshold needs dmax_search ≥ 1");
  Threshold t{std::nullopt, pow_int(k, n - 1)};
  for (int d = dmax_search; d >= 1; --d) {
    if (conjectured_k_rank({k, d, n}) != t.limit) break;
    t.d0 = d;
  }
  return t;
}

BigInt monomial_rank(const MonomialQuery& m) {
  if (m.exponents.empty()) throw InvalidArgument("monomial_rank: monomial has no variables");
  BigInt prod = 1;
  for (int a : m.exponents) prod *= a + 1;
  return prod / (m.exponents.front() + 1);
}

int monomial_2rank(const MonomialQuery& m) {
  if (m.degree() % 2 != 0) throw InvalidArgument("monomial_2rank: total degree must be even");
  const bool all_even = std::all_of(m.exponents.begin(), m.exponents.end(), [](int a) { return a % 2 == 0; });
  return all_even ? 1 : 2;
}

MonomialBound monomial_krank_upper(const MonomialQuery& m, int k) {
  if (k < 3) throw InvalidArgument("monomial_krank_upper needs k ≥ 3");
  const int total = m.degree();
  if (total == 0 || total % k != 0) throw InvalidArgument("monomial degree must be a positive multiple of k");
  const int d = total / k;
  const int n = m.num_vars();
  MonomialBound out{pow_int(2, k - 1), {"2^(k-1)"}};
  if (d >= n * (k - 2)) {
    out.value = std::min<BigInt>(out.value, k);
    out.applied.emplace_back("k when d >= n(k-2)");
  }
  if (n == 2) {
    const int s = m.exponents[0] % k;
    const int t = m.exponents[1] % k;
    out.value = std::min<BigInt>(out.value, std::max(s, t) + 1);
    out.applied.emplace_back("max(a mod k, b mod k) + 1");
  }
  return out;
}

std::pair<Form, Form> two_square_decomposition(const Form& m1, const Form& m2) {
  if (m1.degree() != m2.degree()) throw InvalidArgument("two_square_decomposition: degrees differ");
  const PrimeField& F = m1.field();
  const Residue i = sqrt_minus_one(F);
  const Residue half = F.inv(2);
  Form g1 = (m1 + m2).scaled(half);
  Form g2 = (m1 - m2).scaled(F.mul(i, half));
  if (!(mul(g1, g1) + mul(g2, g2) == mul(m1, m2))) {
    throw InvariantViolation("two_square_decomposition: g1^2 + g2^2 != m1*m2");
  }
  return {std::move(g1), std::move(g2)};
}

std::optional<PerfectPair> perfect_pair(int k, int d) {
  if (k < 1 || d < 1) throw InvalidArgument("perfect_pair needs k, d ≥ 1");
  const long long num = static_cast<long long>(k) * d + 1;
  if (num % (d + 1) != 0) return std::nullopt;
  const int j = (k - 1) / (d + 1);
  if (k != j * d + j + 1 || num / (d + 1) != static_cast<long long>(j) * d + 1) {
    throw InvariantViolation("perfect_pair: (k, d) does not sit in E_j");
  }
  return PerfectPair{j, j * d + 1};
}

MaxRankFacts max_rank_facts(int k, int d, int n) {
  RankQuery q{k, d, n};
  check_query(q);
  MaxRankFacts f{q, {}, {}, 0, false, 0, {}, {}};
  if (d == 1) {
    f.generic_value = generic_rank(k, n);
  } else {
    f.generic_value = conjectured_k_rank(q);
    f.generic_conjectural = true;
  }
  f.blekherman_teitler_bound = 2 * f.generic_value;
  if (n == 2) {
    f.conjectured_binary_max = k;
    if (d == 1) f.known_exact = k;  // Reznick: binary forms of degree k
    if (k == 2) {
      // f = g1*g2 over an algebraically closed field, then the two-square identity.
      f.upper_bound = 2;
      f.known_exact = 2;
    }
  }
  f.registry = {
      {"4-rank of x1*x2^7", 4},
      {"maximal 2-rank of binary forms", 2},
  };
  return f;
}

namespace {

void add_tangent_rows(EchelonBasis& basis, const RankQuery& q, std::uint64_t seed, std::uint32_t p, int index) {
  const PrimeField field(p);
  const Form g = random_form(q.n, q.d, derive_seed(seed, static_cast<std::uint64_t>(index)), p);
  const Form h = q.k == 1 ? Form::constant(field, q.n, 1) : power(g, q.k - 1);
  for (const auto& m : monomial_basis(q.n, q.d)) {
    if (basis.full()) return;
    const Form row = mul(h, Form::monomial(field, m));
    const auto c = row.coefficients();
    basis.insert(Row(c.begin(), c.end()));
  }
}

}  // namespace

std::size_t secant_dimension(const RankQuery& q, int s, std::uint64_t seed, std::uint32_t p) {
  check_query(q);
  if (s < 1) throw InvalidArgument("secant_dimension needs s ≥ 1");
  EchelonBasis basis(PrimeField(p), monomial_count(q.n, q.k * q.d));
  for (int i = 1; i <= s && !basis.full(); ++i) add_tangent_rows(basis, q, seed, p, i);
  return basis.rank();
}

ExperimentalRank experimental_k_rank(const RankQuery& q, std::uint64_t seed, std::uint32_t p) {
  check_query(q);
  const std::size_t ambient = monomial_count(q.n, q.k * q.d);
  EchelonBasis basis(PrimeField(p), ambient);
  ExperimentalRank out{0, ambient, {}};
  for (std::uint64_t s = 1; s <= ambient; ++s) {
    add_tangent_rows(basis, q, seed, p, static_cast<int>(s));
    out.dimensions.push_back(basis.rank());
    if (basis.full()) {
      out.rank = s;
      return out;
    }
  }
  throw InvariantViolation("experimental_k_rank: tangent spaces never filled the ambient space");
}

}  // namespace gfl::waring
