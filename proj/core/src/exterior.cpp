#include "gfl/exterior.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "gfl/echelon.hpp"
#include "gfl/errors.hpp"
#include "gfl/form.hpp"
#include "gfl/hilbert.hpp"
#include "gfl/random.hpp"

namespace gfl::exterior {

namespace {

constexpr int kTable = 33;

struct BinomialTable {
  std::uint64_t c[kTable][kTable] = {};
  constexpr BinomialTable() {
    for (int i = 0; i < kTable; ++i) {
      c[i][0] = 1;
      for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : 0);
    }
  }
};

constexpr BinomialTable kBinom;

void check_shape(int n, int d) {
  if (n < 0 || n > kMaxGenerators) {
    throw InvalidArgument("exterior algebra supports 0.." + std::to_string(kMaxGenerators) + " generators");
  }
  if (d < 0) throw InvalidArgument("negative exterior degree");
}

// Sign of e_j * e_S (j not in S).
int left_sign(int j, Subset s) { return (std::popcount(s & ((Subset{1} << j) - 1)) & 1) ? -1 : 1; }
// Sign of e_S * e_j (j not in S).
int right_sign(int j, Subset s) { return (std::popcount(s >> (j + 1)) & 1) ? -1 : 1; }

void accumulate(const PrimeField& F, Row& out, std::size_t idx, Residue c, int sign) {
  out[idx] = sign > 0 ? F.add(out[idx], c) : F.sub(out[idx], c);
}

// x * e_j (right = true) or e_j * x (right = false), x of degree d given as a coefficient row.
Row times_generator(const PrimeField& F, int n, int d, std::span<const Residue> x, int j, bool right) {
  const auto& basis = subset_basis(n, d);
  Row out(subset_count(n, d + 1), 0);
  const Subset bit = Subset{1} << j;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (x[r] == 0 || (basis[r] & bit)) continue;
    const int sign = right ? right_sign(j, basis[r]) : left_sign(j, basis[r]);
    accumulate(F, out, subset_rank(basis[r] | bit), x[r], sign);
  }
  return out;
}

std::vector<std::size_t> quotient_dims(int n, std::span<const ExtForm> gens, int dmax, bool allow_right) {
  check_shape(n, 0);
  const PrimeField F = gens.empty() ? PrimeField(kDefaultPrime) : gens.front().field();
  bool odd = false;
  for (const auto& g : gens) {
    if (g.num_vars() != n || !(g.field() == F)) throw InvalidArgument("generators live in different algebras");
    odd = odd || (g.degree() % 2 == 1);
  }
  dmax = std::min(dmax, n);
  const bool both_sides = allow_right && odd;
  std::vector<EchelonBasis> pieces;
  std::vector<std::size_t> dims;
  for (int i = 0; i <= dmax; ++i) {
    const std::size_t width = subset_count(n, i);
    if (i > 0 && pieces.back().full()) {
      pieces.push_back(EchelonBasis::full_space(F, width));
    } else {
      EchelonBasis piece(F, width);
      if (i > 0) {
        const auto prev = pieces.back().rows();
        for (const Row& r : prev) {
          for (int j = 0; j < n && !piece.full(); ++j) {
            piece.insert(times_generator(F, n, i - 1, r, j, false));
            if (both_sides) piece.insert(times_generator(F, n, i - 1, r, j, true));
          }
        }
      }
      for (const auto& g : gens) {
        if (g.degree() == i) piece.insert(Row(g.coefficients().begin(), g.coefficients().end()));
      }
      pieces.push_back(std::move(piece));
    }
    dims.push_back(width - pieces.back().rank());
  }
  return dims;
}

// Rows e_S * f for every S of size i.
std::vector<Row> multiplication_rows(const ExtForm& f, int i) {
  const int n = f.num_vars();
  std::vector<Row> rows;
  if (i + f.degree() > n) return rows;
  const auto& source = subset_basis(n, i);
  const auto& fb = subset_basis(n, f.degree());
  const PrimeField& F = f.field();
  const auto fc = f.coefficients();
  for (Subset s : source) {
    Row out(subset_count(n, i + f.degree()), 0);
    for (std::size_t r = 0; r < fb.size(); ++r) {
      if (fc[r] == 0 || (fb[r] & s)) continue;
      accumulate(F, out, subset_rank(s | fb[r]), fc[r], product_sign(s, fb[r]));
    }
    rows.push_back(std::move(out));
  }
  return rows;
}

}  // namespace

std::size_t subset_count(int n, int d) {
  check_shape(n, d);
  return d > n ? 0 : static_cast<std::size_t>(kBinom.c[n][d]);
}

std::size_t subset_rank(Subset s) {
  std::size_t rank = 0;
  int i = 1;
  while (s) {
    const int pos = std::countr_zero(s);
    if (pos >= i) rank += kBinom.c[pos][i];
    s &= s - 1;
    ++i;
  }
  return rank;
}

const std::vector<Subset>& subset_basis(int n, int d) {
  check_shape(n, d);
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Subset>> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({n, d});
  if (inserted && d <= n) {
    auto& out = it->second;
    out.reserve(kBinom.c[n][d]);
    if (d == 0) {
      out.push_back(0);
    } else {
      // Gosper's hack walks d-subsets in increasing numeric order.
      Subset s = (Subset{1} << d) - 1;
      const std::uint64_t limit = std::uint64_t{1} << n;
      while (s < limit) {
        out.push_back(s);
        const Subset c = s & (~s + 1);
        const std::uint64_t r = std::uint64_t{s} + c;
        if (r >= limit) break;
        s = static_cast<Subset>((((r ^ s) >> 2) / c) | r);
      }
    }
  }
  return it->second;
}

int product_sign(Subset s, Subset t) {
  int inversions = 0;
  while (t) {
    const int pos = std::countr_zero(t);
    inversions += std::popcount(s >> (pos + 1));
    t &= t - 1;
  }
  return (inversions & 1) ? -1 : 1;
}

ExtForm::ExtForm(PrimeField field, int n, int degree)
    : field_(field), n_(n), degree_(degree), coeffs_(subset_count(n, degree), 0) {}

ExtForm::ExtForm(PrimeField field, int n, int degree, std::vector<Residue> coefficients)
    : field_(field), n_(n), degree_(degree), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != subset_count(n, degree)) throw InvalidArgument("wrong number of exterior coefficients");
  for (auto& c : coeffs_) c %= field_.modulus();
}

ExtForm ExtForm::basis(PrimeField field, int n, Subset s, Residue coeff) {
  if (n < kMaxGenerators + 1 && (s >> n) != 0) throw InvalidArgument("subset uses a generator beyond n");
  ExtForm f(field, n, std::popcount(s));
  f.coeffs_[subset_rank(s)] = coeff % field.modulus();
  return f;
}

Residue ExtForm::coefficient(Subset s) const {
  if (std::popcount(s) != degree_ || (s >> n_) != 0) return 0;
  return coeffs_[subset_rank(s)];
}

bool ExtForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

ExtForm& ExtForm::operator+=(const ExtForm& other) {
  if (other.n_ != n_ || other.degree_ != degree_ || !(other.field_ == field_)) {
    throw InvalidArgument("adding exterior forms of different shape");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], other.coeffs_[i]);
  return *this;
}

ExtForm ExtForm::scaled(Residue c) const {
  ExtForm out = *this;
  for (auto& x : out.coeffs_) x = field_.mul(x, c % field_.modulus());
  return out;
}

ExtForm ext_mul(const ExtForm& f, const ExtForm& g) {
  if (f.num_vars() != g.num_vars() || !(f.field() == g.field())) {
    throw InvalidArgument("ext_mul: operands live in different algebras");
  }
  const int n = f.num_vars();
  const PrimeField& F = f.field();
  const int d = f.degree() + g.degree();
  if (d > n) return ExtForm(F, n, d);
  const auto& fb = subset_basis(n, f.degree());
  const auto& gb = subset_basis(n, g.degree());
  const auto fc = f.coefficients();
  const auto gc = g.coefficients();
  Row out(subset_count(n, d), 0);
  for (std::size_t a = 0; a < fb.size(); ++a) {
    if (fc[a] == 0) continue;
    for (std::size_t b = 0; b < gb.size(); ++b) {
      if (gc[b] == 0 || (fb[a] & gb[b])) continue;
      accumulate(F, out, subset_rank(fb[a] | gb[b]), F.mul(fc[a], gc[b]), product_sign(fb[a], gb[b]));
    }
  }
  return ExtForm(F, n, d, std::move(out));
}

ExtForm random_ext_form(int n, int d, std::uint64_t seed, std::uint32_t p) {
  const PrimeField F(p);
  ResidueStream stream(derive_seed(seed, (static_cast<std::uint64_t>(n) << 32) ^ static_cast<std::uint64_t>(d) ^ 0xE7ull << 56));
  std::vector<Residue> coeffs(subset_count(n, d));
  for (auto& c : coeffs) c = stream.next(p);
  return ExtForm(F, n, d, std::move(coeffs));
}

std::vector<std::size_t> ext_quotient_dims(int n, std::span<const ExtForm> gens, int dmax) {
  return quotient_dims(n, gens, dmax, true);
}

std::vector<std::size_t> ext_quotient_dims(std::span<const ExtForm> gens, int dmax) {
  if (gens.empty()) throw InvalidArgument("ext_quotient_dims: pass n explicitly when there are no generators");
  return quotient_dims(gens.front().num_vars(), gens, dmax, true);
}

std::vector<std::size_t> ext_quotient_dims_left(std::span<const ExtForm> gens, int dmax) {
  if (gens.empty()) throw InvalidArgument("ext_quotient_dims_left: no generators");
  return quotient_dims(gens.front().num_vars(), gens, dmax, false);
}

IntSeries expected_ext_series(int n, int d, int cap) {
  if (n < 0 || d < 1 || cap < 0) throw InvalidArgument("expected_ext_series: need n ≥ 0, d ≥ 1, cap ≥ 0");
  IntSeries s(cap);
  for (int i = 0; i <= std::min(cap, n); ++i) s[i] = binomial(n, i);
  return truncate_plus(s.times_one_minus_t_pow(d));
}

std::vector<std::size_t> annihilator_dims(const ExtForm& f, int imax) {
  std::vector<std::size_t> dims;
  for (int i = 0; i <= std::min(imax, f.num_vars()); ++i) {
    const std::size_t source = subset_count(f.num_vars(), i);
    const auto rows = multiplication_rows(f, i);
    const std::size_t width = subset_count(f.num_vars(), i + f.degree());
    const std::size_t rank = rows.empty() ? 0 : matrix_rank(f.field(), width, rows);
    dims.push_back(source - rank);
  }
  return dims;
}

std::vector<std::size_t> principal_ideal_dims(const ExtForm& f, int imax) {
  std::vector<std::size_t> dims;
  for (int i = 0; i <= std::min(imax, f.num_vars()); ++i) {
    if (i < f.degree()) {
      dims.push_back(0);
      continue;
    }
    const auto rows = multiplication_rows(f, i - f.degree());
    dims.push_back(rows.empty() ? 0 : matrix_rank(f.field(), subset_count(f.num_vars(), i), rows));
  }
  return dims;
}

BigInt lattice_path_count(int n, int s) {
  if (n < 0 || s < 0) throw InvalidArgument("lattice_path_count: need n, s ≥ 0");
  const int width = n + 2 - 2 * s;
  const int height = n + 2;
  if (width <= 0) return 0;
  std::vector<BigInt> ways(width + 1, 0);
  ways[0] = 1;
  for (int y = 0; y < height; ++y) {
    std::vector<BigInt> next(width + 1, 0);
    for (int x = 0; x <= width; ++x) {
      if (ways[x] == 0) continue;
      if (x > 0) next[x - 1] += ways[x];
      if (x < width) next[x + 1] += ways[x];
    }
    ways = std::move(next);
  }
  return ways[width];
}

BigInt lattice_path_count_transfer(int n, int s) {
  if (n < 0 || s < 0) throw InvalidArgument("lattice_path_count_transfer: need n, s ≥ 0");
  const int width = n + 2 - 2 * s;
  if (width <= 0) return 0;
  const int size = width + 1;
  using Matrix = std::vector<std::vector<BigInt>>;
  auto multiply = [size](const Matrix& a, const Matrix& b) {
    Matrix c(size, std::vector<BigInt>(size, 0));
    for (int i = 0; i < size; ++i)
      for (int k = 0; k < size; ++k) {
        if (a[i][k] == 0) continue;
        for (int j = 0; j < size; ++j) c[i][j] += a[i][k] * b[k][j];
      }
    return c;
  };
  Matrix result(size, std::vector<BigInt>(size, 0));
  Matrix base(size, std::vector<BigInt>(size, 0));
  for (int i = 0; i < size; ++i) {
    result[i][i] = 1;
    if (i > 0) base[i][i - 1] = 1;
    if (i + 1 < size) base[i][i + 1] = 1;
  }
  for (int e = n + 2; e > 0; e >>= 1) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
  }
  return result[0][width];
}

bool TwoQuadricsReport::all_agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const TwoQuadricsRow& r) { return r.agree(); });
}

TwoQuadricsReport two_quadrics_check(int n, std::uint64_t seed, std::uint32_t p) {
  if (n < 2) throw InvalidArgument("two_quadrics_check needs n ≥ 2");
  const PrimeField F(p);
  const std::vector<ExtForm> ext_gens{random_ext_form(n, 2, derive_seed(seed, 0), p),
                                      random_ext_form(n, 2, derive_seed(seed, 1), p)};
  const auto ext = ext_quotient_dims(ext_gens, n);

  std::vector<Form> sym_gens;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 2;
    sym_gens.push_back(Form::monomial(F, e));
  }
  for (std::uint64_t j = 0; j < 2; ++j) sym_gens.push_back(power(random_form(n, 1, derive_seed(seed, 2 + j), p), 2));
  const auto sym = hilbert::hilbert_function(hilbert::GradedSpan(F, n, n, sym_gens));
  hilbert::check_lex_minimality(n, std::vector<int>(n + 2, 2), sym);

  TwoQuadricsReport report{n, seed, p, {}};
  for (int d = 0; d <= n; ++d) {
    report.rows.push_back({d, ext[d], sym[d], lattice_path_count(n, d)});
  }
  return report;
}

}  // namespace gfl::exterior
