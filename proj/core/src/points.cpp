#include "gfl/points.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "gfl/errors.hpp"
#include "gfl/hilbert.hpp"
#include "gfl/random.hpp"

namespace gfl::points {

int PointConfig::num_vars() const { return std::accumulate(factor_dims.begin(), factor_dims.end(), 0); }

namespace {

void normalize_factor(const PrimeField& field, std::span<Residue> coords) {
  const auto lead = std::find_if(coords.begin(), coords.end(), [](Residue c) { return c != 0; });
  if (lead == coords.end()) throw InvalidArgument("point has an all-zero factor");
  const Residue s = field.inv(*lead);
  for (auto& c : coords) c = field.mul(c, s);
}

void require_field_large_enough(const PointConfig& cfg, int degree) {
  // Derivative functionals of order < m on degree-d forms need p > d; we ask for p > 2d.
  if (static_cast<std::uint64_t>(cfg.field.modulus()) <= 2ull * static_cast<std::uint64_t>(std::max(degree, 0))) {
    throw InvalidArgument("prime too small for degree " + std::to_string(degree) + " (need p > 2*dmax)");
  }
}

std::vector<Row> kernel_in_degree(const PointConfig& cfg, int m, int d) {
  const auto basis = monomial_basis(cfg.num_vars(), d);
  const auto conditions = vanishing_conditions(cfg, m, basis);
  return null_space(cfg.field, basis.size(), conditions);
}

Form row_to_form(const PointConfig& cfg, int d, const Row& row) { return Form(cfg.field, cfg.num_vars(), d, row); }

void insert_shifted(EchelonBasis& target, int n, int from_degree, std::span<const Row> rows) {
  const auto& table = monomial_table(n, from_degree);
  for (const Row& r : rows) {
    for (int i = 0; i < n && !target.full(); ++i) {
      const auto& shift = table.times_variable(i);
      Row shifted(target.width(), 0);
      for (std::size_t c = 0; c < r.size(); ++c) shifted[shift[c]] = r[c];
      target.insert(std::move(shifted));
    }
  }
}

void require_projective(const PointConfig& cfg) {
  if (!cfg.is_projective()) throw InvalidArgument("operation needs points in a single projective space");
}

hilbert::GradedSpan ordinary_power_span(const PointConfig& cfg, int m, int dmax) {
  if (m < 1) throw InvalidArgument("power must be at least 1");
  const auto gens = point_ideal_generators(cfg, dmax);
  std::vector<Form> products;
  // Multisets of m generators, enumerated by non-decreasing index tuples.
  std::vector<std::size_t> idx(m, 0);
  while (!gens.empty()) {
    int degree = 0;
    for (auto i : idx) degree += gens[i].degree();
    if (degree <= dmax) {
      Form prod = gens[idx[0]];
      for (int j = 1; j < m; ++j) prod = mul(prod, gens[idx[j]]);
      products.push_back(std::move(prod));
    }
    int pos = m - 1;
    while (pos >= 0 && idx[pos] + 1 == gens.size()) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int j = pos + 1; j < m; ++j) idx[j] = idx[pos];
  }
  return hilbert::GradedSpan(cfg.field, cfg.num_vars(), dmax, products);
}

}  // namespace

PointConfig make_config(PrimeField field, std::vector<int> factor_dims, std::vector<std::vector<Residue>> points) {
  if (factor_dims.empty()) throw InvalidArgument("point configuration needs at least one factor");
  for (int n : factor_dims) {
    if (n < 1) throw InvalidArgument("factor dimension must be positive");
  }
  PointConfig cfg{field, std::move(factor_dims), std::move(points)};
  const int total = cfg.num_vars();
  std::set<std::vector<Residue>> seen;
  for (auto& pt : cfg.points) {
    if (static_cast<int>(pt.size()) != total) throw InvalidArgument("point has the wrong number of coordinates");
    for (auto& c : pt) c %= field.modulus();
    std::size_t offset = 0;
    for (int n : cfg.factor_dims) {
      normalize_factor(field, std::span(pt).subspan(offset, n));
      offset += n;
    }
    if (!seen.insert(pt).second) throw InvalidArgument("points are not pairwise distinct");
  }
  return cfg;
}

PointConfig random_points(std::vector<int> factor_dims, int s, std::uint64_t seed, std::uint32_t p) {
  if (s < 0) throw InvalidArgument("point count must be non-negative");
  const PrimeField field(p);
  const int total = std::accumulate(factor_dims.begin(), factor_dims.end(), 0);
  ResidueStream stream(derive_seed(seed, 0x504F494E54ull));
  std::set<std::vector<Residue>> seen;
  std::vector<std::vector<Residue>> pts;
  while (static_cast<int>(pts.size()) < s) {
    std::vector<Residue> pt(total);
    for (auto& c : pt) c = stream.next(p);
    bool degenerate = false;
    std::size_t offset = 0;
    for (int n : factor_dims) {
      auto f = std::span(pt).subspan(offset, n);
      if (std::all_of(f.begin(), f.end(), [](Residue c) { return c == 0; })) degenerate = true;
      else normalize_factor(field, f);
      offset += n;
    }
    if (degenerate || !seen.insert(pt).second) continue;
    pts.push_back(std::move(pt));
  }
  return make_config(field, std::move(factor_dims), std::move(pts));
}

PointConfig parse_points(std::string_view text, PrimeField field) {
  std::vector<int> dims;
  std::vector<std::vector<Residue>> pts;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<int> these_dims;
    std::vector<Residue> coords;
    std::istringstream factors(line);
    std::string factor;
    while (std::getline(factors, factor, '|')) {
      std::replace(factor.begin(), factor.end(), ',', ' ');
      std::istringstream nums(factor);
      long long v;
      int count = 0;
      while (nums >> v) {
        coords.push_back(field.from_int(v));
        ++count;
      }
      if (!nums.eof()) throw InvalidArgument("line " + std::to_string(lineno) + ": coordinates must be integers");
      if (count == 0) throw InvalidArgument("line " + std::to_string(lineno) + ": empty factor");
      these_dims.push_back(count);
    }
    if (dims.empty()) dims = these_dims;
    else if (dims != these_dims) throw InvalidArgument("line " + std::to_string(lineno) + ": inconsistent factor shape");
    pts.push_back(std::move(coords));
  }
  if (dims.empty()) throw InvalidArgument("point file contains no points");
  return make_config(field, std::move(dims), std::move(pts));
}

std::vector<Exponents> multidegree_basis(std::span<const int> factor_dims, std::span<const int> multidegree) {
  if (factor_dims.size() != multidegree.size()) throw InvalidArgument("multidegree has the wrong number of entries");
  std::vector<Exponents> out{Exponents{}};
  for (std::size_t f = 0; f < factor_dims.size(); ++f) {
    if (multidegree[f] < 0) throw InvalidArgument("multidegree entries must be non-negative");
    const auto part = monomial_basis(factor_dims[f], multidegree[f]);
    std::vector<Exponents> next;
    next.reserve(out.size() * part.size());
    for (const auto& prefix : out) {
      for (const auto& e : part) {
        Exponents joined = prefix;
        joined.insert(joined.end(), e.begin(), e.end());
        next.push_back(std::move(joined));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Row> vanishing_conditions(const PointConfig& cfg, int m, std::span<const Exponents> basis) {
  if (m < 1) throw InvalidArgument("multiplicity must be at least 1");
  const int n = cfg.num_vars();
  const PrimeField& F = cfg.field;
  int top = 0;
  for (const auto& a : basis) top = std::max(top, std::accumulate(a.begin(), a.end(), 0));
  require_field_large_enough(cfg, top);

  std::vector<Exponents> betas;
  for (int order = 0; order < m; ++order) {
    for (auto& b : monomial_basis(n, order)) betas.push_back(std::move(b));
  }
  std::vector<Row> rows;
  rows.reserve(cfg.points.size() * betas.size());
  for (const auto& pt : cfg.points) {
    // powers[i][e] = pt[i]^e, with 0^0 = 1.
    std::vector<std::vector<Residue>> powers(n, std::vector<Residue>(top + 1, 1));
    for (int i = 0; i < n; ++i) {
      for (int e = 1; e <= top; ++e) powers[i][e] = F.mul(powers[i][e - 1], pt[i]);
    }
    for (const auto& beta : betas) {
      Row row(basis.size(), 0);
      for (std::size_t col = 0; col < basis.size(); ++col) {
        const auto& alpha = basis[col];
        Residue v = 1;
        for (int i = 0; i < n && v != 0; ++i) {
          if (alpha[i] < beta[i]) {
            v = 0;
            break;
          }
          for (int j = 0; j < beta[i]; ++j) v = F.mul(v, static_cast<Residue>(alpha[i] - j));
          v = F.mul(v, powers[i][alpha[i] - beta[i]]);
        }
        row[col] = v;
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<std::size_t> symbolic_power_dims(const PointConfig& cfg, int m, int dmax) {
  require_projective(cfg);
  std::vector<std::size_t> dims;
  for (int d = 0; d <= dmax; ++d) {
    const auto basis = monomial_basis(cfg.num_vars(), d);
    const auto rows = vanishing_conditions(cfg, m, basis);
    dims.push_back(basis.size() - matrix_rank(cfg.field, basis.size(), rows));
  }
  return dims;
}

BigInt expected_fat_hf(int n, int s, int m, int d) {
  if (n < 1 || s < 0 || m < 1 || d < 0) throw InvalidArgument("expected_fat_hf: invalid parameters");
  return std::min(binomial(n - 1 + d, n - 1), BigInt(s) * binomial(n + m - 2, n - 1));
}

ApolarityCheck apolarity_check(const PointConfig& cfg, int m, int d) {
  require_projective(cfg);
  if (m < 1 || d < 0) throw InvalidArgument("apolarity_check: need m ≥ 1 and d ≥ 0");
  const int n = cfg.num_vars();
  const auto basis = monomial_basis(n, d);
  ApolarityCheck out{m, d, std::max(0, d - m + 1), 0, 0};
  out.vanishing_side = matrix_rank(cfg.field, basis.size(), vanishing_conditions(cfg, m, basis));
  if (out.power_exponent == 0) {
    out.power_ideal_side = basis.size();
  } else {
    std::vector<Form> gens;
    for (const auto& pt : cfg.points) gens.push_back(power(Form(cfg.field, n, 1, pt), out.power_exponent));
    out.power_ideal_side = hilbert::GradedSpan(cfg.field, n, d, gens).dim(d);
  }
  if (out.vanishing_side != out.power_ideal_side) {
    std::ostringstream msg;
    msg << "apolarity mismatch at m=" << m << ", d=" << d << ": vanishing side " << out.vanishing_side
        << ", power-ideal side " << out.power_ideal_side;
    throw InvariantViolation(msg.str());
  }
  return out;
}

std::vector<Form> point_ideal_generators(const PointConfig& cfg, int dmax) {
  require_projective(cfg);
  if (dmax > kMaxGeneratorDegree) {
    throw LimitExceeded("generator extraction above degree " + std::to_string(kMaxGeneratorDegree));
  }
  const int n = cfg.num_vars();
  std::vector<Form> gens;
  std::vector<Row> previous;
  for (int d = 1; d <= dmax; ++d) {
    const auto kernel = kernel_in_degree(cfg, 1, d);
    EchelonBasis span(cfg.field, monomial_count(n, d));
    insert_shifted(span, n, d - 1, previous);
    for (const Row& v : kernel) {
      if (span.full()) break;
      if (span.insert(v)) gens.push_back(row_to_form(cfg, d, v));
    }
    previous = kernel;
  }
  return gens;
}

std::vector<std::size_t> ordinary_power_dims(const PointConfig& cfg, int m, int dmax) {
  return ordinary_power_span(cfg, m, dmax).dims();
}

DefectReport symbolic_defect(const PointConfig& cfg, int m, int dmax) {
  require_projective(cfg);
  const int n = cfg.num_vars();
  const auto ordinary = ordinary_power_span(cfg, m, dmax);
  DefectReport out{{}, 0, false};
  std::vector<Row> previous;
  for (int d = 0; d <= dmax; ++d) {
    const auto symbolic = kernel_in_degree(cfg, m, d);
    EchelonBasis known = ordinary.piece(d);
    if (d > 0) insert_shifted(known, n, d - 1, previous);
    // known ⊆ symbolic, so the quotient dimension is the rank gap.
    if (known.rank() > symbolic.size()) throw InvariantViolation("I^m is not contained in I^(m)");
    out.per_degree.push_back(symbolic.size() - known.rank());
    out.total += out.per_degree.back();
    previous = symbolic;
  }
  out.stabilized = dmax >= 1 && out.per_degree[dmax] == 0 && out.per_degree[dmax - 1] == 0;
  return out;
}

ContainmentReport containment_check(const PointConfig& cfg, int m, int r, int dmax) {
  require_projective(cfg);
  if (m < 1 || r < 1) throw InvalidArgument("containment_check: need m, r ≥ 1");
  const auto ordinary = ordinary_power_span(cfg, r, dmax);
  ContainmentReport out;
  for (int d = 0; d <= dmax; ++d) {
    const auto symbolic = kernel_in_degree(cfg, m, d);
    const auto& piece = ordinary.piece(d);
    const bool inside = std::all_of(symbolic.begin(), symbolic.end(), [&](const Row& v) { return piece.contains(v); });
    out.contained.push_back(inside);
    if (!inside && !out.first_failure) out.first_failure = d;
  }
  return out;
}

MultigradedValue multigraded_hf(const PointConfig& cfg, int m, std::span<const int> multidegree) {
  const auto basis = multidegree_basis(cfg.factor_dims, multidegree);
  const auto rank = matrix_rank(cfg.field, basis.size(), vanishing_conditions(cfg, m, basis));
  return {basis.size(), basis.size() - rank, rank};
}

}  // namespace gfl::points
