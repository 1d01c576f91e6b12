#include "gfl/dynamics.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "gfl/errors.hpp"
#include "gfl/random.hpp"

namespace gfl::dynamics {

namespace {

using Matrix = std::vector<Residue>;  // p x p, row-major

std::uint64_t checked_space_size(std::uint32_t p, int n) {
  if (n < 1) throw InvalidArgument("need at least one variable");
  if (!is_prime(p)) throw InvalidArgument("modulus must be prime");
  std::uint64_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= p;
    if (size > kEnumerationCap) {
      throw LimitExceeded("p^n exceeds the enumeration cap of " + std::to_string(kEnumerationCap) + " points");
    }
  }
  return size;
}

// V[a][e] = a^e with 0^0 = 1.
Matrix vandermonde(const PrimeField& F) {
  const std::uint32_t p = F.modulus();
  Matrix v(static_cast<std::size_t>(p) * p);
  for (std::uint32_t a = 0; a < p; ++a) {
    Residue x = 1;
    for (std::uint32_t e = 0; e < p; ++e) {
      v[a * p + e] = x;
      x = F.mul(x, a);
    }
  }
  return v;
}

// Inverse of the Vandermonde matrix: the indicator of a is 1 - (x - a)^{p-1}, whose x^k
// coefficient is [k = 0] - a^{p-1-k}.
Matrix inverse_vandermonde(const PrimeField& F) {
  const std::uint32_t p = F.modulus();
  const Matrix v = vandermonde(F);
  Matrix w(static_cast<std::size_t>(p) * p);
  for (std::uint32_t k = 0; k < p; ++k) {
    for (std::uint32_t a = 0; a < p; ++a) {
      const Residue pw = v[a * p + (p - 1 - k)];
      w[k * p + a] = F.sub(k == 0 ? 1 : 0, pw);
    }
  }
  return w;
}

const Matrix& cached(std::uint32_t p, bool inverse) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, bool>, Matrix> cache;
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.try_emplace({p, inverse});
  if (inserted) {
    const PrimeField F(p);
    it->second = inverse ? inverse_vandermonde(F) : vandermonde(F);
  }
  return it->second;
}

// Applies m to every axis of the p x ... x p tensor.
std::vector<Residue> axis_transform(const PrimeField& F, int n, const Matrix& m, std::vector<Residue> data) {
  const std::size_t p = F.modulus();
  std::vector<Residue> line(p);
  std::size_t stride = 1;
  for (int axis = 0; axis < n; ++axis) {
    const std::size_t block = stride * p;
    for (std::size_t base = 0; base < data.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t a = 0; a < p; ++a) {
          std::uint64_t acc = 0;
          const Residue* row = &m[a * p];
          for (std::size_t e = 0; e < p; ++e) {
            acc = (acc + static_cast<std::uint64_t>(row[e]) * data[base + off + e * stride]) % F.modulus();
          }
          line[a] = static_cast<Residue>(acc);
        }
        for (std::size_t a = 0; a < p; ++a) data[base + off + a * stride] = line[a];
      }
    }
    stride = block;
  }
  return data;
}

Matrix multiply(const PrimeField& F, const Matrix& a, const Matrix& b, std::size_t p) {
  Matrix c(p * p, 0);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < p; ++k) acc = (acc + static_cast<std::uint64_t>(a[i * p + k]) * b[k * p + j]) % F.modulus();
      c[i * p + j] = static_cast<Residue>(acc);
    }
  }
  return c;
}

std::optional<Residue> scalar_value(const Matrix& m, std::size_t p) {
  const Residue c = m[0];
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (m[i * p + j] != (i == j ? c : 0)) return std::nullopt;
    }
  }
  return c;
}

int reduce_exponent(long long e, std::uint32_t p) {
  if (e < 0) throw InvalidArgument("negative exponent");
  if (e < static_cast<long long>(p)) return static_cast<int>(e);
  return static_cast<int>((e - 1) % (p - 1) + 1);
}

}  // namespace

FuncPoly::FuncPoly(std::uint32_t p, int n) : p_(p), n_(n), coeffs_(checked_space_size(p, n), 0) {}

FuncPoly::FuncPoly(std::uint32_t p, int n, std::vector<Residue> coefficients)
    : p_(p), n_(n), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != checked_space_size(p, n)) throw InvalidArgument("expected p^n coefficients");
  for (auto& c : coeffs_) c %= p;
}

bool FuncPoly::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c == 0; });
}

std::size_t FuncPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](Residue c) { return c != 0; }));
}

std::size_t flat_index(std::span<const int> exponents, std::uint32_t p) {
  std::size_t index = 0;
  for (auto it = exponents.rbegin(); it != exponents.rend(); ++it) {
    if (*it < 0 || static_cast<std::uint32_t>(*it) >= p) throw InvalidArgument("exponent out of range");
    index = index * p + static_cast<std::size_t>(*it);
  }
  return index;
}

std::vector<int> unflatten(std::size_t index, std::uint32_t p, int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) {
    e[i] = static_cast<int>(index % p);
    index /= p;
  }
  return e;
}

std::vector<Residue> evaluation_table(const FuncPoly& f) {
  const PrimeField F(f.prime());
  return axis_transform(F, f.num_vars(), cached(f.prime(), false),
                        std::vector<Residue>(f.coefficients().begin(), f.coefficients().end()));
}

FuncPoly interpolate(std::uint32_t p, int n, std::span<const Residue> table) {
  if (table.size() != checked_space_size(p, n)) throw InvalidArgument("table must have p^n entries");
  const PrimeField F(p);
  return FuncPoly(p, n, axis_transform(F, n, cached(p, true), std::vector<Residue>(table.begin(), table.end())));
}

FuncPoly phi(const FuncPoly& f) {
  auto table = evaluation_table(f);
  for (auto& v : table) v = (v == 0) ? 1 : 0;
  return FuncPoly(f.prime(), f.num_vars(), std::move(table));
}

FuncPoly psi(const FuncPoly& f) { return FuncPoly(f.prime(), f.num_vars(), evaluation_table(f)); }

FuncPoly sum_of_all_monomials(std::uint32_t p, int n) {
  FuncPoly f(p, n);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = 1;
  return f;
}

FuncPoly random_func_poly(std::uint32_t p, int n, std::uint64_t seed) {
  FuncPoly f(p, n);
  ResidueStream stream(derive_seed(seed, 0xF00Dull ^ (static_cast<std::uint64_t>(p) << 8) ^ static_cast<std::uint64_t>(n)));
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = stream.next(p);
  return f;
}

Period find_period_phi(const FuncPoly& f, std::uint64_t step_limit) {
  if (step_limit < 1) throw InvalidArgument("step_limit must be positive");
  std::uint64_t steps = 0;
  auto step = [&](const FuncPoly& g) {
    if (++steps > step_limit) throw LimitExceeded("phi orbit not closed within " + std::to_string(step_limit) + " steps");
    return phi(g);
  };
  std::uint64_t power = 1;
  std::uint64_t lambda = 1;
  FuncPoly tortoise = f;
  FuncPoly hare = step(f);
  while (!(tortoise == hare)) {
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = step(hare);
    ++lambda;
  }
  tortoise = f;
  hare = f;
  for (std::uint64_t i = 0; i < lambda; ++i) hare = step(hare);
  std::uint64_t mu = 0;
  while (!(tortoise == hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++mu;
  }
  return {mu, lambda};
}

std::vector<FuncPoly> phi_cycle(const FuncPoly& f, const Period& period) {
  FuncPoly g = f;
  for (std::uint64_t i = 0; i < period.tail; ++i) g = phi(g);
  std::vector<FuncPoly> cycle;
  for (std::uint64_t i = 0; i < period.cycle; ++i) {
    cycle.push_back(g);
    g = phi(g);
  }
  return cycle;
}

std::uint64_t psi_order(std::uint32_t p, int n, std::uint64_t bound) {
  checked_space_size(p, n);
  const PrimeField F(p);
  const Matrix& v = cached(p, false);
  // psi is the n-fold Kronecker power of V, so psi^i = id iff V^i = c*I with c^n = 1.
  Matrix m = v;
  for (std::uint64_t i = 1; i <= bound; ++i) {
    if (auto c = scalar_value(m, p); c && F.pow(*c, static_cast<std::uint64_t>(n)) == 1) return i;
    m = multiply(F, m, v, p);
  }
  throw LimitExceeded("psi order exceeds " + std::to_string(bound));
}

OrbitSurvey survey_orbits(std::uint32_t p, int n, std::uint64_t samples, std::uint64_t seed, bool exhaustive,
                          std::uint64_t step_limit) {
  const std::uint64_t space = checked_space_size(p, n);
  std::uint64_t total = samples;
  if (exhaustive) {
    total = 1;
    for (std::uint64_t i = 0; i < space; ++i) {
      total *= p;
      if (total > (std::uint64_t{1} << 20)) throw LimitExceeded("exhaustive orbit survey limited to 2^20 polynomials");
    }
  }
  OrbitSurvey out{p, n, seed, total, exhaustive, {}, 0, 0, 0};
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (std::uint64_t s = 0; s < total; ++s) {
    FuncPoly f(p, n);
    if (exhaustive) {
      std::uint64_t code = s;
      for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = static_cast<Residue>(code % p);
        code /= p;
      }
    } else {
      f = random_func_poly(p, n, derive_seed(seed, s));
    }
    const Period period = find_period_phi(f, step_limit);
    ++histogram[period.cycle];
    out.max_tail = std::max(out.max_tail, period.tail);
    if (period.cycle % 2 == 1) ++out.odd_cycles;
    const auto cycle = phi_cycle(f, period);
    if (std::any_of(cycle.begin(), cycle.end(), [](const FuncPoly& g) { return g.is_zero(); })) ++out.through_zero;
  }
  out.cycle_histogram.assign(histogram.begin(), histogram.end());
  return out;
}

Phi2Report phi2_multilinear_check(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1 || n > 20) throw InvalidArgument("phi2_multilinear_check supports 1 ≤ n ≤ 20");
  const std::size_t size = std::size_t{1} << n;
  const bool exhaustive = n <= 4;
  const std::uint64_t total = exhaustive ? (std::uint64_t{1} << size) : samples;
  const FuncPoly all = sum_of_all_monomials(2, n);
  Phi2Report out{n, total, exhaustive, true, true, true, {}};
  std::vector<bool> seen(exhaustive ? total : 0, false);
  auto code_of = [size](const FuncPoly& g) {
    std::uint64_t code = 0;
    for (std::size_t i = 0; i < size; ++i) code |= std::uint64_t{g[i]} << i;
    return code;
  };
  for (std::uint64_t s = 0; s < total; ++s) {
    FuncPoly f(2, n);
    if (exhaustive) {
      for (std::size_t i = 0; i < size; ++i) f[i] = static_cast<Residue>((s >> i) & 1);
    } else {
      f = random_func_poly(2, n, derive_seed(seed, s));
    }
    const FuncPoly f1 = phi(f);
    FuncPoly rhs = psi(f);
    for (std::size_t i = 0; i < size; ++i) rhs[i] ^= all[i];
    if (!(f1 == rhs) && out.failures.size() < 10) out.failures.push_back("psi relation fails for " + to_string(f));
    out.psi_relation = out.psi_relation && f1 == rhs;
    const FuncPoly f4 = phi(phi(phi(f1)));
    if (!(f4 == f) && out.failures.size() < 10) out.failures.push_back("phi^4 differs from identity at " + to_string(f));
    out.period_four = out.period_four && f4 == f;
    if (exhaustive) {
      const auto code = code_of(f1);
      if (seen[code]) {
        out.bijective = false;
        if (out.failures.size() < 10) out.failures.push_back("phi not injective: repeated image " + to_string(f1));
      }
      seen[code] = true;
    }
  }
  if (!exhaustive) out.bijective = out.period_four;
  return out;
}

FuncPoly parse_func_poly(std::string_view text, std::uint32_t p, int n) {
  const PrimeField F(p);
  FuncPoly out(p, n);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw InvalidArgument("empty polynomial");
  auto fail = [&](const std::string& why) { throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "': " + why); };
  auto parse_var = [&](std::size_t& pos) -> int {
    if (s[pos] == 'x' && pos + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[pos + 1]))) {
      ++pos;
      int idx = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) idx = idx * 10 + (s[pos++] - '0');
      if (idx < 1 || idx > n) fail("variable index out of range");
      return idx - 1;
    }
    static constexpr std::string_view kNames = "xyzw";
    const auto k = kNames.find(s[pos]);
    if (k == std::string_view::npos || (n > 1 && static_cast<int>(k) >= n) || (n == 1 && k != 0)) fail("unknown variable");
    ++pos;
    return static_cast<int>(k);
  };
  auto parse_int = [&](std::size_t& pos) -> long long {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected an integer");
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      if (v > 100'000'000'000'000'000LL) fail("integer too large");
      v = v * 10 + (s[pos++] - '0');
    }
    return v;
  };
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    Residue coeff = 1;
    std::vector<long long> exps(n, 0);
    bool any = false;
    while (pos < s.size() && s[pos] != '+' && s[pos] != '-') {
      if (any) {
        if (s[pos] != '*') fail("expected '*'");
        ++pos;
      }
      if (pos >= s.size()) fail("dangling '*'");
      if (std::isdigit(static_cast<unsigned char>(s[pos]))) {
        coeff = F.mul(coeff, F.from_int(parse_int(pos)));
      } else {
        const int v = parse_var(pos);
        long long e = 1;
        if (pos < s.size() && s[pos] == '^') {
          ++pos;
          e = parse_int(pos);
        }
        exps[v] += e;
      }
      any = true;
    }
    if (!any) fail("empty term");
    std::vector<int> reduced(n);
    for (int i = 0; i < n; ++i) reduced[i] = reduce_exponent(exps[i], p);
    const std::size_t idx = flat_index(reduced, p);
    out[idx] = negative ? F.sub(out[idx], coeff) : F.add(out[idx], coeff);
  }
  return out;
}

std::string to_string(const FuncPoly& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    const auto e = unflatten(i, f.prime(), f.num_vars());
    std::string mono;
    for (int v = 0; v < f.num_vars(); ++v) {
      if (e[v] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += f.num_vars() == 1 ? "x" : "x" + std::to_string(v + 1);
      if (e[v] > 1) mono += "^" + std::to_string(e[v]);
    }
    if (mono.empty()) os << f[i];
    else if (f[i] == 1) os << mono;
    else os << f[i] << '*' << mono;
  }
  return first ? "0" : os.str();
}

}  // namespace gfl::dynamics
