#include "gfl/hilbert.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "gfl/errors.hpp"
#include "gfl/parallel.hpp"
#include "gfl/random.hpp"

namespace gfl::hilbert {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::atomic<std::uint64_t> g_lex_checks{0};

void require_positive(int v, const char* what) {
  if (v <= 0) throw InvalidArgument(std::string(what) + " must be positive");
}

void require_positive(std::span<const int> vs, const char* what) {
  for (int v : vs) require_positive(v, what);
}

Form pure_power(PrimeField field, int n, int i, int e) {
  Exponents x(n, 0);
  x[i] = e;
  return Form::monomial(field, x);
}

}  // namespace

std::string recipe_name(const Recipe& recipe) {
  return std::visit(overloaded{
                        [](const ExplicitGenerators&) { return std::string("explicit"); },
                        [](const GenericForms&) { return std::string("generic"); },
                        [](const PowerIdeal&) { return std::string("power"); },
                        [](const MuPowerIdeal&) { return std::string("mu-power"); },
                        [](const PowersOfForms&) { return std::string("nicklasson"); },
                        [](const StanleyWitness&) { return std::string("stanley"); },
                        [](const GottliebWitness&) { return std::string("gottlieb"); },
                        [](const MonomialCompleteIntersection&) { return std::string("monomial-ci"); },
                        [](const PowerOfMonomialCI&) { return std::string("tndk"); },
                    },
                    recipe);
}

void validate_partition(std::span<const int> mu) {
  if (mu.empty()) throw InvalidArgument("partition must have at least one part");
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0) throw InvalidArgument("partition parts must be positive");
    if (i > 0 && mu[i] > mu[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
}

std::vector<int> generator_degrees(const IdealSpec& spec) {
  const int n = spec.n;
  return std::visit(
      overloaded{
          [](const ExplicitGenerators& r) {
            std::vector<int> out;
            for (const auto& g : r.gens) out.push_back(g.degree());
            return out;
          },
          [](const GenericForms& r) { return r.degrees; },
          [](const PowerIdeal& r) { return std::vector<int>(std::max(r.r, 0), r.d); },
          [](const MuPowerIdeal& r) {
            return std::vector<int>(std::max(r.r, 0), std::accumulate(r.mu.begin(), r.mu.end(), 0));
          },
          [](const PowersOfForms& r) { return std::vector<int>(std::max(r.r, 0), r.d * r.k); },
          [](const StanleyWitness& r) { return r.degrees; },
          [](const GottliebWitness& r) { return r.degrees; },
          [](const MonomialCompleteIntersection& r) { return r.degrees; },
          [n](const PowerOfMonomialCI& r) {
            return std::vector<int>(monomial_count(n, r.k), r.d * r.k);
          },
      },
      spec.recipe);
}

std::vector<Form> expand_spec(const IdealSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw InvalidArgument("IdealSpec: n must be positive");
  const PrimeField field(spec.prime);
  const std::uint32_t p = spec.prime;
  auto draw = [&](std::uint64_t index, int degree) {
    return random_form(n, degree, derive_seed(spec.seed, index), p);
  };

  return std::visit(
      overloaded{
          [&](const ExplicitGenerators& r) {
            for (const auto& g : r.gens) {
              if (g.num_vars() != n || !(g.field() == field)) {
                throw InvalidArgument("explicit generator lives in a different ring");
              }
            }
            return r.gens;
          },
          [&](const GenericForms& r) {
            require_positive(r.degrees, "generator degree");
            std::vector<Form> gens;
            for (std::size_t i = 0; i < r.degrees.size(); ++i) gens.push_back(draw(i, r.degrees[i]));
            return gens;
          },
          [&](const PowerIdeal& r) {
            require_positive(r.r, "r");
            require_positive(r.d, "power d");
            std::vector<Form> gens;
            for (int i = 0; i < r.r; ++i) gens.push_back(power(draw(i, 1), r.d));
            return gens;
          },
          [&](const MuPowerIdeal& r) {
            require_positive(r.r, "r");
            validate_partition(r.mu);
            std::vector<Form> gens;
            const std::size_t parts = r.mu.size();
            for (int i = 0; i < r.r; ++i) {
              std::optional<Form> g;
              for (std::size_t j = 0; j < parts; ++j) {
                Form factor = power(draw(i * parts + j, 1), r.mu[j]);
                g = g ? mul(*g, factor) : factor;
              }
              gens.push_back(*g);
            }
            return gens;
          },
          [&](const PowersOfForms& r) {
            require_positive(r.r, "r");
            require_positive(r.d, "inner degree d");
            require_positive(r.k, "power k");
            std::vector<Form> gens;
            for (int i = 0; i < r.r; ++i) gens.push_back(power(draw(i, r.d), r.k));
            return gens;
          },
          [&](const StanleyWitness& r) {
            if (static_cast<int>(r.degrees.size()) != n + 1) {
              throw InvalidArgument("Stanley witness needs n+1 degrees");
            }
            require_positive(r.degrees, "generator degree");
            std::vector<Form> gens;
            Form sum(field, n, 1);
            for (int i = 0; i < n; ++i) {
              gens.push_back(pure_power(field, n, i, r.degrees[i]));
              sum += Form::variable(field, n, i);
            }
            gens.push_back(power(sum, r.degrees[n]));
            return gens;
          },
          [&](const GottliebWitness& r) {
            if (static_cast<int>(r.degrees.size()) != n + 1) {
              throw InvalidArgument("Gottlieb witness needs n+1 degrees");
            }
            require_positive(r.degrees, "generator degree");
            std::vector<Form> gens;
            for (int i = 0; i < n; ++i) gens.push_back(pure_power(field, n, i, r.degrees[i]));
            const int d = r.degrees[n];
            gens.emplace_back(field, n, d, std::vector<Residue>(monomial_count(n, d), 1));
            return gens;
          },
          [&](const MonomialCompleteIntersection& r) {
            if (static_cast<int>(r.degrees.size()) != n) {
              throw InvalidArgument("monomial complete intersection needs n degrees");
            }
            require_positive(r.degrees, "generator degree");
            std::vector<Form> gens;
            for (int i = 0; i < n; ++i) gens.push_back(pure_power(field, n, i, r.degrees[i]));
            return gens;
          },
          [&](const PowerOfMonomialCI& r) {
            require_positive(r.d, "d");
            require_positive(r.k, "k");
            // Products of k of the x_i^d are exactly the monomials x^{d*a} with |a| = k.
            std::vector<Form> gens;
            for (auto a : monomial_basis(n, r.k)) {
              for (int& x : a) x *= r.d;
              gens.push_back(Form::monomial(field, a));
            }
            return gens;
          },
      },
      spec.recipe);
}

GradedSpan::GradedSpan(PrimeField field, int n, int dmax, std::span<const Form> gens) : field_(field), n_(n) {
  if (n < 1) throw InvalidArgument("graded_span: n must be positive");
  if (dmax < 0) throw InvalidArgument("graded_span: dmax must be non-negative");
  for (const auto& g : gens) {
    if (g.num_vars() != n || !(g.field() == field)) {
      throw InvalidArgument("graded_span: generators live in different rings");
    }
  }
  pieces_.reserve(dmax + 1);
  for (int d = 0; d <= dmax; ++d) {
    const std::size_t width = monomial_count(n, d);
    if (d > 0 && pieces_.back().full()) {
      pieces_.push_back(EchelonBasis::full_space(field, width));
      continue;
    }
    EchelonBasis basis(field, width);
    {
      if (d > 0) {
        const auto& prev = pieces_.back();
        const auto& table = monomial_table(n, d - 1);
        for (const Row& row : prev.rows()) {
          for (int i = 0; i < n && !basis.full(); ++i) {
            const auto& shift = table.times_variable(i);
            Row shifted(width, 0);
            for (std::size_t c = 0; c < row.size(); ++c) shifted[shift[c]] = row[c];
            basis.insert(std::move(shifted));
          }
          if (basis.full()) break;
        }
      }
      for (const auto& g : gens) {
        if (g.degree() != d || basis.full()) continue;
        const auto c = g.coefficients();
        basis.insert(Row(c.begin(), c.end()));
      }
    }
    pieces_.push_back(std::move(basis));
  }
}

std::vector<std::size_t> GradedSpan::dims() const {
  std::vector<std::size_t> out;
  for (const auto& p : pieces_) out.push_back(p.rank());
  return out;
}

GradedSpan graded_span(std::span<const Form> gens, int dmax) {
  if (gens.empty()) throw InvalidArgument("graded_span: ring unknown for an empty generator list");
  return GradedSpan(gens.front().field(), gens.front().num_vars(), dmax, gens);
}

GradedSpan graded_span(PrimeField field, int n, std::span<const Form> gens, int dmax) {
  return GradedSpan(field, n, dmax, gens);
}

std::vector<std::uint64_t> hilbert_function(const GradedSpan& span) {
  std::vector<std::uint64_t> hf;
  for (int d = 0; d <= span.dmax(); ++d) hf.push_back(monomial_count(span.num_vars(), d) - span.dim(d));
  return hf;
}

std::vector<std::uint64_t> hilbert_function(const IdealSpec& spec, int dmax) {
  const auto gens = expand_spec(spec);
  auto hf = hilbert_function(GradedSpan(PrimeField(spec.prime), spec.n, dmax, gens));
  check_lex_minimality(spec.n, generator_degrees(spec), hf);
  return hf;
}

IntSeries froberg_series(int n, std::span<const int> degrees, int cap) {
  return truncate_plus(series_from_product(n, degrees, cap));
}

int default_dmax(int n, std::span<const int> degrees) {
  constexpr int kSearch = 200;
  const auto s = froberg_series(n, degrees, kSearch);
  for (int i = 0; i <= kSearch; ++i) {
    if (s[i] == 0) return i + 2;
  }
  return std::max(12, std::accumulate(degrees.begin(), degrees.end(), 0));
}

void check_lex_minimality(int n, std::span<const int> degrees, std::span<const std::uint64_t> observed) {
  ++g_lex_checks;
  if (observed.empty()) return;
  const auto conj = froberg_series(n, degrees, static_cast<int>(observed.size()) - 1);
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const BigInt actual = observed[i];
    if (actual == conj[static_cast<int>(i)]) continue;
    if (actual > conj[static_cast<int>(i)]) return;
    std::ostringstream msg;
    msg << "observed Hilbert function is lexicographically smaller than the Froberg series at degree " << i
        << " (observed " << observed[i] << ", series " << conj[static_cast<int>(i)] << ")";
    throw InvariantViolation(msg.str());
  }
}

std::uint64_t lex_checks_performed() { return g_lex_checks.load(); }

FrobergComparison compare_to_froberg(const IdealSpec& spec, int dmax, int trials,
                                     std::span<const std::uint32_t> primes) {
  if (trials < 1) throw InvalidArgument("compare_to_froberg: trials must be at least 1");
  if (primes.empty()) throw InvalidArgument("compare_to_froberg: at least one prime is required");
  FrobergComparison out;
  out.n = spec.n;
  out.recipe = recipe_name(spec.recipe);
  out.degrees = generator_degrees(spec);
  out.dmax = dmax;
  const auto conj = froberg_series(spec.n, out.degrees, dmax);
  for (int i = 0; i <= dmax; ++i) out.conjectured.push_back(static_cast<std::uint64_t>(conj[i]));

  const std::size_t jobs = static_cast<std::size_t>(trials) * primes.size();
  out.runs = parallel_map(jobs, [&](std::size_t job) {
    IdealSpec instance = spec;
    instance.seed = derive_seed(spec.seed, job / primes.size());
    instance.prime = primes[job % primes.size()];
    HilbertRun run{instance.prime, instance.seed, hilbert_function(instance, dmax), {}};
    for (int i = 0; i <= dmax; ++i) {
      if (run.actual[i] != out.conjectured[i]) run.deviating_degrees.push_back(i);
    }
    return run;
  });
  std::set<int> all;
  for (const auto& run : out.runs) all.insert(run.deviating_degrees.begin(), run.deviating_degrees.end());
  out.deviating_degrees.assign(all.begin(), all.end());
  return out;
}

}  // namespace gfl::hilbert
