#include "gfl/lefschetz.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gfl/errors.hpp"
#include "gfl/parallel.hpp"
#include "gfl/random.hpp"

namespace gfl::lefschetz {

using hilbert::GradedSpan;
using hilbert::IdealSpec;

MapRank multiplication_rank(const GradedSpan& span, const Form& multiplier, int i) {
  const int e = multiplier.degree();
  const int n = span.num_vars();
  if (i < 0 || i + e > span.dmax()) throw InvalidArgument("multiplication_rank: degree out of range");
  if (multiplier.num_vars() != n || !(multiplier.field() == span.field())) {
    throw InvalidArgument("multiplication_rank: multiplier lives in a different ring");
  }
  const int t = i + e;
  MapRank out{0, monomial_count(n, i) - span.dim(i), monomial_count(n, t) - span.dim(t)};
  const std::size_t cap = std::min(out.dim_source, out.dim_target);
  if (cap == 0 || multiplier.is_zero()) return out;
  EchelonBasis basis = span.piece(t);
  const std::size_t base = basis.rank();
  for (const auto& m : monomial_basis(n, i)) {
    const Form image = mul(multiplier, Form::monomial(span.field(), m));
    const auto c = image.coefficients();
    basis.insert(Row(c.begin(), c.end()));
    if (basis.rank() - base == cap) break;
  }
  out.rank = basis.rank() - base;
  return out;
}

MapRank multiplication_rank(const IdealSpec& spec, const Form& multiplier, int i, int dmax_span) {
  const auto gens = hilbert::expand_spec(spec);
  return multiplication_rank(GradedSpan(PrimeField(spec.prime), spec.n, dmax_span, gens), multiplier, i);
}

int top_degree(const IdealSpec& spec, int search_cap) {
  const auto gens = hilbert::expand_spec(spec);
  for (int window = std::min(16, search_cap);; window = std::min(2 * window, search_cap)) {
    const GradedSpan span(PrimeField(spec.prime), spec.n, window, gens);
    const auto hf = hilbert::hilbert_function(span);
    for (int d = 0; d <= window; ++d) {
      if (hf[d] == 0) return d - 1;
    }
    if (window == search_cap) break;
  }
  throw InvalidArgument("quotient is not Artinian below degree " + std::to_string(search_cap) +
                        "; pass dmax explicitly");
}

namespace {

constexpr std::uint64_t kMultiplierStream = 0x4C45465343484554ull;

// multipliers(trial, prime): one multiplier per map family, in a fixed order.
using MultiplierFactory = std::function<std::vector<Form>(int trial, std::uint32_t prime)>;

LefschetzVerdict run_maps(const IdealSpec& spec, std::string property, std::optional<int> dmax_opt, int trials,
                          std::span<const std::uint32_t> primes, const std::vector<int>& family_powers,
                          const MultiplierFactory& multipliers) {
  if (trials < 1) throw InvalidArgument("Lefschetz test: trials must be at least 1");
  if (primes.empty()) throw InvalidArgument("Lefschetz test: at least one prime is required");
  IdealSpec first = spec;
  first.prime = primes.front();
  const int dmax = dmax_opt ? *dmax_opt : top_degree(first);
  if (dmax < 0) throw InvalidArgument("Lefschetz test: dmax must be non-negative");
  const int max_e = *std::max_element(family_powers.begin(), family_powers.end());

  // Per prime: records indexed [family][i].
  struct PrimeTable {
    std::vector<std::vector<MapRank>> best;
  };
  const auto tables = parallel_map(primes.size(), [&](std::size_t pi) {
    IdealSpec instance = spec;
    instance.prime = primes[pi];
    const auto gens = hilbert::expand_spec(instance);
    const GradedSpan span(PrimeField(instance.prime), spec.n, dmax + max_e, gens);
    PrimeTable table;
    table.best.assign(family_powers.size(), {});
    for (std::size_t fam = 0; fam < family_powers.size(); ++fam) {
      for (int i = 0; i <= dmax; ++i) {
        table.best[fam].push_back(MapRank{0, monomial_count(spec.n, i) - span.dim(i),
                                          monomial_count(spec.n, i + family_powers[fam]) -
                                              span.dim(i + family_powers[fam])});
      }
    }
    for (int trial = 0; trial < trials; ++trial) {
      const auto forms = multipliers(trial, instance.prime);
      for (std::size_t fam = 0; fam < forms.size(); ++fam) {
        for (int i = 0; i <= dmax; ++i) {
          auto& best = table.best[fam][i];
          if (best.dim_source == 0 || best.maximal()) continue;
          best.rank = std::max(best.rank, multiplication_rank(span, forms[fam], i).rank);
        }
      }
    }
    return table;
  });

  LefschetzVerdict v{std::move(property), {}, true, {primes.begin(), primes.end()}, spec.seed, trials, dmax};
  for (std::size_t fam = 0; fam < family_powers.size(); ++fam) {
    for (int i = 0; i <= dmax; ++i) {
      const MapRank& head = tables.front().best[fam][i];
      if (head.dim_source == 0) continue;
      MapRecord rec{i, i + family_powers[fam], family_powers[fam], head.dim_source, head.dim_target, 0, false, {}};
      for (std::size_t pi = 0; pi < primes.size(); ++pi) {
        const MapRank& r = tables[pi].best[fam][i];
        rec.per_prime.push_back({primes[pi], r.rank, r.maximal()});
        rec.best_rank = std::max(rec.best_rank, r.rank);
        rec.maximal = rec.maximal || r.maximal();
      }
      v.holds = v.holds && rec.maximal;
      v.maps.push_back(std::move(rec));
    }
  }
  return v;
}

Form random_linear(int n, std::uint64_t seed, std::uint64_t trial, std::uint64_t part, std::uint32_t p) {
  return random_form(n, 1, derive_seed(derive_seed(seed ^ kMultiplierStream, trial), part), p);
}

}  // namespace

LefschetzVerdict wlp_test(const IdealSpec& spec, std::optional<int> dmax, int trials,
                          std::span<const std::uint32_t> primes) {
  return run_maps(spec, "WLP", dmax, trials, primes, {1}, [&](int trial, std::uint32_t p) {
    return std::vector<Form>{random_linear(spec.n, spec.seed, trial, 0, p)};
  });
}

LefschetzVerdict slp_test(const IdealSpec& spec, std::optional<int> dmax, int kmax, int trials,
                          std::span<const std::uint32_t> primes) {
  if (kmax < 1) throw InvalidArgument("slp_test: kmax must be at least 1");
  std::vector<int> powers(kmax);
  std::iota(powers.begin(), powers.end(), 1);
  return run_maps(spec, "SLP(kmax=" + std::to_string(kmax) + ")", dmax, trials, primes, powers,
                  [&](int trial, std::uint32_t p) {
                    const Form l = random_linear(spec.n, spec.seed, trial, 0, p);
                    std::vector<Form> out{l};
                    for (int k = 2; k <= kmax; ++k) out.push_back(mul(out.back(), l));
                    return out;
                  });
}

LefschetzVerdict mu_lefschetz_test(const IdealSpec& spec, std::span<const int> mu, std::optional<int> dmax,
                                   int trials, std::span<const std::uint32_t> primes) {
  hilbert::validate_partition(mu);
  const int d = std::accumulate(mu.begin(), mu.end(), 0);
  std::ostringstream name;
  name << "mu-Lefschetz(";
  for (std::size_t j = 0; j < mu.size(); ++j) name << (j ? "," : "") << mu[j];
  name << ")";
  const std::vector<int> parts(mu.begin(), mu.end());
  return run_maps(spec, name.str(), dmax, trials, primes, {d}, [&, parts](int trial, std::uint32_t p) {
    std::optional<Form> product;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const Form factor = power(random_linear(spec.n, spec.seed, trial, j, p), parts[j]);
      product = product ? mul(*product, factor) : factor;
    }
    return std::vector<Form>{*product};
  });
}

}  // namespace gfl::lefschetz
