#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gfl/dynamics.hpp"
#include "gfl/errors.hpp"
#include "gfl/exterior.hpp"
#include "gfl/hilbert.hpp"
#include "gfl/lefschetz.hpp"
#include "gfl/points.hpp"
#include "gfl/random.hpp"
#include "gfl/semigroup.hpp"
#include "gfl/waring.hpp"

namespace gfl::cli {

namespace {

using json = nlohmann::ordered_json;

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(v);
  }
  return v.str();
}

struct Table {
  std::vector<std::string> columns;
  std::vector<json> rows;
  void add(json row) { rows.push_back(std::move(row)); }
};

struct Report {
  std::string command;
  json params = json::object();
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, Table>> tables;
  std::string verdict = "HOLDS";
  json deviations = json::array();
  json result = json::object();

  Table& table(const std::string& name, std::vector<std::string> columns) {
    tables.emplace_back(name, Table{std::move(columns), {}});
    return tables.back().second;
  }

  json to_json() const {
    json j;
    j["schema"] = 1;
    j["command"] = command;
    j["params"] = params;
    j["primes"] = primes;
    j["seed"] = seed;
    json t = json::object();
    for (const auto& [name, table] : tables) t[name] = {{"columns", table.columns}, {"rows", table.rows}};
    j["tables"] = std::move(t);
    j["verdict"] = verdict;
    j["deviations"] = deviations;
    j["result"] = result;
    return j;
  }
};

std::string csv_cell(const json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

void write_csv(const Report& r, std::ostream& out) {
  out << "# command: " << r.command << "\n# verdict: " << r.verdict << "\n";
  for (const auto& [name, table] : r.tables) {
    out << "# table: " << name << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << csv_cell(table.columns[i]);
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
  }
}

// Storage for every flag; only the options registered on the chosen leaf are ever set.
struct Options {
  std::uint32_t prime = 0;
  std::vector<std::uint32_t> primes;
  std::uint64_t seed = 0;
  int trials = 1;
  std::string format = "json";
  int dmax = -1;
  bool timing = false;

  int n = 0;
  std::vector<int> degrees;
  int r = 0;
  int d = 0;
  int k = 0;
  std::vector<int> mu;
  std::vector<int> ideal_mu;
  std::string recipe = "generic";
  int kmax = 0;
  int s = 0;
  int m = 1;
  std::vector<int> exponents;
  std::vector<int> dims;
  std::vector<int> multidegree;
  std::string points_file;
  int imax = -1;
  int smax = -1;
  std::uint32_t p = 0;
  std::string f;
  std::uint64_t samples = 0;
  bool exhaustive = false;
  std::uint64_t step_limit = 1'000'000;
  std::vector<std::int64_t> generators;
  int max_generator = 12;
  int max_count = 4;
};

std::vector<std::uint32_t> resolve_primes(const Options& o, const CLI::App* leaf) {
  if (!leaf->get_option_no_throw("--primes")) return {};
  const bool single = leaf->get_option_no_throw("--prime") && leaf->get_option("--prime")->count() > 0;
  const bool list = leaf->get_option_no_throw("--primes") && leaf->get_option("--primes")->count() > 0;
  if (single && list) throw InvalidArgument("--prime and --primes are mutually exclusive");
  std::vector<std::uint32_t> out;
  if (single) out = {o.prime};
  else if (list) out = o.primes;
  else out.assign(std::begin(kDefaultPrimes), std::end(kDefaultPrimes));
  for (auto p : out) PrimeField{p};
  return out;
}

json echo_params(const CLI::App* leaf) {
  json params = json::object();
  for (const CLI::Option* opt : leaf->get_options()) {
    const std::string name = opt->get_single_name();
    // Primes and seed are echoed at the top level of the report.
    if (name == "help" || name.empty() || name == "prime" || name == "primes" || name == "seed") continue;
    if (opt->count() > 0) {
      const auto& res = opt->results();
      if (opt->get_type_size() == 0) {
        params[name] = true;
      } else if (res.size() == 1) {
        params[name] = res.front();
      } else {
        std::string joined;
        for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
        params[name] = joined;
      }
    } else {
      // 0, -1 and {} are "unset" markers for options shared between recipes.
      const std::string def = opt->get_default_str();
      if (!def.empty() && def != "0" && def != "-1" && def != "{}") params[name] = def;
    }
  }
  return params;
}

// --- hilbert ---------------------------------------------------------------------------

hilbert::IdealSpec make_spec(const std::string& recipe, const Options& o, std::span<const int> mu,
                             std::uint32_t prime) {
  if (o.n < 1) throw InvalidArgument("--n must be positive");
  hilbert::IdealSpec spec{o.n, hilbert::GenericForms{}, o.seed, prime};
  if (recipe == "generic") spec.recipe = hilbert::GenericForms{o.degrees};
  else if (recipe == "power") spec.recipe = hilbert::PowerIdeal{o.r, o.d};
  else if (recipe == "mu-power") spec.recipe = hilbert::MuPowerIdeal{o.r, std::vector<int>(mu.begin(), mu.end())};
  else if (recipe == "nicklasson") spec.recipe = hilbert::PowersOfForms{o.r, o.d, o.k};
  else if (recipe == "stanley") spec.recipe = hilbert::StanleyWitness{o.degrees};
  else if (recipe == "gottlieb") spec.recipe = hilbert::GottliebWitness{o.degrees};
  else if (recipe == "monomial-ci") spec.recipe = hilbert::MonomialCompleteIntersection{o.degrees};
  else if (recipe == "tndk") spec.recipe = hilbert::PowerOfMonomialCI{o.d, o.k};
  else throw InvalidArgument("unknown recipe '" + recipe + "'");
  hilbert::generator_degrees(spec);  // validates the shape
  return spec;
}

void hilbert_report(Report& rep, const Options& o, const std::string& recipe) {
  const auto spec = make_spec(recipe, o, o.mu, rep.primes.front());
  const auto degs = hilbert::generator_degrees(spec);
  const int dmax = o.dmax >= 0 ? o.dmax : hilbert::default_dmax(o.n, degs);
  if (o.trials < 1) throw InvalidArgument("--trials must be positive");
  const auto cmp = hilbert::compare_to_froberg(spec, dmax, o.trials, rep.primes);
  std::vector<std::string> cols{"degree", "expected"};
  for (std::size_t i = 0; i < cmp.runs.size(); ++i) {
    cols.push_back("t" + std::to_string(i / rep.primes.size()) + "_p" + std::to_string(cmp.runs[i].prime));
  }
  auto& t = rep.table("hilbert_function", cols);
  for (int d = 0; d <= dmax; ++d) {
    json row = json::array({d, cmp.conjectured[d]});
    for (const auto& run : cmp.runs) row.push_back(run.actual[d]);
    t.add(std::move(row));
  }
  for (int d : cmp.deviating_degrees) {
    json observed = json::array();
    for (const auto& run : cmp.runs) observed.push_back(run.actual[d]);
    rep.deviations.push_back({{"degree", d}, {"expected", cmp.conjectured[d]}, {"observed", observed}});
  }
  rep.verdict = cmp.match() ? "MATCH" : "DEVIATES";
  rep.result = {{"recipe", cmp.recipe}, {"generator_degrees", cmp.degrees}, {"dmax", dmax},
                {"deviating_degrees", cmp.deviating_degrees}};
}

// --- waring ----------------------------------------------------------------------------

void waring_generic_rank(Report& rep, const Options& o) {
  const auto v = waring::generic_rank(o.k, o.n);
  rep.table("generic_rank", {"k", "n", "rank"}).add(json::array({o.k, o.n, big(v)}));
  rep.result = {{"generic_rank", big(v)}};
}

void waring_k_rank(Report& rep, const Options& o) {
  const waring::RankQuery q{o.k, o.d, o.n};
  const auto bounds = waring::k_rank_bounds(q);
  const auto conj = waring::conjectured_k_rank(q);
  const int search = o.dmax >= 0 ? o.dmax : 30;
  const auto th = waring::d_threshold(o.k, o.n, search);
  auto& t = rep.table("conjectured_k_rank", {"d", "lower", "conjectured", "upper"});
  bool within = true;
  for (int d = 1; d <= search; ++d) {
    const waring::RankQuery qd{o.k, d, o.n};
    const auto b = waring::k_rank_bounds(qd);
    const auto c = waring::conjectured_k_rank(qd);
    t.add(json::array({d, big(b.lower), big(c), big(b.upper)}));
    if (c > b.upper) {
      within = false;
      rep.deviations.push_back({{"d", d}, {"conjectured", big(c)}, {"upper", big(b.upper)}});
    }
  }
  rep.verdict = within && conj <= bounds.upper ? "HOLDS" : "FINDING";
  rep.result = {{"lower", big(bounds.lower)},
                {"upper", big(bounds.upper)},
                {"conjectured", big(conj)},
                {"limit", big(th.limit)},
                {"threshold_d0", th.d0 ? json(*th.d0) : json(nullptr)}};
}

void waring_monomial(Report& rep, const Options& o) {
  const auto q = waring::MonomialQuery::from_exponents(o.exponents);
  const int k = o.k > 0 ? o.k : 2;
  const auto rank = waring::monomial_rank(q);
  const auto upper = waring::monomial_krank_upper(q, k);
  rep.result = {{"exponents", q.exponents}, {"degree", q.degree()}, {"rank", big(rank)}};
  if (q.degree() % 2 == 0) rep.result["two_rank"] = waring::monomial_2rank(q);
  rep.result["k"] = k;
  rep.result["k_rank_upper"] = big(upper.value);
  rep.result["bounds_applied"] = upper.applied;
  auto& t = rep.table("monomial", {"quantity", "value"});
  t.add(json::array({"rank", big(rank)}));
  t.add(json::array({"k_rank_upper", big(upper.value)}));
}

void waring_perfect_pairs(Report& rep, const Options& o) {
  const int kmax = o.kmax > 0 ? o.kmax : 12;
  const int dmax = o.dmax >= 0 ? o.dmax : 12;
  auto& t = rep.table("perfect_pairs", {"k", "d", "j", "quotient"});
  json pairs = json::array();
  for (int k = 2; k <= kmax; ++k) {
    for (int d = 1; d <= dmax; ++d) {
      if (auto pp = waring::perfect_pair(k, d)) {
        t.add(json::array({k, d, pp->j, pp->quotient}));
        pairs.push_back(json::array({k, d}));
      }
    }
  }
  rep.result = {{"count", pairs.size()}, {"pairs", pairs}};
}

void waring_secant(Report& rep, const Options& o) {
  if (o.k < 2) throw InvalidArgument("--k must be at least 2");
  const waring::RankQuery q{o.k, o.d, o.n};
  const BigInt expected = o.d == 1 ? waring::generic_rank(o.k, o.n) : waring::conjectured_k_rank(q);
  std::vector<waring::ExperimentalRank> runs;
  for (auto p : rep.primes) runs.push_back(waring::experimental_k_rank(q, o.seed, p));
  std::vector<std::string> cols{"s"};
  for (auto p : rep.primes) cols.push_back("p" + std::to_string(p));
  auto& t = rep.table("secant_dimension", cols);
  std::size_t longest = 0;
  for (const auto& r : runs) longest = std::max(longest, r.dimensions.size());
  for (std::size_t s = 0; s < longest; ++s) {
    json row = json::array({s + 1});
    for (const auto& r : runs) row.push_back(s < r.dimensions.size() ? json(r.dimensions[s]) : json(r.ambient));
    t.add(std::move(row));
  }
  json ranks = json::array();
  bool match = true;
  for (std::size_t i = 0; i < runs.size(); ++i) {
    ranks.push_back(runs[i].rank);
    if (BigInt(runs[i].rank) != expected) {
      match = false;
      rep.deviations.push_back({{"prime", rep.primes[i]}, {"experimental", runs[i].rank}, {"expected", big(expected)}});
    }
  }
  rep.verdict = match ? "MATCH" : "DEVIATES";
  rep.result = {{"ambient", runs.front().ambient}, {"experimental_rank", ranks}, {"expected", big(expected)},
                {"expected_source", o.d == 1 ? "generic_rank" : "conjectured_k_rank"}};
}

void waring_max_rank(Report& rep, const Options& o) {
  const auto f = waring::max_rank_facts(o.k, o.d, o.n);
  auto opt = [](const std::optional<BigInt>& v) { return v ? big(*v) : json(nullptr); };
  json registry = json::array();
  auto& t = rep.table("registry", {"statement", "value"});
  for (const auto& dp : f.registry) {
    registry.push_back({{"statement", dp.statement}, {"value", dp.value}});
    t.add(json::array({dp.statement, dp.value}));
  }
  rep.result = {{"known_exact", opt(f.known_exact)},
                {"upper_bound", opt(f.upper_bound)},
                {"generic_value", big(f.generic_value)},
                {"generic_conjectural", f.generic_conjectural},
                {"blekherman_teitler_bound", big(f.blekherman_teitler_bound)},
                {"conjectured_binary_max", opt(f.conjectured_binary_max)},
                {"registry", registry}};
}

// --- lefschetz -------------------------------------------------------------------------

void lefschetz_report(Report& rep, const Options& o, const std::string& property) {
  const auto spec = make_spec(o.recipe, o, o.ideal_mu, rep.primes.front());
  const std::optional<int> dmax = o.dmax >= 0 ? std::optional<int>(o.dmax) : std::nullopt;
  if (o.trials < 1) throw InvalidArgument("--trials must be positive");
  lefschetz::LefschetzVerdict v;
  if (property == "wlp") v = lefschetz::wlp_test(spec, dmax, o.trials, rep.primes);
  else if (property == "slp") v = lefschetz::slp_test(spec, dmax, o.kmax, o.trials, rep.primes);
  else v = lefschetz::mu_lefschetz_test(spec, o.mu, dmax, o.trials, rep.primes);
  auto& t = rep.table("maps", {"source_degree", "target_degree", "power", "dim_source", "dim_target", "best_rank",
                               "maximal"});
  for (const auto& m : v.maps) {
    t.add(json::array({m.source_degree, m.target_degree, m.power, m.dim_source, m.dim_target, m.best_rank, m.maximal}));
    if (!m.maximal) {
      rep.deviations.push_back({{"source_degree", m.source_degree}, {"target_degree", m.target_degree},
                                {"power", m.power}, {"rank", m.best_rank},
                                {"expected", std::min(m.dim_source, m.dim_target)}});
    }
  }
  rep.verdict = v.holds ? "HOLDS" : "FAILS";
  rep.result = {{"property", v.property}, {"holds", v.holds}, {"recipe", hilbert::recipe_name(spec.recipe)},
                {"dmax", v.dmax}};
}

// --- points ----------------------------------------------------------------------------

points::PointConfig load_config(const Options& o, std::uint32_t prime, std::vector<int> factor_dims) {
  if (!o.points_file.empty()) {
    std::ifstream in(o.points_file);
    if (!in) throw InvalidArgument("cannot read points file " + o.points_file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return points::parse_points(buffer.str(), PrimeField(prime));
  }
  if (o.s < 0) throw InvalidArgument("--s must be non-negative");
  return points::random_points(std::move(factor_dims), o.s, o.seed, prime);
}

points::PointConfig projective_config(const Options& o, std::uint32_t prime) {
  if (o.points_file.empty() && o.n < 1) throw InvalidArgument("--n (coordinates per point) must be positive");
  auto cfg = load_config(o, prime, {o.n});
  if (!cfg.is_projective()) throw InvalidArgument("this command needs points in a single projective space");
  return cfg;
}

json config_json(const points::PointConfig& cfg) {
  json pts = json::array();
  for (const auto& p : cfg.points) pts.push_back(p);
  return {{"factor_dims", cfg.factor_dims}, {"points", pts}};
}

void points_hf(Report& rep, const Options& o) {
  const int dmax = o.dmax >= 0 ? o.dmax : 10;
  std::vector<std::vector<std::size_t>> per_prime;
  std::vector<std::string> cols{"degree", "expected"};
  int n = 0;
  std::size_t s = 0;
  json configs = json::array();
  for (auto p : rep.primes) {
    const auto cfg = projective_config(o, p);
    n = cfg.num_vars();
    s = cfg.size();
    per_prime.push_back(points::symbolic_power_dims(cfg, o.m, dmax));
    cols.push_back("p" + std::to_string(p));
    configs.push_back(config_json(cfg));
  }
  auto& t = rep.table("hilbert_function", cols);
  for (int d = 0; d <= dmax; ++d) {
    const BigInt expected = points::expected_fat_hf(n, static_cast<int>(s), o.m, d);
    json row = json::array({d, big(expected)});
    bool dev = false;
    for (const auto& dims : per_prime) {
      const std::uint64_t hf = monomial_count(n, d) - dims[d];
      row.push_back(hf);
      dev = dev || BigInt(hf) != expected;
    }
    if (dev) rep.deviations.push_back({{"degree", d}, {"expected", big(expected)}});
    t.add(std::move(row));
  }
  rep.verdict = rep.deviations.empty() ? "MATCH" : "DEVIATES";
  rep.result = {{"n", n}, {"s", s}, {"m", o.m}, {"configurations", configs}};
}

void points_apolarity(Report& rep, const Options& o) {
  const auto cfg = projective_config(o, rep.primes.front());
  auto& t = rep.table("apolarity", {"d", "power_exponent", "vanishing_side", "power_ideal_side"});
  const int lo = o.d > 0 ? o.d : 0;
  const int hi = o.d > 0 ? o.d : (o.dmax >= 0 ? o.dmax : o.m);
  for (int d = lo; d <= hi; ++d) {
    const auto a = points::apolarity_check(cfg, o.m, d);
    t.add(json::array({d, a.power_exponent, a.vanishing_side, a.power_ideal_side}));
  }
  rep.result = {{"m", o.m}, {"configuration", config_json(cfg)}};
}

void points_defect(Report& rep, const Options& o) {
  const auto cfg = projective_config(o, rep.primes.front());
  const int dmax = o.dmax >= 0 ? o.dmax : 2 * o.m + 2;
  const auto d = points::symbolic_defect(cfg, o.m, dmax);
  auto& t = rep.table("new_generators", {"degree", "count"});
  for (std::size_t i = 0; i < d.per_degree.size(); ++i) t.add(json::array({i, d.per_degree[i]}));
  rep.result = {{"m", o.m}, {"defect", d.total}, {"stabilized", d.stabilized}, {"configuration", config_json(cfg)}};
}

void points_containment(Report& rep, const Options& o) {
  const auto cfg = projective_config(o, rep.primes.front());
  const int dmax = o.dmax >= 0 ? o.dmax : 12;
  const int r = o.r > 0 ? o.r : 1;
  const auto c = points::containment_check(cfg, o.m, r, dmax);
  auto& t = rep.table("containment", {"degree", "contained"});
  for (std::size_t i = 0; i < c.contained.size(); ++i) {
    t.add(json::array({i, static_cast<bool>(c.contained[i])}));
    if (!c.contained[i]) rep.deviations.push_back({{"degree", i}});
  }
  rep.verdict = c.first_failure ? "FAILS" : "HOLDS";
  rep.result = {{"m", o.m}, {"r", r}, {"first_failure", c.first_failure ? json(*c.first_failure) : json(nullptr)},
                {"configuration", config_json(cfg)}};
}

void points_multigraded(Report& rep, const Options& o) {
  if (o.points_file.empty() && o.dims.empty()) throw InvalidArgument("--dims is required without --points-file");
  const auto cfg = load_config(o, rep.primes.front(), o.dims);
  const auto v = points::multigraded_hf(cfg, o.m, o.multidegree);
  rep.table("multigraded", {"space_dim", "ideal_dim", "hf"}).add(json::array({v.space_dim, v.ideal_dim, v.hf}));
  rep.result = {{"multidegree", o.multidegree}, {"m", o.m}, {"space_dim", v.space_dim}, {"ideal_dim", v.ideal_dim},
                {"hf", v.hf}, {"configuration", config_json(cfg)}};
}

// --- exterior --------------------------------------------------------------------------

void exterior_series(Report& rep, const Options& o) {
  const int dmax = o.dmax >= 0 ? std::min(o.dmax, o.n) : o.n;
  const auto expected = exterior::expected_ext_series(o.n, o.d, dmax);
  std::vector<std::string> cols{"degree", "expected"};
  std::vector<std::vector<std::size_t>> runs;
  for (int trial = 0; trial < o.trials; ++trial) {
    for (auto p : rep.primes) {
      const std::vector<exterior::ExtForm> gens{exterior::random_ext_form(o.n, o.d, derive_seed(o.seed, trial), p)};
      runs.push_back(exterior::ext_quotient_dims(gens, dmax));
      cols.push_back("t" + std::to_string(trial) + "_p" + std::to_string(p));
    }
  }
  auto& t = rep.table("hilbert_function", cols);
  for (int i = 0; i <= dmax; ++i) {
    json row = json::array({i, big(expected[i])});
    bool dev = false;
    for (const auto& r : runs) {
      row.push_back(r[i]);
      dev = dev || BigInt(r[i]) != expected[i];
    }
    if (dev) rep.deviations.push_back({{"degree", i}, {"expected", big(expected[i])}});
    t.add(std::move(row));
  }
  rep.verdict = rep.deviations.empty() ? "MATCH" : "DEVIATES";
  rep.result = {{"expected_series", "[(1+t)^n (1-t^d)]_+"}, {"n", o.n}, {"d", o.d}};
}

void exterior_ann(Report& rep, const Options& o) {
  const int imax = o.imax >= 0 ? o.imax : o.n - o.d;
  std::vector<std::string> cols{"degree"};
  std::vector<std::vector<std::size_t>> ann;
  std::vector<std::vector<std::size_t>> ideal;
  for (auto p : rep.primes) {
    const auto f = exterior::random_ext_form(o.n, o.d, o.seed, p);
    ann.push_back(exterior::annihilator_dims(f, imax));
    ideal.push_back(exterior::principal_ideal_dims(f, imax));
    cols.push_back("ann_p" + std::to_string(p));
    cols.push_back("ideal_p" + std::to_string(p));
  }
  auto& t = rep.table("annihilator", cols);
  const std::size_t rows = ann.front().size();
  for (std::size_t i = 0; i < rows; ++i) {
    json row = json::array({i});
    bool candidate = false;
    for (std::size_t j = 0; j < ann.size(); ++j) {
      row.push_back(ann[j][i]);
      row.push_back(ideal[j][i]);
      if (o.d % 2 == 1 && ideal[j][i] > ann[j][i]) {
        throw InvariantViolation("(f)_" + std::to_string(i) + " exceeds Ann(f)_" + std::to_string(i));
      }
      // Problem range for odd d: i < (n - d) / 2.
      if (o.d % 2 == 1 && 2 * static_cast<int>(i) < o.n - o.d && ann[j][i] != ideal[j][i]) candidate = true;
    }
    if (candidate) rep.deviations.push_back({{"degree", i}, {"note", "Ann(f) differs from (f) inside i < (n-d)/2"}});
    t.add(std::move(row));
  }
  rep.verdict = rep.deviations.empty() ? "HOLDS" : "FINDING";
  rep.result = {{"n", o.n}, {"d", o.d}, {"ann_dims", ann.front()}, {"ideal_dims", ideal.front()}};
}

void exterior_paths(Report& rep, const Options& o) {
  const int smax = o.smax >= 0 ? o.smax : (o.n + 2) / 2;
  auto& t = rep.table("lattice_paths", {"s", "dp", "transfer"});
  json seq = json::array();
  for (int s = 0; s <= smax; ++s) {
    const auto a = exterior::lattice_path_count(o.n, s);
    const auto b = exterior::lattice_path_count_transfer(o.n, s);
    t.add(json::array({s, big(a), big(b)}));
    seq.push_back(big(a));
    if (a != b) rep.deviations.push_back({{"s", s}, {"dp", big(a)}, {"transfer", big(b)}});
  }
  rep.verdict = rep.deviations.empty() ? "MATCH" : "DEVIATES";
  rep.result = {{"n", o.n}, {"counts", seq}};
}

void exterior_two_quadrics(Report& rep, const Options& o) {
  const auto r = exterior::two_quadrics_check(o.n, o.seed, rep.primes.front());
  auto& t = rep.table("two_quadrics", {"degree", "exterior", "symmetric", "paths", "agree"});
  for (const auto& row : r.rows) {
    t.add(json::array({row.degree, row.exterior, row.symmetric, big(row.paths), row.agree()}));
    if (!row.agree()) rep.deviations.push_back({{"degree", row.degree}});
  }
  rep.verdict = r.all_agree() ? "MATCH" : "FINDING";
  rep.result = {{"n", o.n}, {"all_agree", r.all_agree()}};
}

// --- dynamics --------------------------------------------------------------------------

void dynamics_phi_orbit(Report& rep, const Options& o) {
  const int n = o.n > 0 ? o.n : 1;
  if (!o.f.empty()) {
    const auto f = dynamics::parse_func_poly(o.f, o.p, n);
    const auto period = dynamics::find_period_phi(f, o.step_limit);
    auto& t = rep.table("orbit", {"step", "polynomial"});
    dynamics::FuncPoly g = f;
    const std::uint64_t shown = std::min<std::uint64_t>(period.tail + period.cycle, 64);
    for (std::uint64_t i = 0; i <= shown; ++i) {
      t.add(json::array({i, dynamics::to_string(g)}));
      g = dynamics::phi(g);
    }
    if (period.cycle % 2 == 1) rep.deviations.push_back({{"odd_cycle", period.cycle}});
    rep.verdict = period.cycle % 2 == 0 ? "HOLDS" : "FINDING";
    rep.result = {{"p", o.p}, {"n", n}, {"tail", period.tail}, {"cycle", period.cycle}};
    return;
  }
  const std::uint64_t samples = o.samples > 0 ? o.samples : 1000;
  const auto sv = dynamics::survey_orbits(o.p, n, samples, o.seed, o.exhaustive, o.step_limit);
  auto& t = rep.table("cycle_lengths", {"length", "count"});
  for (const auto& [len, count] : sv.cycle_histogram) t.add(json::array({len, count}));
  if (sv.odd_cycles > 0) rep.deviations.push_back({{"odd_cycles", sv.odd_cycles}});
  rep.verdict = sv.odd_cycles == 0 ? "HOLDS" : "FINDING";
  rep.result = {{"p", o.p},           {"n", n},
                {"samples", sv.samples}, {"exhaustive", sv.exhaustive},
                {"through_zero", sv.through_zero}, {"odd_cycles", sv.odd_cycles},
                {"max_tail", sv.max_tail}};
}

void dynamics_psi_order(Report& rep, const Options& o) {
  const int n = o.n > 0 ? o.n : 1;
  const auto order = dynamics::psi_order(o.p, n);
  rep.table("psi_order", {"p", "n", "order"}).add(json::array({o.p, n, order}));
  rep.result = {{"order", order}};
}

void dynamics_phi2(Report& rep, const Options& o) {
  const auto r = dynamics::phi2_multilinear_check(o.n, o.samples > 0 ? o.samples : 10'000, o.seed);
  rep.table("phi2", {"n", "checked", "exhaustive", "bijective", "period_four", "psi_relation"})
      .add(json::array({r.n, r.checked, r.exhaustive, r.bijective, r.period_four, r.psi_relation}));
  for (const auto& f : r.failures) rep.deviations.push_back(f);
  rep.verdict = r.holds() ? "HOLDS" : "FAILS";
  rep.result = {{"holds", r.holds()}, {"checked", r.checked}};
}

// --- semigroup -------------------------------------------------------------------------

json conjecture_json(const semigroup::ConjectureReport& r) {
  return {{"generators", r.generators},
          {"numerator", r.numerator.to_string()},
          {"cyclotomic", r.cyclotomic.cyclotomic},
          {"cyclotomic_factors", r.cyclotomic.factors},
          {"numerator_shape_ci", r.ci_degrees.has_value()},
          {"ci_degrees", r.ci_degrees ? json(*r.ci_degrees) : json(nullptr)},
          {"agree", r.agree()}};
}

void semigroup_check(Report& rep, const Options& o) {
  const auto r = semigroup::conjecture_check(o.generators);
  const auto s = semigroup::build(o.generators);
  auto& t = rep.table("numerator", {"degree", "coefficient"});
  const auto coeffs = r.numerator.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] != 0) t.add(json::array({i, coeffs[i]}));
  }
  if (!r.agree()) rep.deviations.push_back(conjecture_json(r));
  rep.verdict = r.agree() ? "MATCH" : "FINDING";
  rep.result = conjecture_json(r);
  rep.result["frobenius"] = s.frobenius();
  rep.result["gaps"] = s.gaps();
}

void semigroup_sweep(Report& rep, const Options& o) {
  const auto sw = semigroup::sweep(o.max_generator, o.max_count);
  rep.table("sweep", {"semigroups", "cyclotomic", "numerator_shape_ci", "disagreements"})
      .add(json::array({sw.semigroups, sw.cyclotomic, sw.complete_intersections, sw.disagreements.size()}));
  for (const auto& d : sw.disagreements) rep.deviations.push_back(conjecture_json(d));
  rep.verdict = sw.disagreements.empty() ? "MATCH" : "FINDING";
  rep.result = {{"semigroups", sw.semigroups}, {"disagreements", sw.disagreements.size()}};
}

// --- wiring ----------------------------------------------------------------------------

struct Leaf {
  CLI::App* app;
  std::string command;
  std::function<void(Report&, const Options&)> run;
};

void add_format(CLI::App* a, Options& o) {
  a->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
}

void add_random(CLI::App* a, Options& o) {
  a->add_option("--seed", o.seed, "Root seed");
  a->add_option("--prime", o.prime, "Single prime modulus");
  a->add_option("--primes", o.primes, "Comma-separated prime moduli")->delimiter(',');
}

void add_trials(CLI::App* a, Options& o) { a->add_option("--trials", o.trials, "Independent draws per prime"); }
void add_dmax(CLI::App* a, Options& o) { a->add_option("--dmax", o.dmax, "Largest degree examined"); }

void add_recipe_options(CLI::App* a, Options& o, bool with_mu) {
  a->add_option("--n", o.n, "Number of variables")->required();
  a->add_option("--degrees", o.degrees, "Comma-separated generator degrees")->delimiter(',');
  a->add_option("--r", o.r, "Number of generators");
  a->add_option("--d", o.d, "Degree parameter");
  a->add_option("--k", o.k, "Power parameter");
  if (with_mu) a->add_option("--mu", o.mu, "Partition for mu-power ideals")->delimiter(',');
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact-arithmetic experiments on generic forms, ranks, points and dynamics", "gfl"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.add_flag("--timing", o.timing, "Print wall time to stderr");

  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* group, const std::string& name, const std::string& desc,
                  std::function<void(Report&, const Options&)> fn) {
    CLI::App* a = group->add_subcommand(name, desc);
    add_format(a, o);
    leaves.push_back({a, group->get_name() + " " + name, std::move(fn)});
    return a;
  };

  CLI::App* hil = app.add_subcommand("hilbert", "Hilbert functions compared with the expected series");
  hil->require_subcommand(1);
  for (const std::string recipe : {"generic", "power", "mu-power", "nicklasson", "stanley", "gottlieb", "tndk"}) {
    auto* a = leaf(hil, recipe, "Ideal recipe '" + recipe + "'",
                   [recipe](Report& r, const Options& opt) { hilbert_report(r, opt, recipe); });
    add_recipe_options(a, o, recipe == "mu-power");
    add_random(a, o);
    add_trials(a, o);
    add_dmax(a, o);
  }

  CLI::App* war = app.add_subcommand("waring", "Waring ranks and secant experiments");
  war->require_subcommand(1);
  {
    auto* a = leaf(war, "generic-rank", "Generic Waring rank of degree-k forms", waring_generic_rank);
    a->add_option("--k", o.k, "Degree")->required();
    a->add_option("--n", o.n, "Number of variables")->required();
    a = leaf(war, "k-rank", "Bounds and conjectured generic k-rank", waring_k_rank);
    a->add_option("--k", o.k, "Power")->required();
    a->add_option("--d", o.d, "Degree of the summands")->required();
    a->add_option("--n", o.n, "Number of variables")->required();
    add_dmax(a, o);
    a = leaf(war, "monomial", "Ranks of a monomial", waring_monomial);
    a->add_option("--exponents", o.exponents, "Comma-separated exponents")->required()->delimiter(',');
    a->add_option("--k", o.k, "Power for the k-rank bound");
    a = leaf(war, "perfect-pairs", "Pairs (k, d) with d+1 dividing kd+1", waring_perfect_pairs);
    a->add_option("--kmax", o.kmax, "Largest k");
    add_dmax(a, o);
    a = leaf(war, "secant", "Tangent-space experiment for the generic k-rank", waring_secant);
    a->add_option("--k", o.k, "Power")->required();
    a->add_option("--d", o.d, "Degree of the summands")->required();
    a->add_option("--n", o.n, "Number of variables")->required();
    add_random(a, o);
    a = leaf(war, "max-rank", "Known facts on maximal ranks", waring_max_rank);
    a->add_option("--k", o.k, "Power")->required();
    a->add_option("--d", o.d, "Degree of the summands")->required();
    a->add_option("--n", o.n, "Number of variables")->required();
  }

  CLI::App* lef = app.add_subcommand("lefschetz", "Weak, strong and mu-Lefschetz tests");
  lef->require_subcommand(1);
  for (const std::string prop : {"wlp", "slp", "mu"}) {
    auto* a = leaf(lef, prop, "Maximal-rank test '" + prop + "'",
                   [prop](Report& r, const Options& opt) { lefschetz_report(r, opt, prop); });
    add_recipe_options(a, o, false);
    a->add_option("--recipe", o.recipe, "Ideal recipe")
        ->check(CLI::IsMember({"generic", "power", "mu-power", "nicklasson", "stanley", "gottlieb", "monomial-ci",
                               "tndk"}));
    a->add_option("--ideal-mu", o.ideal_mu, "Partition for a mu-power ideal recipe")->delimiter(',');
    if (prop == "slp") a->add_option("--kmax", o.kmax, "Largest power of the linear form (0: all)");
    if (prop == "mu") a->add_option("--mu", o.mu, "Partition of the multiplier")->required()->delimiter(',');
    add_random(a, o);
    add_trials(a, o);
    add_dmax(a, o);
  }

  CLI::App* pts = app.add_subcommand("points", "Fat points, symbolic powers and apolarity");
  pts->require_subcommand(1);
  {
    auto common = [&](CLI::App* a, bool projective) {
      if (projective) a->add_option("--n", o.n, "Coordinates per point (points lie in P^{n-1})");
      a->add_option("--s", o.s, "Number of random points");
      a->add_option("--m", o.m, "Multiplicity");
      a->add_option("--points-file", o.points_file, "Read points from a file instead");
      add_random(a, o);
    };
    auto* a = leaf(pts, "hf", "Hilbert function of fat points against the expected value", points_hf);
    common(a, true);
    add_dmax(a, o);
    a = leaf(pts, "apolarity", "Vanishing conditions against power ideals", points_apolarity);
    common(a, true);
    a->add_option("--d", o.d, "Single degree (default: 0..dmax)");
    add_dmax(a, o);
    a = leaf(pts, "defect", "Minimal generators of I^(m) not coming from I^m", points_defect);
    common(a, true);
    add_dmax(a, o);
    a = leaf(pts, "containment", "Check I^(m) inside I^r degree by degree", points_containment);
    common(a, true);
    a->add_option("--r", o.r, "Ordinary power");
    add_dmax(a, o);
    a = leaf(pts, "multigraded", "Multigraded Hilbert function of fat points", points_multigraded);
    common(a, false);
    a->add_option("--dims", o.dims, "Coordinates per factor, comma-separated")->delimiter(',');
    a->add_option("--multidegree", o.multidegree, "Comma-separated multidegree")->required()->delimiter(',');
  }

  CLI::App* ext = app.add_subcommand("exterior", "Exterior algebra series and annihilators");
  ext->require_subcommand(1);
  {
    auto* a = leaf(ext, "series", "Quotient by one generic form against the expected series", exterior_series);
    a->add_option("--n", o.n, "Number of generators")->required();
    a->add_option("--d", o.d, "Degree of the form")->required();
    add_random(a, o);
    add_trials(a, o);
    add_dmax(a, o);
    a = leaf(ext, "ann", "Annihilator dimensions of a generic form", exterior_ann);
    a->add_option("--n", o.n, "Number of generators")->required();
    a->add_option("--d", o.d, "Degree of the form")->required();
    a->add_option("--imax", o.imax, "Largest source degree");
    add_random(a, o);
    a = leaf(ext, "paths", "Lattice path counts by two methods", exterior_paths);
    a->add_option("--n", o.n, "Number of generators")->required();
    a->add_option("--smax", o.smax, "Largest s");
    a = leaf(ext, "two-quadrics", "E/(f,g), S/(x_i^2, l_1^2, l_2^2) and lattice paths", exterior_two_quadrics);
    a->add_option("--n", o.n, "Number of generators")->required();
    add_random(a, o);
  }

  CLI::App* dyn = app.add_subcommand("dynamics", "The maps phi and psi on functions over F_p");
  dyn->require_subcommand(1);
  {
    auto* a = leaf(dyn, "phi-orbit", "Orbit of phi from one polynomial, or a survey", dynamics_phi_orbit);
    a->add_option("--p", o.p, "Field characteristic")->required();
    a->add_option("--n", o.n, "Number of variables");
    a->add_option("--f", o.f, "Starting polynomial, e.g. '1 + x^63'");
    a->add_option("--samples", o.samples, "Random starting polynomials for a survey");
    a->add_flag("--exhaustive", o.exhaustive, "Survey every polynomial (tiny p only)");
    a->add_option("--step-limit", o.step_limit, "Bound on applications of phi");
    a->add_option("--seed", o.seed, "Root seed");
    a = leaf(dyn, "psi-order", "Order of psi as a linear map", dynamics_psi_order);
    a->add_option("--p", o.p, "Field characteristic")->required();
    a->add_option("--n", o.n, "Number of variables");
    a = leaf(dyn, "phi2", "phi on multilinear polynomials over F_2", dynamics_phi2);
    a->add_option("--n", o.n, "Number of variables")->required();
    a->add_option("--samples", o.samples, "Samples when n > 4");
    a->add_option("--seed", o.seed, "Root seed");
  }

  CLI::App* sem = app.add_subcommand("semigroup", "Numerical semigroups: cyclotomic and CI numerators");
  sem->require_subcommand(1);
  {
    auto* a = leaf(sem, "check", "Check one semigroup", semigroup_check);
    a->add_option("--generators", o.generators, "Comma-separated generators")->required()->delimiter(',');
    a = leaf(sem, "sweep", "Every minimal generating set within the bounds", semigroup_sweep);
    a->add_option("--max-generator", o.max_generator, "Largest generator");
    a->add_option("--max-count", o.max_count, "Largest number of generators");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Leaf* chosen = nullptr;
  for (const auto& l : leaves) {
    if (l.app->parsed()) chosen = &l;
  }
  if (!chosen) {
    err << "no experiment selected\n";
    return 2;
  }

  const auto start = std::chrono::steady_clock::now();
  Report rep;
  rep.command = chosen->command;
  rep.params = echo_params(chosen->app);
  rep.seed = o.seed;
  try {
    rep.primes = resolve_primes(o, chosen->app);
    chosen->run(rep, o);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const LimitExceeded& e) {
    err << "limit exceeded: " << e.what() << "\n";
    return 2;
  }
  if (o.format == "csv") write_csv(rep, out);
  else out << rep.to_json().dump(2) << "\n";
  if (o.timing) {
    err << "wall_time_seconds: " << std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
        << "\n";
  }
  return 0;
}

}  // namespace gfl::cli
