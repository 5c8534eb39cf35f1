#include "lpdyn/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "lpdyn/generators.hpp"
#include "lpdyn/rng.hpp"

namespace lpdyn {

namespace {

void require_finite_p(double p) {
  if (!std::isfinite(p) || !(p > 1.0)) throw Error("p must be finite and > 1");
}

}  // namespace

double beta_p(double p) {
  require_finite_p(p);
  return std::max(2.0 * p / (p - 1.0), 3.0);
}

double theta_p(double p) {
  require_finite_p(p);
  if (p <= 2.0) return 1.0 / (p - 1.0);
  return std::max((3.0 - p) / (p - 1.0), 0.0);
}

double c_p(double p) {
  require_finite_p(p);
  if (p <= 2.0) return p * std::pow(2.0, -2.0 / (p - 1.0));
  return p / (80.0 * (p - 1.0));
}

double rate_F(double n, double p, double D) {
  if (!(n > 0.0) || !(D > 0.0)) throw Error("n and D must be positive");
  return std::pow(n, -beta_p(p)) * std::pow(D / n, -theta_p(p));
}

RatePrediction predict(double n, double p, double D) {
  return {beta_p(p), theta_p(p), rate_F(n, p, D), c_p(p)};
}

InfinityPrediction predict_infinity(double n, double diam, double eps) {
  if (!(n >= 1.0) || !(diam >= 0.0) || !(eps > 0.0)) throw Error("invalid prediction inputs");
  const double base = n * (diam + 1.0) * (diam + 1.0) * std::log(2.0 / eps);
  return {3.0, base * (std::log(n) + 1.0), base};
}

// ---- energy decay ----

namespace {

struct DecayContext {
  const Graph& g;
  const Profile& f0;
  PValue p;
  double e0;
};

DecayContext decay_context(const Graph& g, const Profile& f0, double p) {
  require_finite_p(p);
  if (f0.size() != g.size()) throw Error("profile has the wrong dimension");
  const double e0 = energy(g, f0, p);
  if (!(e0 > 0.0)) throw Error("energy decay test needs a non-constant initial profile");
  return {g, f0, PValue::finite(p), e0};
}

double relative_drop(const DecayContext& c, const Profile& f, double e, Vertex v) {
  const double nv = update_value(c.g, f, v, c.p);
  return -energy_delta_at(c.g, f, v, nv, c.p.value()) / e;
}

constexpr std::size_t chains = 16;

// Samples of chain `chain` in trajectory mode.
void run_chain(const DecayContext& c, std::uint64_t seed, std::size_t chain, std::size_t count,
               double* out) {
  Rng rng = Rng::stream(seed, chain);
  const auto& interior = c.g.interior();
  Profile f = c.f0;
  double e = c.e0;
  for (std::size_t i = 0; i < count; ++i) {
    if (!(e > 1e-12 * c.e0)) {
      f = c.f0;
      e = c.e0;
    }
    const Vertex v = interior[rng.below(interior.size())];
    out[i] = relative_drop(c, f, e, v);
    f[v] = update_value(c.g, f, v, c.p);
    e = energy(c.g, f, c.p.value());
  }
}

EnergyDecayReport finish(const DecayContext& c, const std::vector<double>& drops, double exact) {
  EnergyDecayReport r;
  r.samples = drops.size();
  double sum = 0.0;
  for (double x : drops) sum += x;
  r.estimate = sum / static_cast<double>(drops.size());
  double ss = 0.0;
  for (double x : drops) ss += (x - r.estimate) * (x - r.estimate);
  const double var = drops.size() > 1 ? ss / static_cast<double>(drops.size() - 1) : 0.0;
  r.std_error = std::sqrt(var / static_cast<double>(drops.size()));
  r.exact = exact;
  r.bound = c_p(c.p.value()) *
            rate_F(static_cast<double>(c.g.size()), c.p.value(), average_degree(c.g));
  r.pass = r.estimate + 3.0 * r.std_error >= r.bound;
  return r;
}

double exact_fresh(const DecayContext& c) {
  double s = 0.0;
  for (Vertex v : c.g.interior()) s += relative_drop(c, c.f0, c.e0, v);
  return s / static_cast<double>(c.g.interior().size());
}

std::size_t chain_begin(std::size_t chain, std::size_t samples) { return chain * samples / chains; }

EnergyDecayReport decay(const Graph& g, const Profile& f0, double p, std::uint64_t seed,
                        std::size_t samples, DecayMode mode, bool parallel) {
  if (samples < 2) throw Error("energy decay test needs at least 2 samples");
  const auto c = decay_context(g, f0, p);
  std::vector<double> drops(samples);
  const auto& interior = g.interior();
  if (mode == DecayMode::fresh) {
    const auto count = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(static) if (parallel)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(i));
      drops[i] = relative_drop(c, f0, c.e0, interior[rng.below(interior.size())]);
    }
    return finish(c, drops, exact_fresh(c));
  }
  const auto nchains = static_cast<std::ptrdiff_t>(chains);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t k = 0; k < nchains; ++k) {
    const std::size_t b = chain_begin(k, samples), e = chain_begin(k + 1, samples);
    run_chain(c, seed, k, e - b, drops.data() + b);
  }
  return finish(c, drops, std::numeric_limits<double>::quiet_NaN());
}

}  // namespace

EnergyDecayReport energy_decay_test(const Graph& g, const Profile& f0, double p, std::uint64_t seed,
                                    std::size_t samples, DecayMode mode) {
  return decay(g, f0, p, seed, samples, mode, true);
}

EnergyDecayReport energy_decay_test_serial(const Graph& g, const Profile& f0, double p,
                                           std::uint64_t seed, std::size_t samples, DecayMode mode) {
  return decay(g, f0, p, seed, samples, mode, false);
}

// ---- scaling ----

LinearFit ols_fit(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw Error("fit needs at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (!(sxx > 0.0)) throw Error("fit needs two distinct x values");
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double sse = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (slope * x[i] + intercept);
    sse += r * r;
  }
  return {slope, intercept, syy > 0.0 ? 1.0 - sse / syy : 1.0};
}

double predicted_exponent(Family family, PValue p) {
  if (p.is_infinite()) return 3.0;
  const double v = p.value();
  // Barbell: average degree grows like N, so D/N stays bounded.
  if (family == Family::barbell) return beta_p(v);
  return beta_p(v) - theta_p(v);
}

ScalingInstance scaling_instance(const ScalingSpec& spec, int size) {
  const std::map<std::string, double> p_param{{"p", spec.p.value()}};
  switch (spec.family) {
    case Family::cycle: {
      Graph g = gen_cycle(size);
      Profile f = preset_profile(g, "cycle_step");
      return {std::move(g), std::move(f), StopMode::consensus};
    }
    case Family::barbell: {
      Graph g = gen_barbell(size);
      Profile f = preset_profile(g, "barbell_step");
      return {std::move(g), std::move(f), StopMode::consensus};
    }
    case Family::segment: {
      Graph g = gen_segment(size, true);
      Profile f = preset_profile(g, "boundary_segment");
      return {std::move(g), std::move(f), StopMode::boundary_approx};
    }
    case Family::parallel_paths: {
      Graph g = gen_parallel_paths(spec.k, size);
      Profile f = preset_profile(g, "parallel_halves");
      return {std::move(g), std::move(f), StopMode::consensus};
    }
    case Family::tree_tn: {
      Graph g = gen_tree_tn(size);
      Profile f = preset_profile(g, "tn_profile", p_param);
      return {std::move(g), std::move(f), StopMode::consensus};
    }
    case Family::cliques_hdn: {
      Graph g = gen_hdn(spec.d, size);
      Profile f = preset_profile(g, "hdn_step");
      return {std::move(g), std::move(f), StopMode::consensus};
    }
    default:
      break;
  }
  throw Error(std::string("no scaling instance for family ") + family_name(spec.family));
}

namespace {

void validate(const ScalingSpec& spec) {
  if (spec.sizes.size() < 3) throw Error("scaling study needs at least 3 sizes");
  if (spec.reps < 1) throw Error("scaling study needs reps >= 1");
}

ScalingResult assemble(const ScalingSpec& spec, std::vector<ScalingCell> cells) {
  ScalingResult res;
  res.spec = spec;
  res.predicted = predicted_exponent(spec.family, spec.p);
  std::vector<double> lx, ly;
  bool complete = true;
  for (std::size_t s = 0; s < spec.sizes.size(); ++s) {
    ScalingRow row{spec.sizes[s], 0, std::nullopt, std::nullopt, 0};
    std::vector<std::optional<std::uint64_t>> taus;
    double sum = 0.0;
    for (int r = 0; r < spec.reps; ++r) {
      const auto& c = cells[s * spec.reps + r];
      row.N = c.N;
      taus.push_back(c.tau);
      if (c.tau)
        sum += static_cast<double>(*c.tau);
      else
        ++row.censored;
    }
    if (row.censored < taus.size())
      row.mean = sum / static_cast<double>(taus.size() - row.censored);
    row.median = censored_quantile(taus, 0.5);
    if (row.median && *row.median > 0.0) {
      lx.push_back(std::log(static_cast<double>(row.N)));
      ly.push_back(std::log(*row.median));
    } else {
      complete = false;
    }
    res.rows.push_back(row);
  }
  if (complete) res.fit = ols_fit(lx, ly);
  res.monotone = complete;
  for (std::size_t i = 1; complete && i < res.rows.size(); ++i)
    res.monotone = res.monotone && *res.rows[i].median > *res.rows[i - 1].median;
  res.slope_certified = res.predicted <= spec.max_certified_exponent;
  if (res.slope_certified)
    res.pass = res.fit && std::fabs(res.fit->slope - res.predicted) <= spec.band;
  else
    res.pass = res.monotone;
  res.cells = std::move(cells);
  return res;
}

ScalingResult study(const ScalingSpec& spec, bool parallel) {
  validate(spec);
  std::vector<ScalingInstance> inst;
  for (int size : spec.sizes) inst.push_back(scaling_instance(spec, size));
  const std::size_t total = spec.sizes.size() * static_cast<std::size_t>(spec.reps);
  std::vector<ScalingCell> cells(total);
  std::vector<std::string> errors(total);
  const auto count = static_cast<std::ptrdiff_t>(total);
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t s = static_cast<std::size_t>(i) / spec.reps;
    const int rep = static_cast<int>(i % spec.reps);
    const auto& in = inst[s];
    RunConfig cfg;
    cfg.p = spec.p;
    cfg.epsilon = spec.epsilon;
    cfg.max_steps = spec.max_steps;
    cfg.stop_mode = in.stop;
    cfg.keep_cover_marks = false;
    const std::uint64_t seed =
        Rng::stream(spec.seed, static_cast<std::uint64_t>(spec.sizes[s]) * 1'000'003ULL + rep)();
    ScalingCell cell{spec.sizes[s], in.g.size(), rep, seed, std::nullopt};
    try {
      cell.tau = run(in.g, in.f0, UniformRandom{seed}, cfg).stopping_time;
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
    cells[i] = cell;
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  return assemble(spec, std::move(cells));
}

}  // namespace

ScalingResult scaling_study(const ScalingSpec& spec) { return study(spec, true); }
ScalingResult scaling_study_serial(const ScalingSpec& spec) { return study(spec, false); }

// ---- floors ----

const char* construction_name(Construction c) {
  switch (c) {
    case Construction::cycle1: return "cycle1";
    case Construction::secondcycle: return "secondcycle";
    case Construction::tree_tn: return "tree_tn";
    case Construction::hdn: return "hdn";
    case Construction::accordion: return "accordion";
    case Construction::parallel_paths: return "parallel_paths";
  }
  return "?";
}

std::optional<Construction> parse_construction(const std::string& name) {
  for (auto c : {Construction::cycle1, Construction::secondcycle, Construction::tree_tn,
                 Construction::hdn, Construction::accordion, Construction::parallel_paths})
    if (name == construction_name(c)) return c;
  if (name == "tn") return Construction::tree_tn;
  if (name == "cliques_hdn") return Construction::hdn;
  return std::nullopt;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error("hypothesis violated: " + what);
}

// Largest integer t with t < x (x > 0).
std::uint64_t strictly_below(double x) {
  if (!(x > 0.0)) return 0;
  const double c = std::ceil(x);
  return c >= 1.0 ? static_cast<std::uint64_t>(c - 1.0) : 0;
}

std::uint64_t at_most(double x) { return x > 0.0 ? static_cast<std::uint64_t>(std::floor(x)) : 0; }

}  // namespace

FloorInstance floor_instance(Construction c, const FloorParams& prm) {
  const double n = prm.n;
  const bool inf = prm.p.is_infinite();
  const double p = prm.p.value();
  switch (c) {
    case Construction::cycle1: {
      require(prm.n >= 4 && prm.n % 4 == 0, "cycle1 needs 4 | n");
      Graph g = gen_cycle(prm.n);
      Profile f = preset_profile(g, "cycle_step");
      return {std::move(g), std::move(f), at_most(n * n * n / 2048.0), "t <= n^3/2048"};
    }
    case Construction::secondcycle: {
      require(prm.n >= 1, "secondcycle needs n >= 1 (cycle length 4n)");
      Graph g = gen_cycle(4 * prm.n);
      Profile f = preset_profile(g, "second_cycle");
      return {std::move(g), std::move(f), strictly_below(n * n * n / 68.0), "t < n^3/68"};
    }
    case Construction::tree_tn: {
      require(!inf, "tree_tn needs finite p");
      require(prm.n >= 1, "tree_tn needs n >= 1");
      Graph g = gen_tree_tn(prm.n);
      Profile f = preset_profile(g, "tn_profile", {{"p", p}});
      return {std::move(g), std::move(f),
              strictly_below(0.25 * std::pow(n, (2.0 * p - 1.0) / (p - 1.0))),
              "t < n^((2p-1)/(p-1))/4"};
    }
    case Construction::hdn: {
      require(!inf, "hdn needs finite p");
      require(prm.d >= 2, "hdn needs d >= 2");
      require(prm.n >= prm.d && prm.n % prm.d == 0, "hdn needs d | n");
      Graph g = gen_hdn(prm.d, prm.n);
      Profile f = preset_profile(g, "hdn_step");
      const double h = std::pow(2.0, -p / (p - 1.0)) * std::pow(n, (2.0 * p - 1.0) / (p - 1.0)) *
                       std::pow(static_cast<double>(prm.d), 1.0 / (p - 1.0)) / (25.0 * std::numbers::e);
      return {std::move(g), std::move(f), strictly_below(h),
              "t < 2^(-p/(p-1)) n^((2p-1)/(p-1)) d^(1/(p-1)) / (25e)"};
    }
    case Construction::accordion: {
      require(!inf && p >= 2.0 && p <= 3.0, "accordion needs p in [2,3]");
      require(prm.d >= 2, "accordion needs d >= 2");
      require(prm.n % prm.d == 0 && prm.n / prm.d >= 12, "accordion needs d | n and n/d >= 12");
      Graph g = gen_accordion(prm.d, prm.n);
      Profile f = preset_profile(g, "accordion_step");
      const double h = n * n * n * std::pow(static_cast<double>(prm.d), (3.0 - p) / (p - 1.0)) / 6400.0;
      return {std::move(g), std::move(f), at_most(h), "t <= n^3 d^((3-p)/(p-1)) / 6400"};
    }
    case Construction::parallel_paths: {
      require(inf, "parallel_paths needs p = inf");
      require(prm.k >= 2, "parallel_paths needs k >= 2");
      require(prm.L >= 4 && prm.L % 4 == 0, "parallel_paths needs 4 | L");
      Graph g = gen_parallel_paths(prm.k, prm.L);
      Profile f = preset_profile(g, "parallel_halves");
      const double N = static_cast<double>(g.size()), L = prm.L;
      return {std::move(g), std::move(f), strictly_below(N * L * L / 2048.0), "t < N L^2 / 2048"};
    }
  }
  throw Error("unknown construction");
}

namespace {

constexpr double floor_level = 0.5;
constexpr double floor_slack = 1e-12;

FloorScheduleResult certify_one(const FloorInstance& in, PValue p, const Schedule& s) {
  FloorScheduleResult r;
  r.schedule = describe(s);
  Profile f = in.f0;
  OrderedValueIndex vals(f.values());
  Scheduler sched(in.g, s);
  r.min_osc = vals.spread();
  auto check = [&](std::uint64_t t) {
    const double osc = vals.spread();
    r.min_osc = std::min(r.min_osc, osc);
    if (!r.first_violation && osc < floor_level - floor_slack) {
      r.first_violation = t;
      r.violation_osc = osc;
    }
  };
  check(0);
  for (std::uint64_t t = 1; t <= in.horizon; ++t) {
    const auto v = sched.next();
    if (!v) break;
    f[*v] = update_value(in.g, f, *v, p);
    vals.set(*v, f[*v]);
    r.steps = t;
    check(t);
  }
  return r;
}

FloorReport certify(Construction c, const FloorParams& params, const std::vector<Schedule>& schedules,
                    bool parallel) {
  if (schedules.empty()) throw Error("floor certification needs at least one schedule");
  const FloorInstance in = floor_instance(c, params);
  FloorReport rep;
  rep.construction = c;
  rep.params = params;
  rep.horizon = in.horizon;
  rep.rule = in.rule;
  rep.results.resize(schedules.size());
  std::vector<std::string> errors(schedules.size());
  const auto count = static_cast<std::ptrdiff_t>(schedules.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      rep.results[i] = certify_one(in, params.p, schedules[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  for (const auto& r : rep.results)
    if (r.first_violation) ++rep.violations;
  rep.pass = rep.violations == 0;
  return rep;
}

}  // namespace

FloorReport floor_certify(Construction c, const FloorParams& params,
                          const std::vector<Schedule>& schedules) {
  return certify(c, params, schedules, true);
}

FloorReport floor_certify_serial(Construction c, const FloorParams& params,
                                 const std::vector<Schedule>& schedules) {
  return certify(c, params, schedules, false);
}

}  // namespace lpdyn
