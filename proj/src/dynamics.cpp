#include "lpdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lpdyn/extension.hpp"

namespace lpdyn {

const char* stop_mode_name(StopMode m) {
  switch (m) {
    case StopMode::consensus: return "consensus";
    case StopMode::boundary_approx: return "boundary";
    case StopMode::horizon: return "horizon";
  }
  return "?";
}

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

Sample take_sample(const Graph& g, const Profile& f, std::uint64_t t, const OrderedValueIndex& vals,
                   const RunConfig& cfg, const std::optional<Profile>& h) {
  Sample s{t, vals.spread(), vals.min(), vals.max(), nan, nan, nan};
  if (!cfg.p.is_infinite()) s.energy = energy(g, f, cfg.p.value());
  if (h) {
    s.dist_l1 = lp_distance(f, *h, Norm::one);
    s.dist_inf = lp_distance(f, *h, Norm::infinity);
  }
  return s;
}

}  // namespace

RunRecord run(const Graph& g, const Profile& f0, const Schedule& schedule, const RunConfig& cfg,
              const StepObserver& observer) {
  if (f0.size() != g.size())
    throw Error("profile has " + std::to_string(f0.size()) + " entries, graph has " +
                std::to_string(g.size()) + " vertices");
  if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0)) throw Error("epsilon must lie in (0,1)");
  if (cfg.max_steps < 1) throw Error("max_steps must be >= 1");

  RunRecord rec;
  if (auto* u = std::get_if<UniformRandom>(&schedule)) rec.seed = u->seed;

  if (cfg.stop_mode == StopMode::boundary_approx) {
    if (!cfg.p.is_infinite())
      throw Error(
          "boundary stopping is only supported for p = inf: for finite p the approximation time "
          "toward the p-harmonic extension is not logarithmic in epsilon (it can grow like "
          "eps^((p-2)/(p-1)) for 1 < p < 2)");
    if (!g.has_boundary()) throw Error("boundary stopping needs a graph with a boundary");
    rec.target = extend(g, f0).h;
  }

  Profile f = f0;
  Scheduler sched(g, schedule);
  OrderedValueIndex vals(f.values());
  OrderedValueIndex dev;
  if (rec.target) {
    std::vector<double> d(g.size());
    for (Vertex v = 0; v < g.size(); ++v) d[v] = std::fabs(f[v] - (*rec.target)[v]);
    dev = OrderedValueIndex(d);
  }

  auto met = [&](std::uint64_t t) {
    switch (cfg.stop_mode) {
      case StopMode::consensus: return vals.spread() <= cfg.epsilon;
      case StopMode::boundary_approx: return dev.max() <= cfg.epsilon;
      case StopMode::horizon: return t >= cfg.max_steps;
    }
    return false;
  };

  const auto& interior = g.interior();
  std::vector<std::uint64_t> seen(g.size(), 0);
  std::uint64_t epoch = 1;
  std::size_t covered = 0;

  rec.samples.push_back(take_sample(g, f, 0, vals, cfg, rec.target));
  if (met(0)) {
    rec.stopping_time = 0;
  } else {
    for (std::uint64_t t = 1; t <= cfg.max_steps; ++t) {
      const auto next = sched.next();
      if (!next) break;
      const Vertex v = *next;
      const double old = f[v];
      const double nv = update_value(g, f, v, cfg.p, cfg.solver);
      f[v] = nv;
      vals.set(v, nv);
      if (rec.target) dev.set(v, std::fabs(nv - (*rec.target)[v]));
      rec.steps = t;

      if (cfg.keep_cover_marks && seen[v] != epoch) {
        seen[v] = epoch;
        if (++covered == interior.size()) {
          rec.cover_marks.push_back(t);
          ++epoch;
          covered = 0;
        }
      }
      if (cfg.record_every && t % cfg.record_every == 0)
        rec.samples.push_back(take_sample(g, f, t, vals, cfg, rec.target));

      const bool done = met(t);
      if (done) rec.stopping_time = t;
      const bool keep_going = !observer || observer(t, v, old, f);
      if (done || !keep_going) break;
    }
  }
  if (rec.samples.back().t != rec.steps)
    rec.samples.push_back(take_sample(g, f, rec.steps, vals, cfg, rec.target));
  rec.final_profile = std::move(f);
  return rec;
}

std::optional<double> censored_quantile(std::vector<std::optional<std::uint64_t>> times, double q) {
  if (times.empty() || q < 0.0 || q > 1.0) return std::nullopt;
  std::vector<double> x;
  x.reserve(times.size());
  for (const auto& t : times)
    x.push_back(t ? static_cast<double>(*t) : std::numeric_limits<double>::infinity());
  std::sort(x.begin(), x.end());
  const double pos = q * static_cast<double>(x.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = static_cast<std::size_t>(std::ceil(pos));
  if (std::isinf(x[hi])) return std::nullopt;
  return x[lo] + (pos - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

namespace {

EnsembleSummary summarize(std::vector<RunRecord> runs) {
  EnsembleSummary s;
  std::vector<std::optional<std::uint64_t>> times;
  double sum = 0.0;
  for (const auto& r : runs) {
    times.push_back(r.stopping_time);
    if (r.censored())
      ++s.censored;
    else
      sum += static_cast<double>(*r.stopping_time);
  }
  if (s.censored < runs.size()) s.mean = sum / static_cast<double>(runs.size() - s.censored);
  s.median = censored_quantile(times, 0.5);
  s.q10 = censored_quantile(times, 0.1);
  s.q90 = censored_quantile(times, 0.9);

  std::size_t shared = runs.empty() ? 0 : runs.front().samples.size();
  for (const auto& r : runs) shared = std::min(shared, r.samples.size());
  for (std::size_t i = 0; i < shared; ++i) {
    const std::uint64_t t = runs.front().samples[i].t;
    bool aligned = true;
    double acc = 0.0;
    for (const auto& r : runs) {
      aligned = aligned && r.samples[i].t == t;
      acc += r.samples[i].osc;
    }
    if (!aligned) break;
    s.mean_osc.emplace_back(t, acc / static_cast<double>(runs.size()));
  }
  s.runs = std::move(runs);
  return s;
}

void check_seeds(const std::vector<std::uint64_t>& seeds) {
  if (seeds.empty()) throw Error("ensemble needs at least one seed");
}

}  // namespace

EnsembleSummary run_ensemble(const Graph& g, const Profile& f0, const RunConfig& cfg,
                             const std::vector<std::uint64_t>& seeds) {
  check_seeds(seeds);
  std::vector<RunRecord> runs(seeds.size());
  std::vector<std::string> errors(seeds.size());
  const auto count = static_cast<std::ptrdiff_t>(seeds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      runs[i] = run(g, f0, UniformRandom{seeds[i]}, cfg);
    } catch (const std::exception& e) {
      errors[i] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw Error(e);
  return summarize(std::move(runs));
}

EnsembleSummary run_ensemble_serial(const Graph& g, const Profile& f0, const RunConfig& cfg,
                                    const std::vector<std::uint64_t>& seeds) {
  check_seeds(seeds);
  std::vector<RunRecord> runs;
  runs.reserve(seeds.size());
  for (auto seed : seeds) runs.push_back(run(g, f0, UniformRandom{seed}, cfg));
  return summarize(std::move(runs));
}

double modulus_bound(std::uint64_t diam, std::uint64_t k) {
  const double L = static_cast<double>(diam);
  return 2.0 * std::exp(-static_cast<double>(k) / (L * L + L));
}

std::uint64_t k_for_epsilon(std::uint64_t diam, double eps) {
  if (!(eps > 0.0)) throw Error("epsilon must be positive");
  const double L = static_cast<double>(diam);
  const double k = std::ceil((L * L + L) * std::log(2.0 / eps));
  return k <= 0.0 ? 0 : static_cast<std::uint64_t>(k);
}

}  // namespace lpdyn
