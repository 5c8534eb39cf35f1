#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/local_update.hpp"
#include "lpdyn/profile.hpp"
#include "lpdyn/schedule.hpp"

namespace lpdyn {

enum class StopMode {
  consensus,        // osc(f_t) <= epsilon
  boundary_approx,  // max |f_t - h| <= epsilon, h the infinity-harmonic extension
  horizon,          // run exactly max_steps
};

const char* stop_mode_name(StopMode m);

struct RunConfig {
  PValue p = PValue::infinity();
  double epsilon = 0.5;
  std::uint64_t max_steps = 1'000'000;
  StopMode stop_mode = StopMode::consensus;
  std::uint64_t record_every = 0;  // 0: record only the first and last state
  SolverConfig solver;
  bool keep_cover_marks = true;
};

// One recorded state. energy is NaN for p = inf; the distances are NaN
// without a boundary target.
struct Sample {
  std::uint64_t t;
  double osc;
  double min;
  double max;
  double energy;
  double dist_l1;
  double dist_inf;
};

struct RunRecord {
  std::optional<std::uint64_t> stopping_time;  // empty: budget or schedule exhausted
  std::uint64_t steps = 0;
  std::vector<Sample> samples;
  Profile final_profile;
  std::vector<std::uint64_t> cover_marks;
  std::optional<std::uint64_t> seed;
  std::optional<Profile> target;  // the extension h in boundary_approx mode

  bool censored() const { return !stopping_time.has_value(); }
};

// Called after every step with the step index t >= 1, the updated vertex,
// its previous value and the current profile. Returning false stops the run
// (counted as censored unless the stop criterion was met at that step).
using StepObserver = std::function<bool(std::uint64_t t, Vertex v, double old_value, const Profile& f)>;

// Runs the asynchronous dynamics. Throws Error for finite p combined with
// boundary_approx, for an empty boundary in that mode, and for a profile of
// the wrong dimension.
RunRecord run(const Graph& g, const Profile& f0, const Schedule& sched, const RunConfig& cfg,
              const StepObserver& observer = {});

struct EnsembleSummary {
  std::vector<RunRecord> runs;  // ordered like the seeds
  std::size_t censored = 0;
  std::optional<double> mean;    // over uncensored runs
  std::optional<double> median;  // censored runs count as +inf
  std::optional<double> q10;
  std::optional<double> q90;
  // Mean oscillation over runs at the shared sample times.
  std::vector<std::pair<std::uint64_t, double>> mean_osc;
};

// One uniformly random schedule per seed; runs execute in parallel.
EnsembleSummary run_ensemble(const Graph& g, const Profile& f0, const RunConfig& cfg,
                             const std::vector<std::uint64_t>& seeds);
// Sequential reference for run_ensemble; identical output.
EnsembleSummary run_ensemble_serial(const Graph& g, const Profile& f0, const RunConfig& cfg,
                                    const std::vector<std::uint64_t>& seeds);

// Linearly interpolated q-quantile (q in [0,1]) of stopping times with
// censored entries as +inf. Empty when the quantile touches a censored run.
std::optional<double> censored_quantile(std::vector<std::optional<std::uint64_t>> times, double q);

// 2 exp(-k / (diam^2 + diam)).
double modulus_bound(std::uint64_t diam, std::uint64_t k);
// ceil((diam^2 + diam) log(2 / eps)).
std::uint64_t k_for_epsilon(std::uint64_t diam, double eps);

}  // namespace lpdyn
