#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lpdyn/dynamics.hpp"
#include "lpdyn/graph.hpp"
#include "lpdyn/local_update.hpp"
#include "lpdyn/profile.hpp"
#include "lpdyn/schedule.hpp"

namespace lpdyn {

// ---- rate predictions ----

double beta_p(double p);   // max(2p/(p-1), 3)
double theta_p(double p);  // 1/(p-1) for p <= 2, max((3-p)/(p-1), 0) for p >= 2
double c_p(double p);      // p 2^{-2/(p-1)} for p <= 2, p/(80(p-1)) for p > 2
double rate_F(double n, double p, double D);  // n^{-beta} (D/n)^{-theta}

struct RatePrediction {
  double beta;
  double theta;
  double F;
  double c;
};

// Finite p only; throws Error for p <= 1 or p = inf.
RatePrediction predict(double n, double p, double D);

// Diameter-based consensus bounds for p = inf.
struct InfinityPrediction {
  double beta = 3.0;
  double expected_bound;     // n (log n + 1) (Diam + 1)^2 log(2/eps), uniform schedule
  double round_robin_bound;  // n (Diam + 1)^2 log(2/eps)
};
InfinityPrediction predict_infinity(double n, double diam, double eps);

// ---- one-step energy decay ----

enum class DecayMode {
  fresh,       // every sample updates f0 itself
  trajectory,  // samples follow random-update chains started at f0
};

struct EnergyDecayReport {
  double estimate = 0.0;   // mean relative energy drop
  double std_error = 0.0;
  double exact = 0.0;      // fresh mode: exact expectation over vertices; NaN otherwise
  double bound = 0.0;      // c_p F(n, p, D_G)
  std::size_t samples = 0;
  bool pass = false;       // estimate + 3 SE >= bound
};

// Throws Error for a constant f0 or infinite p. Deterministic in `seed`;
// the OpenMP and serial versions return identical reports.
EnergyDecayReport energy_decay_test(const Graph& g, const Profile& f0, double p, std::uint64_t seed,
                                    std::size_t samples, DecayMode mode = DecayMode::fresh);
EnergyDecayReport energy_decay_test_serial(const Graph& g, const Profile& f0, double p,
                                           std::uint64_t seed, std::size_t samples,
                                           DecayMode mode = DecayMode::fresh);

// ---- scaling studies ----

struct LinearFit {
  double slope;
  double intercept;
  double r2;
};

// Ordinary least squares y = slope x + intercept. Needs >= 2 distinct x.
LinearFit ols_fit(std::span<const double> x, std::span<const double> y);

struct ScalingSpec {
  Family family = Family::cycle;
  std::vector<int> sizes;
  PValue p = PValue::infinity();
  double epsilon = 0.5;
  int reps = 10;
  std::uint64_t seed = 1;
  std::uint64_t max_steps = 200'000'000;
  int k = 2;            // parallel_paths path count
  int d = 2;            // cliques_hdn clique size
  double band = 0.5;    // accepted |slope - predicted|
  double max_certified_exponent = 4.6;  // larger predictions fall back to a trend check
};

// Graph, initial profile and stop mode used for one size of a family.
struct ScalingInstance {
  Graph g;
  Profile f0;
  StopMode stop;
};
ScalingInstance scaling_instance(const ScalingSpec& spec, int size);

// Exponent of the predicted growth of tau in the vertex count.
double predicted_exponent(Family family, PValue p);

struct ScalingCell {
  int size;
  std::size_t N;
  int rep;
  std::uint64_t seed;
  std::optional<std::uint64_t> tau;
};

struct ScalingRow {
  int size;
  std::size_t N;
  std::optional<double> median;
  std::optional<double> mean;  // over uncensored reps
  std::size_t censored;
};

struct ScalingResult {
  ScalingSpec spec;
  std::vector<ScalingCell> cells;  // ordered by (size, rep)
  std::vector<ScalingRow> rows;
  std::optional<LinearFit> fit;  // log median tau against log N; empty if a size is censored
  double predicted = 0.0;
  bool slope_certified = false;  // predicted <= max_certified_exponent
  bool monotone = false;         // medians increase with size
  bool pass = false;
};

ScalingResult scaling_study(const ScalingSpec& spec);
ScalingResult scaling_study_serial(const ScalingSpec& spec);

// ---- oscillation floors ----

enum class Construction { cycle1, secondcycle, tree_tn, hdn, accordion, parallel_paths };

const char* construction_name(Construction c);
std::optional<Construction> parse_construction(const std::string& name);

struct FloorParams {
  int n = 0;  // cycle length; quarter length for secondcycle; half-length otherwise
  int d = 0;
  int k = 2;
  int L = 0;
  PValue p = PValue::infinity();
};

struct FloorInstance {
  Graph g;
  Profile f0;
  std::uint64_t horizon;  // osc(f_t) >= 1/2 is claimed for every t <= horizon
  std::string rule;       // the horizon formula, for reports
};

// Validates the construction's hypotheses; throws Error naming the violated
// constraint.
FloorInstance floor_instance(Construction c, const FloorParams& params);

struct FloorScheduleResult {
  std::string schedule;
  std::uint64_t steps = 0;  // less than the horizon if an explicit schedule ran out
  double min_osc = 0.0;
  std::optional<std::uint64_t> first_violation;
  double violation_osc = 0.0;
};

struct FloorReport {
  Construction construction;
  FloorParams params;
  std::uint64_t horizon = 0;
  std::string rule;
  std::vector<FloorScheduleResult> results;
  std::size_t violations = 0;
  bool pass = false;
};

FloorReport floor_certify(Construction c, const FloorParams& params,
                          const std::vector<Schedule>& schedules);
FloorReport floor_certify_serial(Construction c, const FloorParams& params,
                                 const std::vector<Schedule>& schedules);

}  // namespace lpdyn
