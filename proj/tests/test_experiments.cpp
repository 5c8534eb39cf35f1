#include <cmath>

#include "doctest.h"
#include "lpdyn/experiments.hpp"
#include "lpdyn/generators.hpp"
#include "lpdyn/rng.hpp"
#include "lpdyn/verify.hpp"
#include "oracles.hpp"

using namespace lpdyn;

TEST_CASE("rate exponents") {
  CHECK(beta_p(1.5) == 6.0);
  CHECK(beta_p(2.0) == 4.0);
  CHECK(beta_p(4.0) == 3.0);
  CHECK(theta_p(1.5) == doctest::Approx(2.0));
  CHECK(theta_p(2.0) == 1.0);
  CHECK(theta_p(2.5) == doctest::Approx(1.0 / 3));
  CHECK(theta_p(4.0) == 0.0);
  CHECK(c_p(1.5) == doctest::Approx(0.09375));
  CHECK(c_p(2.0) == doctest::Approx(0.5));
  CHECK(c_p(4.0) == doctest::Approx(4.0 / 240));
  const auto r = predict(10, 2, 4);
  CHECK(r.beta == 4.0);
  CHECK(r.theta == 1.0);
  CHECK(r.F == doctest::Approx(2.5e-4));
  CHECK(r.c == 0.5);
  CHECK_THROWS_AS(predict(10, 1.0, 4), Error);
  CHECK_THROWS_AS(predict(10, INFINITY, 4), Error);
  const auto inf = predict_infinity(16, 8, 0.5);
  CHECK(inf.round_robin_bound == doctest::Approx(16 * 81 * std::log(4.0)));
  CHECK(inf.expected_bound == doctest::Approx(16 * (std::log(16.0) + 1) * 81 * std::log(4.0)));
}

TEST_CASE("least squares") {
  const std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
  const auto fit = ols_fit(x, y);
  CHECK(fit.slope == doctest::Approx(2));
  CHECK(fit.intercept == doctest::Approx(1));
  CHECK(fit.r2 == doctest::Approx(1));
  const std::vector<double> x2{1, 1}, y2{0, 1};
  CHECK_THROWS_AS(ols_fit(x2, y2), Error);
}

TEST_CASE("predicted exponents") {
  CHECK(predicted_exponent(Family::cycle, PValue::infinity()) == 3.0);
  CHECK(predicted_exponent(Family::barbell, PValue::finite(2)) == 4.0);
  CHECK(predicted_exponent(Family::cycle, PValue::finite(2)) == doctest::Approx(3.0));
}

TEST_CASE("energy decay: exact expectation and determinism") {
  const Graph g = gen_random_connected(30, 0.2, 11);
  Rng rng(11);
  Profile f0(30);
  for (Vertex v = 0; v < 30; ++v) f0[v] = rng.uniform();
  for (double p : {1.5, 2.5, 4.0}) {
    const auto a = energy_decay_test(g, f0, p, 3, 4000);
    const auto b = energy_decay_test_serial(g, f0, p, 3, 4000);
    CHECK(a.estimate == b.estimate);
    CHECK(a.std_error == b.std_error);
    // direct average of the drop over vertices
    double e0 = oracle::energy(g.edges(), f0, p), s = 0.0;
    for (Vertex v = 0; v < 30; ++v) {
      Profile f = f0;
      f[v] = oracle::argmin_psi(oracle::neighbour_values(g, f0, v), p);
      s += (e0 - oracle::energy(g.edges(), f, p)) / e0;
    }
    CHECK(a.exact == doctest::Approx(s / 30).epsilon(1e-6));
    CHECK(std::fabs(a.estimate - a.exact) <= 5 * a.std_error);
    CHECK(a.bound == doctest::Approx(c_p(p) * rate_F(30, p, average_degree(g))));
    const auto t1 = energy_decay_test(g, f0, p, 3, 2000, DecayMode::trajectory);
    const auto t2 = energy_decay_test_serial(g, f0, p, 3, 2000, DecayMode::trajectory);
    CHECK(t1.estimate == t2.estimate);
    CHECK(t1.pass);
    CHECK(std::isnan(t1.exact));
  }
  CHECK_THROWS_AS(energy_decay_test(g, Profile(30, 1.0), 2.0, 1, 100), Error);
}

TEST_CASE("floor horizons") {
  CHECK(floor_instance(Construction::cycle1, {.n = 64}).horizon == 128);
  CHECK(floor_instance(Construction::cycle1, {.n = 16}).horizon == 2);
  CHECK_THROWS_AS(floor_instance(Construction::cycle1, {.n = 30}), Error);
  // 16^3 / 68 = 60.23...
  CHECK(floor_instance(Construction::secondcycle, {.n = 16}).horizon == 60);
  CHECK(floor_instance(Construction::secondcycle, {.n = 16}).g.size() == 64);
  // N = 2*15 + 2 = 32 and 32 * 16^2 / 2048 = 4 exactly; strictly below gives 3
  CHECK(floor_instance(Construction::parallel_paths, {.k = 2, .L = 16}).horizon == 3);
  CHECK_THROWS_AS(floor_instance(Construction::parallel_paths, {.k = 2, .L = 6}), Error);
  CHECK_THROWS_AS(floor_instance(Construction::tree_tn, {.n = 4}), Error);
  CHECK_THROWS_AS(floor_instance(Construction::accordion, {.n = 24, .d = 2, .p = PValue::finite(4)}), Error);
  CHECK_THROWS_AS(floor_instance(Construction::accordion, {.n = 22, .d = 2, .p = PValue::finite(2)}), Error);
  // 24^3 * 2 / 6400 = 4.32
  const auto acc = floor_instance(Construction::accordion, {.n = 24, .d = 2, .p = PValue::finite(2)});
  CHECK(acc.horizon == 4);
  CHECK(acc.g.size() == accordion_layout(2, 24).vertex_count());
  // 0.25 * 8^4 = 1024 at p = 1.5
  CHECK(floor_instance(Construction::tree_tn, {.n = 8, .p = PValue::finite(1.5)}).horizon == 1023);
}

TEST_CASE("floor certification") {
  std::vector<Schedule> scheds{UniformRandom{1}, UniformRandom{2}, RoundRobin{}};
  for (auto [c, prm] : {std::pair{Construction::cycle1, FloorParams{.n = 64}},
                        std::pair{Construction::secondcycle, FloorParams{.n = 12}},
                        std::pair{Construction::parallel_paths, FloorParams{.k = 3, .L = 16}},
                        std::pair{Construction::tree_tn, FloorParams{.n = 6, .p = PValue::finite(1.5)}},
                        std::pair{Construction::hdn, FloorParams{.n = 8, .d = 2, .p = PValue::finite(1.5)}},
                        std::pair{Construction::accordion, FloorParams{.n = 24, .d = 2, .p = PValue::finite(2.5)}}}) {
    const auto a = floor_certify(c, prm, scheds);
    const auto b = floor_certify_serial(c, prm, scheds);
    INFO(construction_name(c));
    CHECK(a.pass);
    CHECK(a.violations == 0);
    REQUIRE(a.results.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(a.results[i].min_osc == b.results[i].min_osc);
      CHECK(a.results[i].steps == a.horizon);
      CHECK(a.results[i].min_osc >= 0.5 - 1e-12);
    }
  }
  CHECK(parse_construction("tn") == Construction::tree_tn);
  CHECK_FALSE(parse_construction("pentagon").has_value());
}

TEST_CASE("scaling study mechanics") {
  ScalingSpec spec;
  spec.family = Family::cycle;
  spec.sizes = {8, 12, 16};
  spec.reps = 4;
  const auto a = scaling_study(spec);
  const auto b = scaling_study_serial(spec);
  REQUIRE(a.cells.size() == 12);
  for (std::size_t i = 0; i < 12; ++i) CHECK(a.cells[i].tau == b.cells[i].tau);
  REQUIRE(a.fit.has_value());
  std::vector<double> x, y;
  for (const auto& r : a.rows) {
    x.push_back(std::log(static_cast<double>(r.N)));
    y.push_back(std::log(*r.median));
  }
  CHECK(a.fit->slope == doctest::Approx(oracle::ols_slope(x, y)));
  spec.sizes = {8, 12};
  CHECK_THROWS_AS(scaling_study(spec), Error);
  spec.sizes = {8, 12, 16};
  spec.max_steps = 5;
  const auto censored = scaling_study(spec);
  CHECK_FALSE(censored.fit.has_value());
  CHECK_FALSE(censored.pass);
}

TEST_CASE("consensus time grows on T_n and H_{d,n}") {
  ScalingSpec spec;
  spec.family = Family::tree_tn;
  spec.p = PValue::finite(1.5);
  spec.sizes = {2, 3, 4, 5};
  spec.reps = 5;
  spec.epsilon = 0.5;
  auto r = scaling_study(spec);
  CHECK(r.predicted == doctest::Approx(4.0));
  CHECK(r.monotone);
  spec.family = Family::cliques_hdn;
  spec.sizes = {2, 4, 6, 8};
  r = scaling_study(spec);
  CHECK(r.monotone);
}

TEST_CASE("verification suite and fault injection") {
  CHECK(verify_suite(VerifyLevel::quick).pass());
  // reflect the update through f(v): breaks monotonicity
  const UpdateKernel flipped = [](const Graph& g, const Profile& f, Vertex v, PValue p) {
    return 2 * f[v] - update_value(g, f, v, p);
  };
  const auto bad = verify_suite(VerifyLevel::quick, flipped);
  CHECK_FALSE(bad.pass());
  bool mono_failed = false;
  for (const auto& c : bad.checks)
    if (c.name.find("monoton") != std::string::npos) mono_failed = !c.pass;
  CHECK(mono_failed);
  // the p = 2 rule used for every exponent
  const UpdateKernel mean = [](const Graph& g, const Profile& f, Vertex v, PValue) {
    return update_value(g, f, v, PValue::finite(2));
  };
  CHECK_FALSE(verify_suite(VerifyLevel::quick, mean).pass());
}
