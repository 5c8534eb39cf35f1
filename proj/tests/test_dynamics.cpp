#include <cmath>

#include "doctest.h"
#include "lpdyn/dynamics.hpp"
#include "lpdyn/generators.hpp"
#include "lpdyn/schedule.hpp"

using namespace lpdyn;

TEST_CASE("schedulers") {
  const Graph s = gen_segment(2, true);  // interior 1, 2, 3
  Scheduler rr(s, RoundRobin{});
  for (Vertex want : {1u, 2u, 3u, 1u, 2u}) CHECK(*rr.next() == want);
  Scheduler ex(s, Explicit{{3, 1}});
  CHECK(*ex.next() == 3);
  CHECK(*ex.next() == 1);
  CHECK_FALSE(ex.next().has_value());
  CHECK_THROWS_AS(Scheduler(s, Explicit{{0}}), Error);
  CHECK_THROWS_AS(Scheduler(s, RoundRobin{{1, 2}}), Error);
  CHECK_THROWS_AS(Scheduler(s, RoundRobin{{1, 2, 2}}), Error);

  Scheduler a(s, UniformRandom{9}), b(s, UniformRandom{9});
  for (int i = 0; i < 100; ++i) {
    const Vertex v = *a.next();
    CHECK(v == *b.next());
    CHECK_FALSE(s.is_boundary(v));
  }
}

TEST_CASE("cover times") {
  const std::vector<Vertex> interior{0, 1, 2};
  CHECK(cover_times(RoundRobin{}, interior, 10) == std::vector<std::uint64_t>{3, 6, 9});
  CHECK(cover_times(Explicit{{0, 0, 1, 2, 2, 1, 0}}, interior, 100) == std::vector<std::uint64_t>{4, 7});
}

TEST_CASE("schedule files") {
  CHECK(parse_schedule("1 2\n# c\n3").sequence == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(parse_schedule("1 x"), Error);
}

TEST_CASE("hand-computed run on C_4") {
  const Graph c = gen_cycle(4);
  const Profile f0(std::vector<double>{0, 0, 1, 1});
  RunConfig cfg;
  cfg.epsilon = 0.3;
  cfg.record_every = 1;
  const auto r = run(c, f0, Explicit{{1, 3, 0, 2}}, cfg);
  // 1 -> 0.5, 3 -> 0.5, 0 -> 0.5, 2 -> 0.5
  REQUIRE(r.stopping_time.has_value());
  CHECK(*r.stopping_time == 4);
  CHECK(r.samples.front().osc == 1.0);
  CHECK(r.samples.back().osc == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(r.final_profile[0] == 0.5);
  CHECK(r.cover_marks == std::vector<std::uint64_t>{4});
}

TEST_CASE("stopping conventions") {
  const Graph c = gen_cycle(8);
  RunConfig cfg;
  cfg.epsilon = 0.5;
  auto r = run(c, Profile(8, 0.3), UniformRandom{1}, cfg);
  CHECK(*r.stopping_time == 0);
  CHECK(r.steps == 0);

  cfg.epsilon = 1e-12;
  cfg.max_steps = 50;
  Profile f(8, 0.0);
  f[0] = 1.0;
  r = run(c, f, UniformRandom{1}, cfg);
  CHECK(r.censored());
  CHECK(r.steps == 50);

  cfg.stop_mode = StopMode::horizon;
  r = run(c, f, UniformRandom{1}, cfg);
  CHECK(*r.stopping_time == 50);

  r = run(c, f, Explicit{{1, 2}}, cfg);
  CHECK(r.censored());
  CHECK(r.steps == 2);

  cfg.stop_mode = StopMode::boundary_approx;
  cfg.p = PValue::finite(2);
  CHECK_THROWS_AS(run(gen_segment(3, true), Profile(7), UniformRandom{}, cfg), Error);
  cfg.p = PValue::infinity();
  CHECK_THROWS_AS(run(c, f, UniformRandom{}, cfg), Error);
  CHECK_THROWS_AS(run(c, Profile(3), UniformRandom{}, cfg), Error);
  cfg.stop_mode = StopMode::consensus;
  cfg.epsilon = 1.5;
  CHECK_THROWS_AS(run(c, f, UniformRandom{}, cfg), Error);
}

TEST_CASE("boundary approximation stops at the extension") {
  const Graph s = gen_segment(4, true);
  RunConfig cfg;
  cfg.stop_mode = StopMode::boundary_approx;
  cfg.epsilon = 1e-6;
  cfg.record_every = 10;
  Profile f(9, 1.0);
  const auto r = run(s, f, UniformRandom{5}, cfg);
  REQUIRE(r.target.has_value());
  CHECK((*r.target)[4] == 1.0);
  CHECK_FALSE(r.censored());
  CHECK(r.samples.back().dist_inf <= 1e-6);
}

TEST_CASE("observer can stop a run") {
  const Graph c = gen_cycle(8);
  RunConfig cfg;
  cfg.epsilon = 1e-12;
  std::uint64_t seen = 0;
  const auto r = run(c, preset_profile(c, "cycle_step"), UniformRandom{2}, cfg,
                     [&](std::uint64_t t, Vertex, double, const Profile&) {
                       seen = t;
                       return t < 7;
                     });
  CHECK(seen == 7);
  CHECK(r.steps == 7);
  CHECK(r.censored());
}

TEST_CASE("observer sees the stopping step") {
  const Graph c = gen_cycle(8);
  RunConfig cfg;
  cfg.stop_mode = StopMode::horizon;
  cfg.max_steps = 40;
  std::uint64_t calls = 0, last = 0;
  run(c, preset_profile(c, "cycle_step"), UniformRandom{2}, cfg,
      [&](std::uint64_t t, Vertex, double, const Profile&) {
        ++calls;
        last = t;
        return true;
      });
  CHECK(calls == 40);
  CHECK(last == 40);
}

TEST_CASE("ensembles are identical in parallel and serial") {
  const Graph c = gen_cycle(24);
  const Profile f0 = preset_profile(c, "cycle_step");
  RunConfig cfg;
  cfg.record_every = 100;
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7};
  const auto a = run_ensemble(c, f0, cfg, seeds);
  const auto b = run_ensemble_serial(c, f0, cfg, seeds);
  REQUIRE(a.runs.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(a.runs[i].stopping_time == b.runs[i].stopping_time);
    CHECK(a.runs[i].final_profile == b.runs[i].final_profile);
  }
  CHECK(a.median == b.median);
  CHECK(a.mean_osc == b.mean_osc);
  CHECK(a.censored == 0);
}

TEST_CASE("censored quantiles") {
  using T = std::optional<std::uint64_t>;
  CHECK(*censored_quantile({T{1}, T{2}, T{3}, T{4}}, 0.5) == doctest::Approx(2.5));
  CHECK(*censored_quantile({T{10}, T{}, T{30}}, 0.0) == 10.0);
  CHECK(*censored_quantile({T{10}, T{}, T{30}}, 0.5) == 30.0);
  CHECK_FALSE(censored_quantile({T{10}, T{}, T{30}}, 0.9).has_value());
  CHECK_FALSE(censored_quantile({}, 0.5).has_value());
}

TEST_CASE("modulus helpers") {
  CHECK(k_for_epsilon(8, 0.5) == 100);
  CHECK(modulus_bound(8, 0) == 2.0);
  CHECK(modulus_bound(2, 6) == doctest::Approx(2 * std::exp(-1.0)));
}
