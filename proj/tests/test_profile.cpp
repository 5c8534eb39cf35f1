#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "lpdyn/generators.hpp"
#include "lpdyn/profile.hpp"
#include "lpdyn/rng.hpp"
#include "oracles.hpp"

using namespace lpdyn;

TEST_CASE("energy on a short path") {
  const Graph g = gen_segment(1);
  const Profile f(std::vector<double>{0, 1, 3});
  CHECK(energy(g, f, 2) == doctest::Approx(5));
  CHECK(energy(g, f, 3) == doctest::Approx(9));
  CHECK_THROWS_AS(energy(g, f, 1.0), Error);
  CHECK_THROWS_AS(energy(g, f, INFINITY), Error);
  CHECK(oscillation(f) == 3);
}

TEST_CASE("energy delta matches recomputation") {
  Rng rng(5);
  const Graph g = gen_random_connected(20, 0.2, 9);
  for (int i = 0; i < 200; ++i) {
    Profile f(g.size());
    for (Vertex v = 0; v < g.size(); ++v) f[v] = rng.uniform();
    const auto v = static_cast<Vertex>(rng.below(g.size()));
    const double y = rng.uniform();
    const double p = 1.1 + 4 * rng.uniform();
    Profile h = f;
    h[v] = y;
    const double want = oracle::energy(g.edges(), h, p) - oracle::energy(g.edges(), f, p);
    CHECK(energy_delta_at(g, f, v, y, p) == doctest::Approx(want).epsilon(1e-9));
    CHECK(energy(g, f, p) == doctest::Approx(oracle::energy(g.edges(), f, p)).epsilon(1e-12));
  }
}

TEST_CASE("ordered value index against a scan") {
  Rng rng(1);
  std::vector<double> vals(37);
  for (auto& x : vals) x = rng.uniform();
  OrderedValueIndex idx(vals);
  for (int i = 0; i < 2000; ++i) {
    const auto v = static_cast<Vertex>(rng.below(vals.size()));
    vals[v] = rng.below(4) == 0 ? 0.5 : rng.uniform();
    idx.set(v, vals[v]);
    CHECK(idx.min() == *std::min_element(vals.begin(), vals.end()));
    CHECK(idx.max() == *std::max_element(vals.begin(), vals.end()));
    CHECK(idx.value(v) == vals[v]);
  }
  CHECK(idx.size() == 37);
}

TEST_CASE("gradients and lexicographic potential") {
  const Graph g = gen_segment(1);
  const Profile f(std::vector<double>{0, 1, 3});
  CHECK(sorted_gradients(g, f) == std::vector<double>{2, 1});
  CHECK(lex_potential(g, f) == doctest::Approx(2.0 / 3 + 1.0 / 9));
  const Graph c = gen_cycle(12);
  Profile a(12, 0.0);
  a[0] = 1.0;
  CHECK(lex_potential(c, a) == doctest::Approx(1.0 / 3 + 1.0 / 9));
  CHECK(lex_potential(c, Profile(12, 0.7)) == 0.0);
}

TEST_CASE("distances and powers") {
  const Profile f(std::vector<double>{0, 1, 2}), h(std::vector<double>{1, 1, 0});
  CHECK(lp_distance(f, h, Norm::one) == 3);
  CHECK(lp_distance(f, h, Norm::infinity) == 2);
  CHECK_THROWS_AS(lp_distance(f, Profile(2), Norm::one), Error);
  CHECK(abs_pow(0.0, 0.5) == 0.0);
  CHECK(abs_pow(-2.0, 3.0) == doctest::Approx(8.0));
}

TEST_CASE("presets") {
  const Graph c = gen_cycle(8);
  const Profile step = preset_profile(c, "cycle_step");
  for (Vertex v = 0; v < 8; ++v) CHECK(step[v] == (v >= 4 ? 1.0 : 0.0));

  const Graph c4n = gen_cycle(16);
  const Profile sc = preset_profile(c4n, "second_cycle");
  // index i sits at coordinate i - 7; n = 4
  for (Vertex i = 0; i < 16; ++i) {
    const int x = static_cast<int>(i) - 7;
    const double want = std::abs(x) == 4 ? 0.5 : (std::abs(x) > 4 ? 1.0 : 0.0);
    CHECK(sc[i] == want);
  }

  const Graph b = gen_barbell(3);
  const Profile bs = preset_profile(b, "barbell_step");
  CHECK(bs[0] == 0.0);
  CHECK(bs[3] == 0.5);
  CHECK(bs[6] == 1.0);

  const Graph pp = gen_parallel_paths(2, 4);
  const Profile ph = preset_profile(pp, "parallel_halves");
  CHECK(ph[0] == 0.0);
  CHECK(ph[1] == 1.0);
  CHECK(ph[3] == 0.5);

  const Graph s = gen_segment(3, true);
  const Profile up = preset_profile(s, "upper_envelope", {}, {{0, 0.0}, {6, 0.25}});
  CHECK(up[0] == 0.0);
  CHECK(up[6] == 0.25);
  CHECK(up[3] == 1.0);
  const Profile bseg = preset_profile(s, "boundary_segment");
  CHECK(bseg[0] == 1.0);
  CHECK(bseg[3] == 0.0);

  const Profile u1 = preset_profile(c, "uniform_random", {{"seed", 3}});
  const Profile u2 = preset_profile(c, "uniform_random", {{"seed", 3}});
  CHECK(u1 == u2);
  CHECK(preset_profile(c, "constant", {{"c", 2.5}})[7] == 2.5);

  CHECK_THROWS_AS(preset_profile(c, "barbell_step"), Error);
  CHECK_THROWS_AS(preset_profile(c, "no_such_preset"), Error);
  CHECK_THROWS_AS(preset_profile(gen_tree_tn(3), "tn_profile"), Error);
}

TEST_CASE("T_n profile") {
  const double p = 3.0;
  const int n = 4;
  const Graph t = gen_tree_tn(n);
  const Profile f = preset_profile(t, "tn_profile", {{"p", p}});
  const double e = std::pow(n, -p / (p - 1));
  CHECK(f[0] == doctest::Approx(e));
  CHECK(f[2 * n] == doctest::Approx(1 - e));
  CHECK(f[2 * n + 1] == 0.0);
  CHECK(f[6 * n] == 1.0);
}

TEST_CASE("profile files") {
  const Profile f = parse_profile("# x\n1 0.5\n0 0.25\n", 2);
  CHECK(f[0] == 0.25);
  CHECK(f[1] == 0.5);
  CHECK_THROWS_AS(parse_profile("0 1\n", 2), Error);
  CHECK_THROWS_AS(parse_profile("0 1\n5 1\n", 2), Error);
  CHECK_THROWS_AS(parse_profile("0 nan\n1 1\n", 2), Error);
}
