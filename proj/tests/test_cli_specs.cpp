#include "doctest.h"
#include "lpdyn/generators.hpp"
#include "lpdyn/specs.hpp"

using namespace lpdyn;

TEST_CASE("key-value lists") {
  const auto kv = parse_key_values("n=4,seed=7");
  CHECK(kv.at("n") == "4");
  CHECK(kv.at("seed") == "7");
  CHECK(parse_key_values("").empty());
  CHECK_THROWS_AS(parse_key_values("n4"), Error);
  CHECK_THROWS_AS(parse_key_values("=4"), Error);
}

TEST_CASE("graph specs") {
  auto s = parse_graph_spec("cycle:n=16");
  CHECK(s.family == Family::cycle);
  CHECK(s.n == 16);
  s = parse_graph_spec("segment:n=8,boundary=1");
  CHECK(s.boundary);
  s = parse_graph_spec("random:n=20,q=0.2,seed=18446744073709551615,boundary=4");
  CHECK(s.seed == 18446744073709551615ULL);
  CHECK(s.boundary_count == 4);
  CHECK(s.q == 0.2);
  s = parse_graph_spec("file:a.edges:b.txt");
  CHECK(s.path == "a.edges");
  CHECK(s.boundary_path == "b.txt");
  CHECK(generate(parse_graph_spec("hdn:d=2,n=4")).size() == 17);
  CHECK_THROWS_AS(parse_graph_spec("moebius:n=3"), Error);
  CHECK_THROWS_AS(parse_graph_spec("cycle:n=1.5"), Error);
  CHECK_THROWS_AS(parse_graph_spec("cycle:m=4"), Error);
  CHECK_THROWS_AS(parse_graph_spec("random:seed=-1"), Error);
}

TEST_CASE("profile and schedule specs") {
  auto p = parse_profile_spec("preset:uniform_random:seed=4");
  CHECK(p.preset == "uniform_random");
  CHECK(p.params.at("seed") == 4.0);
  CHECK(parse_profile_spec("file:x.txt").path == "x.txt");
  CHECK_THROWS_AS(parse_profile_spec("bogus"), Error);
  CHECK_THROWS_AS(parse_profile_spec("preset:"), Error);

  CHECK(std::holds_alternative<RoundRobin>(parse_schedule_spec("roundrobin")));
  CHECK(std::get<UniformRandom>(parse_schedule_spec("random:seed=5")).seed == 5);
  CHECK_THROWS_AS(parse_schedule_spec("random:speed=5"), Error);
  CHECK_THROWS_AS(parse_schedule_spec("sometimes"), Error);
}
