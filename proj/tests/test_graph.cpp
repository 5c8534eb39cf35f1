#include <cstdio>
#include <filesystem>
#include <set>

#include "doctest.h"
#include "lpdyn/generators.hpp"
#include "lpdyn/graph.hpp"
#include "oracles.hpp"

using namespace lpdyn;

namespace {

bool connected(const Graph& g) {
  for (auto d : bfs_distances(g, 0))
    if (d == SIZE_MAX) return false;
  return true;
}

}  // namespace

TEST_CASE("cycle and segment shapes") {
  const Graph c = gen_cycle(16);
  CHECK(c.size() == 16);
  CHECK(c.edge_count() == 16);
  CHECK(diameter(c) == 8);
  CHECK(oracle::diameter(c.size(), c.edges()) == 8);
  CHECK_THROWS_AS(gen_cycle(2), GraphError);

  const Graph s = gen_segment(5, true);
  CHECK(s.size() == 11);
  CHECK(s.boundary() == std::vector<Vertex>{0, 10});
  CHECK(s.interior().size() == 9);
  CHECK(diameter(s) == 10);
}

TEST_CASE("barbell") {
  const Graph b2 = gen_barbell(2);
  CHECK(b2.size() == 7);
  for (int t : {2, 3, 4, 6}) {
    const Graph b = gen_barbell(t);
    CHECK(b.size() == static_cast<std::size_t>(4 * t - 1));
    // two cliques K_t plus the 2t path edges
    CHECK(b.edge_count() == static_cast<std::size_t>(t * (t - 1) + 2 * t));
    CHECK(diameter(b) == oracle::diameter(b.size(), b.edges()));
    CHECK(diameter(b) == static_cast<std::size_t>(2 * t + 2));
  }
}

TEST_CASE("parallel paths") {
  const Graph g = gen_parallel_paths(3, 8);
  CHECK(g.size() == 23);
  CHECK(g.edge_count() == 24);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 3);
  CHECK(diameter(g) == 8);
  CHECK(oracle::diameter(g.size(), g.edges()) == 8);
  // first inner vertex of path 0 touches a
  CHECK(g.neighbors(2)[0] == 0);
}

TEST_CASE("tree T_n") {
  for (int n : {1, 2, 5}) {
    const Graph t = gen_tree_tn(n);
    CHECK(t.size() == static_cast<std::size_t>(6 * n + 1));
    CHECK(t.edge_count() == static_cast<std::size_t>(6 * n));
    CHECK(t.degree(0) == static_cast<std::size_t>(2 * n + 1));
    CHECK(connected(t));
  }
}

TEST_CASE("H_{d,n}") {
  const Graph h = gen_hdn(6, 12);
  CHECK(h.size() == 49);
  CHECK(h.degree(0) == 13);
  CHECK(h.degree(24) == 13);
  // a clique vertex: d-1 clique mates plus the segment end
  CHECK(h.degree(25) == 6);
  CHECK_THROWS_AS(gen_hdn(5, 12), GraphError);
  CHECK_THROWS_AS(gen_hdn(1, 12), GraphError);
}

TEST_CASE("accordion layout") {
  const Graph g = gen_accordion(2, 6);
  const auto lay = accordion_layout(2, 6);
  CHECK(lay.m == 3);
  CHECK(lay.vertex_count() == 54);
  CHECK(g.size() == 54);
  CHECK(connected(g));
  std::set<Vertex> seen;
  for (int k = -3; k <= 3; ++k)
    for (int j = 1; j <= 2; ++j) {
      seen.insert(lay.upper(k, j));
      seen.insert(lay.lower(k, j));
    }
  for (int i = -6; i <= 6; ++i) {
    seen.insert(lay.w(i));
    seen.insert(lay.u(i));
  }
  CHECK(seen.size() == 54);
  // path ends hang off the extreme anti-cliques
  auto adjacent = [&](Vertex a, Vertex b) {
    for (Vertex x : g.neighbors(a))
      if (x == b) return true;
    return false;
  };
  CHECK(adjacent(lay.w(-6), lay.upper(-3, 1)));
  CHECK(adjacent(lay.w(6), lay.lower(-3, 2)));
  CHECK(adjacent(lay.u(-6), lay.upper(3, 1)));
  CHECK(adjacent(lay.u(6), lay.lower(3, 1)));
  // an anti-clique has no internal edges
  CHECK_FALSE(adjacent(lay.upper(0, 1), lay.upper(0, 2)));
  CHECK(adjacent(lay.upper(0, 1), lay.upper(1, 2)));
}

TEST_CASE("random connected graphs") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen_random_connected(25, 0.12, seed, 5);
    CHECK(g.size() == 25);
    CHECK(g.boundary().size() == 5);
    CHECK(connected(g));
    for (const auto& e : g.edges()) CHECK_FALSE((g.is_boundary(e.u) && g.is_boundary(e.v)));
    const Graph again = gen_random_connected(25, 0.12, seed, 5);
    CHECK(again.edges() == g.edges());
    CHECK(diameter(g) == diameter_serial(g));
    CHECK(diameter(g) == oracle::diameter(g.size(), g.edges()));
  }
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}, {0, 1}, {1, 2}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(4, {{0, 1}, {2, 3}}), GraphError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 2}}, {0, 1}), GraphError);
  const Graph ok = Graph::from_edges(3, {{1, 2}, {0, 1}}, {0, 2});
  CHECK(ok.interior() == std::vector<Vertex>{1});
  CHECK(ok.edges().front() == Edge{0, 1});
  CHECK(average_degree(ok) == doctest::Approx(4.0 / 3.0));
}

TEST_CASE("edge list parsing") {
  const Graph g = parse_edge_list("# triangle\n3 3\n0 1\n1 2\n0 2\n");
  CHECK(g.edge_count() == 3);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  try {
    parse_edge_list("3 2\n0 1\n1 x\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  const auto bv = parse_boundary_values("0 0.5\n2 0.75\n");
  REQUIRE(bv.size() == 2);
  CHECK(bv[1].v == 2);
  CHECK(bv[1].value == 0.75);
  CHECK_THROWS_AS(parse_boundary_values("0 1.5\n"), ParseError);
  CHECK_THROWS_AS(parse_boundary_values("0\n"), ParseError);
}

TEST_CASE("edge list round trip") {
  const Graph g = gen_barbell(4);
  const auto path = std::filesystem::temp_directory_path() / "lpdyn_roundtrip.edges";
  save_edge_list(g, path.string());
  const Graph back = load_graph(path.string());
  CHECK(back.edges() == g.edges());
  std::filesystem::remove(path);
  CHECK_THROWS_AS(load_graph("/nonexistent/file.edges"), Error);
}
