#pragma once

// Generators for the graph families used by the experiments. Every
// generator is deterministic and documents its vertex index layout so that
// initial-profile presets can address the natural coordinates of each
// construction.

#include <cstdint>

#include "lpdyn/graph.hpp"

namespace lpdyn {

// C_n: vertex i adjacent to i±1 mod n. Requires n >= 3.
Graph gen_cycle(int n);

// Path on coordinates -n..n stored at indices 0..2n (coordinate c -> c+n).
// With `boundary` the two endpoints 0 and 2n form the boundary set.
Graph gen_segment(int n, bool boundary = false);

// Barbell with 4ñ-1 vertices. Path coordinates -ñ..ñ at indices 0..2ñ.
// The left clique is {0} ∪ {2ñ+1 .. 3ñ-1}, the right clique is
// {2ñ} ∪ {3ñ .. 4ñ-2}. Requires ñ >= 2.
Graph gen_barbell(int clique_size);

// k internally disjoint paths of length L between a (index 0) and z
// (index 1). The i-th inner vertex (distance i from a, 1 <= i <= L-1) of path
// j sits at index 2 + j(L-1) + (i-1). n = k(L-1)+2. Requires k, L >= 2.
Graph gen_parallel_paths(int k, int L);

// Tree T_n on 6n+1 vertices. Segment coordinates -n..n at 0..2n; leaves
// w_1..w_2n at 2n+1..4n hang off coordinate -n; leaves u_1..u_2n at
// 4n+1..6n hang off coordinate n. Requires n >= 1.
Graph gen_tree_tn(int n);

// H_{d,n}: segment -n..n at 0..2n; m = n/d cliques W_1..W_m of size d with
// w_{i,j} at 2n+1 + (i-1)d + (j-1), each vertex adjacent to coordinate -n;
// cliques U_i likewise at 2n+1 + md + (i-1)d + (j-1), adjacent to
// coordinate n. 4n+1 vertices. Requires d >= 2 and d | n.
Graph gen_hdn(int d, int n);

// Accordion G_{d,n}, m = n/d. Two copies of the anti-clique chain H(m,d):
// the upper copy H_- holds v_{k,j} (k = -m..m, j = 1..d) at
// (k+m)d + (j-1); the lower copy H at (2m+1)d + (k+m)d + (j-1). The left
// path w_{-n}..w_n follows at base_w + (i+n) with base_w = 2(2m+1)d, the
// right path u_{-n}..u_n at base_u + (i+n) with base_u = base_w + 2n+1.
// Path endpoints are the anchors: w_{-n} is joined to V_{-m} of H_-,
// w_n to V_{-m} of H, u_{-n} to V_m of H_-, u_n to V_m of H.
// Requires d >= 2 and d | n.
Graph gen_accordion(int d, int n);

// Index helpers for the accordion layout.
struct AccordionLayout {
  int d;
  int n;
  int m;
  Vertex upper(int k, int j) const;  // v_{k,j} in H_-
  Vertex lower(int k, int j) const;  // v_{k,j} in H
  Vertex w(int i) const;             // left path, i = -n..n
  Vertex u(int i) const;             // right path, i = -n..n
  std::size_t vertex_count() const;
};
AccordionLayout accordion_layout(int d, int n);

// Erdős–Rényi graph G(n, q) resampled until connected. When
// boundary_count > 0, that many vertices (chosen by the same seed) form the
// boundary set and no edge between two boundary vertices is ever sampled.
Graph gen_random_connected(int n, double q, std::uint64_t seed, int boundary_count = 0);

// Dispatches on spec.family.
Graph generate(const GraphFamilySpec& spec);

}  // namespace lpdyn
