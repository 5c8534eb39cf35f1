#pragma once

#include <cstdint>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/profile.hpp"
#include "lpdyn/schedule.hpp"

namespace lpdyn {

// Simple path with both ends fixed and every inner vertex free.
struct Bridge {
  std::vector<Vertex> path;  // gamma_0 .. gamma_l
  double slope = 0.0;        // (h(gamma_l) - h(gamma_0)) / l

  std::size_t length() const { return path.empty() ? 0 : path.size() - 1; }
};

// One step of the extension algorithm.
struct ExtensionStep {
  enum class Kind { constant_component, bridge };
  Kind kind;
  std::vector<Vertex> vertices;  // vertices fixed by this step
  Vertex anchor = 0;             // constant_component: the single adjacent fixed vertex
  Bridge bridge;                 // bridge step only
};

struct ExtensionResult {
  Profile h;
  double residual = 0.0;  // max over interior of |Delta_inf h|
  std::vector<ExtensionStep> audit;
};

// Ordering among bridges of equal maximal slope. canonical prefers the
// shortest bridge, then the smallest (b, b'), then the BFS path over sorted
// adjacency; reversed prefers the shortest, then the largest (b, b'), then
// reverse-sorted adjacency.
enum class TieBreak { canonical, reversed };

// Infinity-harmonic extension of the boundary values of `boundary_source`
// (entries at interior vertices are ignored). Throws Error when g has no
// boundary.
ExtensionResult extend(const Graph& g, const Profile& boundary_source,
                       TieBreak tie = TieBreak::canonical);
ExtensionResult extend(const Graph& g, const std::vector<BoundaryValue>& values,
                       TieBreak tie = TieBreak::canonical);

// Maximal-slope bridge through the free component W, given which vertices
// are fixed and their values. Throws Error if W touches fewer than two
// fixed vertices.
Bridge max_slope_bridge(const Graph& g, const std::vector<std::uint8_t>& fixed,
                        const Profile& values, const std::vector<Vertex>& component,
                        TieBreak tie = TieBreak::canonical);

// max over interior v of |Delta_inf h(v)|.
double verify_extension(const Graph& g, const Profile& h);

// Path from a boundary vertex to a boundary vertex through the edge
// (v, w), found by descending greedily from v and ascending greedily from w.
// Empty if the walk revisits a vertex.
std::vector<Vertex> greedy_bridge_through_edge(const Graph& g, const Profile& h, Vertex v, Vertex w);

struct FixedPointCheck {
  bool converged = false;
  std::uint64_t steps = 0;
  double gap = 0.0;  // final max |f - h|
};

// Runs the p = inf dynamics from f0 for at most `horizon` steps and reports
// whether max |f_t - h| reached `tol`, h the extension of f0 on the boundary.
FixedPointCheck lipschitz_fixed_point_check(const Graph& g, const Profile& f0,
                                            const Schedule& sched, std::uint64_t horizon,
                                            double tol);

}  // namespace lpdyn
