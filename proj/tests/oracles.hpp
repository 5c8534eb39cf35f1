#pragma once

// Brute-force reference computations used by the tests. None of these call
// into the library's own solvers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/profile.hpp"

namespace oracle {

using lpdyn::Edge;
using lpdyn::Graph;
using lpdyn::Profile;
using lpdyn::Vertex;

// All-pairs shortest paths by Floyd-Warshall over an edge list.
inline std::size_t diameter(std::size_t n, const std::vector<Edge>& edges) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max() / 4;
  std::vector<std::size_t> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const auto& e : edges) d[e.u * n + e.v] = d[e.v * n + e.u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  std::size_t best = 0;
  for (auto x : d) best = std::max(best, x);
  return best;
}

// Psi(y) = sum |y - x_i|^p in long double.
inline long double psi(const std::vector<double>& xs, long double y, double p) {
  long double s = 0;
  for (double x : xs) s += std::pow(std::fabs(y - static_cast<long double>(x)), static_cast<long double>(p));
  return s;
}

// Minimiser of the strictly convex Psi by golden-section search.
inline double argmin_psi(const std::vector<double>& xs, double p) {
  long double lo = *std::min_element(xs.begin(), xs.end());
  long double hi = *std::max_element(xs.begin(), xs.end());
  const long double r = (std::sqrt(5.0L) - 1) / 2;
  for (int i = 0; i < 400 && hi - lo > 0; ++i) {
    const long double a = hi - r * (hi - lo), b = lo + r * (hi - lo);
    if (psi(xs, a, p) < psi(xs, b, p))
      hi = b;
    else
      lo = a;
  }
  return static_cast<double>((lo + hi) / 2);
}

inline std::vector<double> neighbour_values(const Graph& g, const Profile& f, Vertex v) {
  std::vector<double> xs;
  for (Vertex w : g.neighbors(v)) xs.push_back(f[w]);
  return xs;
}

// Infinity-harmonic extension by repeated midrange sweeps over the interior.
inline Profile midrange_iteration(const Graph& g, const Profile& boundary_source, int max_sweeps = 2'000'000) {
  Profile h(g.size(), 0.0);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (Vertex b : g.boundary()) {
    lo = std::min(lo, boundary_source[b]);
    hi = std::max(hi, boundary_source[b]);
  }
  for (Vertex v = 0; v < g.size(); ++v) h[v] = g.is_boundary(v) ? boundary_source[v] : lo;
  for (int s = 0; s < max_sweeps; ++s) {
    double change = 0.0;
    for (Vertex v : g.interior()) {
      double a = std::numeric_limits<double>::infinity(), b = -a;
      for (Vertex w : g.neighbors(v)) {
        a = std::min(a, h[w]);
        b = std::max(b, h[w]);
      }
      const double nv = (a + b) / 2;
      change = std::max(change, std::fabs(nv - h[v]));
      h[v] = nv;
    }
    if (change == 0.0) break;
  }
  return h;
}

// Energy by direct summation over the edge list.
inline double energy(const std::vector<Edge>& edges, const Profile& f, double p) {
  long double s = 0;
  for (const auto& e : edges) s += std::pow(std::fabs(static_cast<long double>(f[e.u]) - f[e.v]), static_cast<long double>(p));
  return static_cast<double>(s);
}

inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  long double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  long double num = 0, den = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return static_cast<double>(num / den);
}

}  // namespace oracle
