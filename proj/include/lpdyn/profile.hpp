#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "lpdyn/graph.hpp"

namespace lpdyn {

// An opinion assignment, one real per vertex, indexed like the graph.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::size_t n, double fill = 0.0) : values_(n, fill) {}
  explicit Profile(std::vector<double> values) : values_(std::move(values)) {}

  std::size_t size() const { return values_.size(); }
  double operator[](Vertex v) const { return values_[v]; }
  double& operator[](Vertex v) { return values_[v]; }

  std::span<const double> values() const { return values_; }
  std::span<double> values() { return values_; }

  friend bool operator==(const Profile&, const Profile&) = default;

 private:
  std::vector<double> values_;
};

// Min/max over per-vertex values with O(log n) point updates. Backed by a
// tournament tree over the vertex index so repeated values need no special
// handling.
class OrderedValueIndex {
 public:
  OrderedValueIndex() = default;
  explicit OrderedValueIndex(std::span<const double> values);

  void set(Vertex v, double value);
  double value(Vertex v) const { return min_[leaf_ + v]; }
  double min() const { return min_[1]; }
  double max() const { return max_[1]; }
  double spread() const { return max() - min(); }
  std::size_t size() const { return count_; }

 private:
  std::size_t count_ = 0;
  std::size_t leaf_ = 1;
  std::vector<double> min_;
  std::vector<double> max_;
};

double oscillation(const Profile& f);

// Sum over undirected edges of |f(u) - f(v)|^p. Throws for p <= 1 or
// non-finite p.
double energy(const Graph& g, const Profile& f, double p);

// E_p(f with v -> new_value) - E_p(f), from the edges at v only.
double energy_delta_at(const Graph& g, const Profile& f, Vertex v, double new_value, double p);

// Absolute edge gradients sorted non-increasing.
std::vector<double> sorted_gradients(const Graph& g, const Profile& f);

// sum_i |grad f(e_i)| 3^-i over the non-increasing rearrangement of the
// absolute gradients. Diagnostic only: the weights underflow past a few
// hundred edges.
double lex_potential(const Graph& g, const Profile& f);

enum class Norm { one, infinity };

double lp_distance(const Profile& f, const Profile& h, Norm norm);

// |x|^e computed as exp(e ln|x|), with 0 for x = 0.
double abs_pow(double x, double e);

// Named initial profiles for the generator families. Parameters are read
// from `params` (e.g. {"p", 2.5} for the T_n profile). Throws Error when the
// preset does not match the graph's family.
//
//   cycle_step        C_n:             1 on v >= n/2, 0 otherwise
//   second_cycle      C_4n:            1/2 at |v| = n, 1 for |v| > n (v centred on -2n+1..2n)
//   barbell_step      barbell:         0 left of the centre, 1 right, 1/2 at the centre
//   parallel_halves   parallel paths:  0 nearer a, 1 nearer z, 1/2 equidistant
//   tn_profile        T_n (needs p):   linear ramp with ends n^{-p/(p-1)} and leaves 0/1
//   hdn_step          H_{d,n}:         0 on W cliques and [-n,0), 1/2 at 0, 1 on (0,n] and U cliques
//   accordion_step    accordion:       0 on H and w_j,u_j (j>0), 1 on H_- and w_{-j},u_{-j}, 1/2 at w_0,u_0
//   boundary_segment  segment+boundary: 1 on the boundary, 0 inside
//   upper_envelope    any boundary graph: boundary value b (default 0, see below), 1 inside
//   lower_envelope    any boundary graph: boundary value b, 0 inside
//   constant          any graph:       the value "c"
//   uniform_random    any graph:       i.i.d. uniform[0,1] from "seed"
//
// upper/lower_envelope and boundary-aware presets take boundary values from
// `boundary_values` when given, otherwise from the parameter "b".
Profile preset_profile(const Graph& g, const std::string& preset,
                       const std::map<std::string, double>& params = {},
                       const std::vector<BoundaryValue>& boundary_values = {});

// Profile file: lines "v value"; '#' comments. Every vertex must appear.
Profile load_profile(const std::string& path, std::size_t n);
Profile parse_profile(const std::string& text, std::size_t n);

// Overwrites the boundary entries of f with the given values.
void apply_boundary_values(Profile& f, const Graph& g, const std::vector<BoundaryValue>& values);

}  // namespace lpdyn
