#pragma once

#include <limits>
#include <string>
#include <utility>

#include "lpdyn/graph.hpp"
#include "lpdyn/profile.hpp"

namespace lpdyn {

// Exponent of the dynamics: a finite p > 1 + 1e-6, or infinity (midrange
// rule).
class PValue {
 public:
  static PValue finite(double p);
  static PValue infinity() { return PValue(std::numeric_limits<double>::infinity()); }
  // Accepts a number or "inf"/"infinity".
  static PValue parse(const std::string& text);
  static PValue from_double(double p);

  bool is_infinite() const { return p_ == std::numeric_limits<double>::infinity(); }
  double value() const { return p_; }
  std::string str() const;

  friend bool operator==(PValue, PValue) = default;

 private:
  explicit PValue(double p) : p_(p) {}
  double p_;
};

struct SolverConfig {
  double relative_tolerance = 1e-13;  // times the neighbour value range
  double absolute_floor = 1e-15;
  int max_iterations = 200;
};

// Bracket [lo, hi] left by bisection; Psi' changes sign across it.
struct RootBracket {
  double lo;
  double hi;
};

// The value the dynamics assigns to v. Degree 1 copies the neighbour,
// degree 2 returns the midpoint for every p, p = 2 returns the mean and
// p = inf the midrange. Otherwise bisection on the sign of Psi'.
double update_value(const Graph& g, const Profile& f, Vertex v, PValue p,
                    const SolverConfig& cfg = {});

// Same, also returning the final bisection bracket (collapsed to the value
// for the exact shortcuts).
std::pair<double, RootBracket> update_value_bracketed(const Graph& g, const Profile& f, Vertex v,
                                                      PValue p, const SolverConfig& cfg = {});

// p * sum_{w~v} |y - f(w)|^{p-1} sign(y - f(w)).
double psi_derivative(const Graph& g, const Profile& f, Vertex v, double y, double p);

bool is_p_superharmonic_at(const Graph& g, const Profile& f, Vertex v, double p, double tol);
bool is_p_subharmonic_at(const Graph& g, const Profile& f, Vertex v, double p, double tol);

// max_{w~v} f(w) + min_{w~v} f(w) - 2 f(v).
double infinity_laplacian(const Graph& g, const Profile& f, Vertex v);

// Sum of |infinity_laplacian| over interior vertices.
double infinity_laplacian_l1(const Graph& g, const Profile& f);

}  // namespace lpdyn
