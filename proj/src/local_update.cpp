#include "lpdyn/local_update.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lpdyn {

PValue PValue::finite(double p) {
  if (!std::isfinite(p) || !(p > 1.0 + 1e-6))
    throw Error("p must be finite and exceed 1 + 1e-6 (got " + std::to_string(p) + ")");
  return PValue(p);
}

PValue PValue::from_double(double p) {
  if (p == std::numeric_limits<double>::infinity()) return infinity();
  return finite(p);
}

PValue PValue::parse(const std::string& text) {
  std::string t = text;
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "infinity" || t == "oo") return infinity();
  std::size_t used = 0;
  double p = 0.0;
  try {
    p = std::stod(t, &used);
  } catch (const std::exception&) {
    throw Error("cannot parse p from '" + text + "'");
  }
  if (used != t.size()) throw Error("cannot parse p from '" + text + "'");
  return from_double(p);
}

std::string PValue::str() const {
  if (is_infinite()) return "inf";
  std::ostringstream out;
  out << p_;
  return out.str();
}

namespace {

double midpoint(double a, double b) { return (a + b) * 0.5; }

double derivative_at(std::span<const Vertex> nbrs, const Profile& f, double y, double p) {
  const double e = p - 1.0;
  double sum = 0.0;
  for (Vertex w : nbrs) {
    const double diff = y - f[w];
    if (diff > 0.0)
      sum += abs_pow(diff, e);
    else if (diff < 0.0)
      sum -= abs_pow(diff, e);
  }
  return p * sum;
}

}  // namespace

std::pair<double, RootBracket> update_value_bracketed(const Graph& g, const Profile& f, Vertex v,
                                                      PValue p, const SolverConfig& cfg) {
  const auto nbrs = g.neighbors(v);
  if (nbrs.empty()) throw Error("vertex " + std::to_string(v) + " has no neighbours");
  double lo = f[nbrs[0]], hi = lo;
  for (Vertex w : nbrs) {
    const double x = f[w];
    if (!std::isfinite(x)) throw Error("non-finite neighbour value at vertex " + std::to_string(w));
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  auto exact = [](double y) { return std::pair{y, RootBracket{y, y}}; };

  if (nbrs.size() == 1) return exact(f[nbrs[0]]);
  if (nbrs.size() == 2) return exact(midpoint(f[nbrs[0]], f[nbrs[1]]));
  if (p.is_infinite() || lo == hi) return exact(midpoint(hi, lo));
  if (p.value() == 2.0) {
    double sum = 0.0;
    for (Vertex w : nbrs) sum += f[w];
    return exact(std::clamp(sum / static_cast<double>(nbrs.size()), lo, hi));
  }

  const double pv = p.value();
  const double tol = std::max(cfg.relative_tolerance * (hi - lo), cfg.absolute_floor);
  double a = lo, b = hi;
  for (int it = 0; it < cfg.max_iterations && b - a > tol; ++it) {
    const double mid = midpoint(a, b);
    if (mid <= a || mid >= b) break;
    const double d = derivative_at(nbrs, f, mid, pv);
    if (d == 0.0) return exact(mid);
    if (d < 0.0)
      a = mid;
    else
      b = mid;
  }
  // Return the bracket point with the smallest |Psi'|.
  const double m = midpoint(a, b);
  double best = m;
  double best_d = std::fabs(derivative_at(nbrs, f, m, pv));
  for (double y : {a, b}) {
    const double d = std::fabs(derivative_at(nbrs, f, y, pv));
    if (d < best_d) {
      best = y;
      best_d = d;
    }
  }
  return {best, RootBracket{a, b}};
}

double update_value(const Graph& g, const Profile& f, Vertex v, PValue p, const SolverConfig& cfg) {
  return update_value_bracketed(g, f, v, p, cfg).first;
}

double psi_derivative(const Graph& g, const Profile& f, Vertex v, double y, double p) {
  return derivative_at(g.neighbors(v), f, y, p);
}

bool is_p_superharmonic_at(const Graph& g, const Profile& f, Vertex v, double p, double tol) {
  return psi_derivative(g, f, v, f[v], p) >= -tol;
}

bool is_p_subharmonic_at(const Graph& g, const Profile& f, Vertex v, double p, double tol) {
  return psi_derivative(g, f, v, f[v], p) <= tol;
}

double infinity_laplacian(const Graph& g, const Profile& f, Vertex v) {
  const auto nbrs = g.neighbors(v);
  if (nbrs.empty()) throw Error("vertex " + std::to_string(v) + " has no neighbours");
  double lo = f[nbrs[0]], hi = lo;
  for (Vertex w : nbrs) {
    lo = std::min(lo, f[w]);
    hi = std::max(hi, f[w]);
  }
  return hi + lo - 2.0 * f[v];
}

double infinity_laplacian_l1(const Graph& g, const Profile& f) {
  double total = 0.0;
  for (Vertex v = 0; v < g.size(); ++v)
    if (!g.is_boundary(v)) total += std::fabs(infinity_laplacian(g, f, v));
  return total;
}

}  // namespace lpdyn
