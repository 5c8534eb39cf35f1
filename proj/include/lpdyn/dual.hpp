#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/local_update.hpp"
#include "lpdyn/profile.hpp"

namespace lpdyn {

// Nonnegative mass per vertex. Never renormalised.
class MassMeasure {
 public:
  MassMeasure() = default;
  explicit MassMeasure(std::size_t n) : mass_(n, 0.0) {}
  static MassMeasure delta(std::size_t n, Vertex w);

  std::size_t size() const { return mass_.size(); }
  double operator[](Vertex v) const { return mass_[v]; }
  double& operator[](Vertex v) { return mass_[v]; }
  double total() const;
  // sum_v mu(v) f(v)
  double integrate(const Profile& f) const;

 private:
  std::vector<double> mass_;
};

// Moves the mass at w to its two neighbours in equal halves. Throws Error
// unless w has degree exactly 2.
MassMeasure fragment_step(const Graph& g, MassMeasure mu, Vertex w);
void fragment_in_place(const Graph& g, MassMeasure& mu, Vertex w);

// Runs the dynamics forward along `schedule` with exponent p and the
// fragmentation process backward from delta_w; returns
// |f_t(w) - sum_v mu_t(v) f_0(v)|. Every interior vertex must have
// degree 2.
double duality_check(const Graph& g, const Profile& f0, std::span<const Vertex> schedule, Vertex w,
                      PValue p = PValue::infinity());

// Same for several probe vertices sharing one forward run.
std::vector<double> duality_gaps(const Graph& g, const Profile& f0, std::span<const Vertex> schedule,
                                 std::span<const Vertex> probes, PValue p = PValue::infinity());

// Measure on the integers, stored on a window that grows on demand.
class LineMeasure {
 public:
  static LineMeasure delta(std::int64_t at = 0);

  double at(std::int64_t i) const;
  // Splits the mass at i equally onto i-1 and i+1; returns the mass split.
  double split(std::int64_t i);

  double total() const;
  double q_functional() const;  // sum i^2 mu(i)
  double e_functional() const;  // sum_{i,j} |i-j| mu(i) mu(j), O(window)
  // Mass at |i - center| >= r, i.e. outside the open ball of radius r.
  double mass_outside(std::int64_t center, std::int64_t r) const;
  std::int64_t lowest() const { return offset_; }
  std::int64_t highest() const { return offset_ + static_cast<std::int64_t>(mass_.size()) - 1; }

 private:
  void cover(std::int64_t i);
  std::int64_t offset_ = 0;
  std::vector<double> mass_;
};

// theta^2 r^3 / 2: fewest splits that can move mass theta out of the open
// ball of radius r.
double mass_escape_bound(double theta, double r);

}  // namespace lpdyn
