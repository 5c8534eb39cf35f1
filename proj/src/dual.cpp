#include "lpdyn/dual.hpp"

#include <cmath>

#include "lpdyn/local_update.hpp"

namespace lpdyn {

MassMeasure MassMeasure::delta(std::size_t n, Vertex w) {
  if (w >= n) throw Error("delta vertex out of range");
  MassMeasure mu(n);
  mu.mass_[w] = 1.0;
  return mu;
}

double MassMeasure::total() const {
  double s = 0.0;
  for (double m : mass_) s += m;
  return s;
}

double MassMeasure::integrate(const Profile& f) const {
  if (f.size() != mass_.size()) throw Error("measure and profile dimensions differ");
  double s = 0.0;
  for (std::size_t v = 0; v < mass_.size(); ++v) s += mass_[v] * f[static_cast<Vertex>(v)];
  return s;
}

void fragment_in_place(const Graph& g, MassMeasure& mu, Vertex w) {
  const auto nb = g.neighbors(w);
  if (nb.size() != 2)
    throw Error("fragmentation needs degree 2 at vertex " + std::to_string(w) + " (degree " +
                std::to_string(nb.size()) + ")");
  const double half = mu[w] * 0.5;
  mu[w] = 0.0;
  mu[nb[0]] += half;
  mu[nb[1]] += half;
}

MassMeasure fragment_step(const Graph& g, MassMeasure mu, Vertex w) {
  fragment_in_place(g, mu, w);
  return mu;
}

namespace {

void require_degree_two(const Graph& g) {
  for (Vertex v : g.interior())
    if (g.degree(v) != 2)
      throw Error("duality check needs every interior vertex to have degree 2 (vertex " +
                  std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + ")");
}

}  // namespace

std::vector<double> duality_gaps(const Graph& g, const Profile& f0, std::span<const Vertex> schedule,
                                 std::span<const Vertex> probes, PValue p) {
  require_degree_two(g);
  if (f0.size() != g.size()) throw Error("profile has the wrong dimension");
  Profile f = f0;
  for (Vertex v : schedule) {
    if (v >= g.size() || g.is_boundary(v)) throw Error("schedule must contain interior vertices only");
    f[v] = update_value(g, f, v, p);
  }
  std::vector<double> gaps;
  for (Vertex w : probes) {
    MassMeasure mu = MassMeasure::delta(g.size(), w);
    for (auto it = schedule.rbegin(); it != schedule.rend(); ++it) fragment_in_place(g, mu, *it);
    gaps.push_back(std::fabs(f[w] - mu.integrate(f0)));
  }
  return gaps;
}

double duality_check(const Graph& g, const Profile& f0, std::span<const Vertex> schedule, Vertex w,
                      PValue p) {
  const Vertex probe[] = {w};
  return duality_gaps(g, f0, schedule, probe, p).front();
}

LineMeasure LineMeasure::delta(std::int64_t at) {
  LineMeasure m;
  m.offset_ = at;
  m.mass_.assign(1, 1.0);
  return m;
}

void LineMeasure::cover(std::int64_t i) {
  if (mass_.empty()) {
    offset_ = i;
    mass_.assign(1, 0.0);
    return;
  }
  if (i < offset_) {
    mass_.insert(mass_.begin(), static_cast<std::size_t>(offset_ - i), 0.0);
    offset_ = i;
  } else if (i > highest()) {
    mass_.resize(static_cast<std::size_t>(i - offset_ + 1), 0.0);
  }
}

double LineMeasure::at(std::int64_t i) const {
  if (mass_.empty() || i < offset_ || i > highest()) return 0.0;
  return mass_[static_cast<std::size_t>(i - offset_)];
}

double LineMeasure::split(std::int64_t i) {
  cover(i - 1);
  cover(i + 1);
  auto idx = [&](std::int64_t j) { return static_cast<std::size_t>(j - offset_); };
  const double m = mass_[idx(i)];
  mass_[idx(i)] = 0.0;
  mass_[idx(i - 1)] += m * 0.5;
  mass_[idx(i + 1)] += m * 0.5;
  return m;
}

double LineMeasure::total() const {
  double s = 0.0;
  for (double m : mass_) s += m;
  return s;
}

double LineMeasure::q_functional() const {
  double s = 0.0;
  for (std::size_t k = 0; k < mass_.size(); ++k) {
    const auto i = static_cast<double>(offset_ + static_cast<std::int64_t>(k));
    s += i * i * mass_[k];
  }
  return s;
}

double LineMeasure::e_functional() const {
  // 2 sum_j mu(j) sum_{i<j} (j - i) mu(i), with running sums of mu and i mu.
  double below = 0.0, below_moment = 0.0, s = 0.0;
  for (std::size_t k = 0; k < mass_.size(); ++k) {
    const auto j = static_cast<double>(offset_ + static_cast<std::int64_t>(k));
    s += mass_[k] * (j * below - below_moment);
    below += mass_[k];
    below_moment += j * mass_[k];
  }
  return 2.0 * s;
}

double LineMeasure::mass_outside(std::int64_t center, std::int64_t r) const {
  double s = 0.0;
  for (std::size_t k = 0; k < mass_.size(); ++k) {
    const std::int64_t i = offset_ + static_cast<std::int64_t>(k);
    if (std::llabs(i - center) >= r) s += mass_[k];
  }
  return s;
}

double mass_escape_bound(double theta, double r) {
  if (!(theta > 0.0 && theta <= 1.0)) throw Error("theta must lie in (0,1]");
  if (!(r >= 1.0)) throw Error("radius must be >= 1");
  return theta * theta * r * r * r / 2.0;
}

}  // namespace lpdyn
