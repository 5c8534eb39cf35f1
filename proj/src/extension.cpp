#include "lpdyn/extension.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "lpdyn/dynamics.hpp"
#include "lpdyn/local_update.hpp"

namespace lpdyn {

namespace {

constexpr std::size_t unreached = std::numeric_limits<std::size_t>::max();

bool slopes_tied(double a, double b) {
  return std::fabs(a - b) <= 1e-14 * std::max(std::fabs(a), std::fabs(b));
}

// BFS from the fixed vertex b through the free vertices of W only.
struct Search {
  std::vector<std::size_t> dist;
  std::vector<Vertex> parent;
};

Search search_from(const Graph& g, const std::vector<std::uint8_t>& in_w, Vertex b, TieBreak tie) {
  Search s{std::vector<std::size_t>(g.size(), unreached), std::vector<Vertex>(g.size(), 0)};
  std::deque<Vertex> queue;
  auto visit = [&](Vertex from, Vertex to) {
    if (!in_w[to] || s.dist[to] != unreached) return;
    s.dist[to] = from == b && s.dist[b] == unreached ? 1 : s.dist[from] + 1;
    s.parent[to] = from;
    queue.push_back(to);
  };
  auto expand = [&](Vertex x) {
    const auto nb = g.neighbors(x);
    if (tie == TieBreak::canonical)
      for (auto it = nb.begin(); it != nb.end(); ++it) visit(x, *it);
    else
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) visit(x, *it);
  };
  expand(b);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    expand(x);
  }
  return s;
}

struct Candidate {
  Vertex b, b2;
  std::size_t length;
  double slope;
};

// True if c should replace best.
bool better(const Candidate& c, const Candidate& best, TieBreak tie) {
  if (!slopes_tied(c.slope, best.slope)) return c.slope > best.slope;
  if (c.length != best.length) return c.length < best.length;
  const auto key = std::pair{c.b, c.b2};
  const auto best_key = std::pair{best.b, best.b2};
  return tie == TieBreak::canonical ? key < best_key : key > best_key;
}

std::vector<std::vector<Vertex>> free_components(const Graph& g, const std::vector<std::uint8_t>& fixed) {
  std::vector<std::vector<Vertex>> comps;
  std::vector<std::uint8_t> done(g.size(), 0);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (fixed[s] || done[s]) continue;
    std::vector<Vertex> comp{s};
    done[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!fixed[w] && !done[w]) {
          done[w] = 1;
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<Vertex> adjacent_fixed(const Graph& g, const std::vector<std::uint8_t>& fixed,
                                   const std::vector<Vertex>& component) {
  std::vector<Vertex> out;
  for (Vertex v : component)
    for (Vertex w : g.neighbors(v))
      if (fixed[w]) out.push_back(w);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

Bridge max_slope_bridge(const Graph& g, const std::vector<std::uint8_t>& fixed, const Profile& values,
                        const std::vector<Vertex>& component, TieBreak tie) {
  const auto ends = adjacent_fixed(g, fixed, component);
  if (ends.size() < 2) throw Error("component touches fewer than two fixed vertices; no bridge");
  std::vector<std::uint8_t> in_w(g.size(), 0);
  for (Vertex v : component) {
    if (fixed[v]) throw Error("component contains a fixed vertex");
    in_w[v] = 1;
  }

  std::optional<Candidate> best;
  std::optional<Search> best_search;
  for (Vertex b : ends) {
    Search s = search_from(g, in_w, b, tie);
    bool improved = false;
    for (Vertex b2 : ends) {
      if (b2 == b) continue;
      std::size_t d = unreached;
      for (Vertex x : g.neighbors(b2))
        if (in_w[x] && s.dist[x] != unreached) d = std::min(d, s.dist[x] + 1);
      if (d == unreached) continue;
      Candidate c{b, b2, d, (values[b2] - values[b]) / static_cast<double>(d)};
      if (!best || better(c, *best, tie)) {
        best = c;
        improved = true;
      }
    }
    if (improved) best_search = std::move(s);
  }
  if (!best) throw Error("no bridge through component");

  // Walk back from the far end to b.
  const auto& s = *best_search;
  const auto nb = g.neighbors(best->b2);
  std::optional<Vertex> last;
  auto consider = [&](Vertex x) {
    if (!last && in_w[x] && s.dist[x] + 1 == best->length) last = x;
  };
  if (tie == TieBreak::canonical)
    for (auto it = nb.begin(); it != nb.end(); ++it) consider(*it);
  else
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) consider(*it);

  Bridge bridge;
  bridge.slope = best->slope;
  bridge.path.push_back(best->b2);
  for (Vertex x = *last;; x = s.parent[x]) {
    bridge.path.push_back(x);
    if (s.dist[x] == 1) break;
  }
  bridge.path.push_back(best->b);
  std::reverse(bridge.path.begin(), bridge.path.end());
  return bridge;
}

ExtensionResult extend(const Graph& g, const Profile& source, TieBreak tie) {
  if (!g.has_boundary()) throw Error("extension needs a nonempty boundary");
  if (source.size() != g.size()) throw Error("boundary profile has the wrong dimension");

  ExtensionResult res;
  res.h = Profile(g.size(), 0.0);
  std::vector<std::uint8_t> fixed(g.size(), 0);
  for (Vertex b : g.boundary()) {
    if (!std::isfinite(source[b])) throw Error("non-finite boundary value at " + std::to_string(b));
    res.h[b] = source[b];
    fixed[b] = 1;
  }

  for (;;) {
    const auto comps = free_components(g, fixed);
    if (comps.empty()) break;
    for (const auto& comp : comps) {
      const auto ends = adjacent_fixed(g, fixed, comp);
      if (ends.size() == 1) {
        ExtensionStep step{ExtensionStep::Kind::constant_component, comp, ends[0], {}};
        for (Vertex v : comp) {
          res.h[v] = res.h[ends[0]];
          fixed[v] = 1;
        }
        res.audit.push_back(std::move(step));
        continue;
      }
      Bridge br = max_slope_bridge(g, fixed, res.h, comp, tie);
      const double start = res.h[br.path.front()];
      const std::size_t len = br.length();
      ExtensionStep step{ExtensionStep::Kind::bridge, {}, 0, {}};
      for (std::size_t i = 1; i < len; ++i) {
        const Vertex x = br.path[i];
        res.h[x] = start + static_cast<double>(i) * br.slope;
        fixed[x] = 1;
        step.vertices.push_back(x);
      }
      step.bridge = std::move(br);
      res.audit.push_back(std::move(step));
    }
  }
  res.residual = verify_extension(g, res.h);
  return res;
}

ExtensionResult extend(const Graph& g, const std::vector<BoundaryValue>& values, TieBreak tie) {
  Profile src(g.size(), std::numeric_limits<double>::quiet_NaN());
  apply_boundary_values(src, g, values);
  return extend(g, src, tie);
}

double verify_extension(const Graph& g, const Profile& h) {
  double worst = 0.0;
  for (Vertex v : g.interior()) worst = std::max(worst, std::fabs(infinity_laplacian(g, h, v)));
  return worst;
}

std::vector<Vertex> greedy_bridge_through_edge(const Graph& g, const Profile& h, Vertex v, Vertex w) {
  std::vector<std::uint8_t> used(g.size(), 0);
  auto walk = [&](Vertex from, bool up) {
    std::vector<Vertex> out;
    Vertex x = from;
    while (!g.is_boundary(x)) {
      const auto nb = g.neighbors(x);
      Vertex pick = nb[0];
      for (Vertex y : nb)
        if (up ? h[y] > h[pick] : h[y] < h[pick]) pick = y;
      if (used[pick]) return std::optional<std::vector<Vertex>>{};
      used[pick] = 1;
      out.push_back(pick);
      x = pick;
    }
    return std::optional<std::vector<Vertex>>{out};
  };
  used[v] = used[w] = 1;
  auto down = walk(v, false);
  if (!down) return {};
  auto up = walk(w, true);
  if (!up) return {};
  std::vector<Vertex> path(down->rbegin(), down->rend());
  path.push_back(v);
  path.push_back(w);
  path.insert(path.end(), up->begin(), up->end());
  return path;
}

FixedPointCheck lipschitz_fixed_point_check(const Graph& g, const Profile& f0, const Schedule& sched,
                                            std::uint64_t horizon, double tol) {
  RunConfig cfg;
  cfg.p = PValue::infinity();
  cfg.stop_mode = StopMode::boundary_approx;
  cfg.epsilon = tol;
  cfg.max_steps = std::max<std::uint64_t>(horizon, 1);
  const auto rec = run(g, f0, sched, cfg);
  FixedPointCheck out;
  out.converged = !rec.censored();
  out.steps = rec.stopping_time.value_or(rec.steps);
  out.gap = lp_distance(rec.final_profile, *rec.target, Norm::infinity);
  return out;
}

}  // namespace lpdyn
