#include "lpdyn/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "lpdyn/dual.hpp"
#include "lpdyn/dynamics.hpp"
#include "lpdyn/experiments.hpp"
#include "lpdyn/extension.hpp"
#include "lpdyn/generators.hpp"
#include "lpdyn/rng.hpp"

namespace lpdyn {

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

struct Sizes {
  int trials;      // kernel property trials per p
  int graphs;      // random graphs for run-based checks
  int duality_runs;
  int steps;
};

Sizes sizes_for(VerifyLevel level) {
  if (level == VerifyLevel::quick) return {200, 4, 10, 2000};
  return {1000, 20, 100, 10000};
}

const PValue kPs[] = {PValue::finite(1.5), PValue::finite(2.0), PValue::finite(2.5),
                      PValue::finite(4.0), PValue::infinity()};

std::string show(const Profile& f, const Graph& g, Vertex v) {
  std::ostringstream out;
  out.precision(17);
  out << "v=" << v << " f(v)=" << f[v] << " neighbours {";
  for (Vertex w : g.neighbors(v)) out << " " << f[w];
  out << " }";
  return out.str();
}

template <class Fn>
CheckResult timed(const std::string& name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{name, true, "", 0.0};
  try {
    fn(r);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void fail(CheckResult& r, const std::string& detail) {
  if (r.pass) r.detail = detail;
  r.pass = false;
}

Graph small_random_graph(Rng& rng, int boundary = 0) {
  const int n = 4 + static_cast<int>(rng.below(12));
  return gen_random_connected(n, 0.35, rng(), boundary);
}

CheckResult check_monotonicity(const Sizes& sz, const UpdateKernel& k) {
  return timed("monotonicity", [&](CheckResult& r) {
    Rng rng(11);
    for (PValue p : kPs)
      for (int i = 0; i < sz.trials && r.pass; ++i) {
        Graph g = small_random_graph(rng);
        Profile f(g.size()), h(g.size());
        for (Vertex v = 0; v < g.size(); ++v) {
          f[v] = rng.uniform();
          h[v] = f[v] + (rng.below(3) == 0 ? 0.0 : 0.3 * rng.uniform());
        }
        const Vertex v = static_cast<Vertex>(rng.below(g.size()));
        const double a = k(g, f, v, p), b = k(g, h, v, p);
        if (a > b + 1e-12)
          fail(r, "p=" + p.str() + " f<=g but update(f)=" + std::to_string(a) + " > update(g)=" +
                      std::to_string(b) + "; f: " + show(f, g, v) + "; g: " + show(h, g, v));
      }
    if (r.pass) r.detail = std::to_string(sz.trials) + " trials per p";
  });
}

CheckResult check_equivariance(const Sizes& sz, const UpdateKernel& k) {
  return timed("affine equivariance", [&](CheckResult& r) {
    Rng rng(12);
    for (PValue p : kPs)
      for (int i = 0; i < sz.trials && r.pass; ++i) {
        Graph g = small_random_graph(rng);
        const double a = 0.1 + 3.0 * rng.uniform(), b = rng.uniform() - 0.5;
        Profile f(g.size()), h(g.size());
        for (Vertex v = 0; v < g.size(); ++v) {
          f[v] = rng.uniform();
          h[v] = a * f[v] + b;
        }
        const Vertex v = static_cast<Vertex>(rng.below(g.size()));
        const double lhs = k(g, h, v, p), rhs = a * k(g, f, v, p) + b;
        if (std::fabs(lhs - rhs) > 1e-11 * std::max(1.0, a))
          fail(r, "p=" + p.str() + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                      " mismatch " + std::to_string(lhs - rhs) + "; " + show(f, g, v));
      }
  });
}

CheckResult check_range_and_root(const Sizes& sz, const UpdateKernel& k) {
  return timed("range containment and root residual", [&](CheckResult& r) {
    Rng rng(13);
    for (PValue p : kPs)
      for (int i = 0; i < sz.trials && r.pass; ++i) {
        Graph g = small_random_graph(rng);
        Profile f(g.size());
        for (Vertex v = 0; v < g.size(); ++v) f[v] = rng.uniform();
        const Vertex v = static_cast<Vertex>(rng.below(g.size()));
        double lo = 1e300, hi = -1e300;
        for (Vertex w : g.neighbors(v)) {
          lo = std::min(lo, f[w]);
          hi = std::max(hi, f[w]);
        }
        const double y = k(g, f, v, p);
        if (y < lo || y > hi) {
          fail(r, "p=" + p.str() + " update " + std::to_string(y) + " outside neighbour range; " +
                      show(f, g, v));
          continue;
        }
        if (!p.is_infinite()) {
          const double res = std::fabs(psi_derivative(g, f, v, y, p.value()));
          const double allowed = p.value() * std::pow(hi - lo, p.value() - 1.0) * 1e-10;
          if (res > allowed)
            fail(r, "p=" + p.str() + " |Psi'| residual " + std::to_string(res) + "; " + show(f, g, v));
        }
      }
  });
}

CheckResult check_p_independence() {
  return timed("degree-2 p-independence", [&](CheckResult& r) {
    Graph g = gen_cycle(32);
    Profile f0 = preset_profile(g, "uniform_random", {{"seed", 5}});
    Rng rng(14);
    Explicit sched;
    for (int i = 0; i < 20000; ++i) sched.sequence.push_back(static_cast<Vertex>(rng.below(32)));
    RunConfig cfg;
    cfg.stop_mode = StopMode::horizon;
    cfg.max_steps = sched.sequence.size();
    cfg.p = PValue::infinity();
    const Profile ref = run(g, f0, sched, cfg).final_profile;
    for (double p : {1.5, 2.0, 3.0}) {
      cfg.p = PValue::finite(p);
      if (!(run(g, f0, sched, cfg).final_profile == ref))
        fail(r, "p=" + std::to_string(p) + " trajectory differs from p=inf");
    }
  });
}

CheckResult check_duality(const Sizes& sz) {
  return timed("fragmentation duality", [&](CheckResult& r) {
    Rng rng(15);
    double worst = 0.0;
    for (const Graph& g : {gen_cycle(32), gen_segment(16, true)}) {
      const auto& interior = g.interior();
      for (int run_i = 0; run_i < sz.duality_runs; ++run_i) {
        Profile f0 = preset_profile(g, "uniform_random", {{"seed", static_cast<double>(rng.below(1u << 30))}});
        std::vector<Vertex> seq(sz.steps);
        for (auto& v : seq) v = interior[rng.below(interior.size())];
        std::vector<Vertex> probes(10);
        for (auto& w : probes) w = static_cast<Vertex>(rng.below(g.size()));
        for (double gap : duality_gaps(g, f0, seq, probes)) worst = std::max(worst, gap);
      }
    }
    r.detail = "max gap " + std::to_string(worst);
    if (worst > 1e-10) r.pass = false;
  });
}

CheckResult check_extension(const Sizes& sz) {
  return timed("extension residual and tie-break", [&](CheckResult& r) {
    Rng rng(16);
    for (int i = 0; i < sz.graphs * 2 && r.pass; ++i) {
      const int n = 6 + static_cast<int>(rng.below(30));
      const int b = 2 + static_cast<int>(rng.below(std::min(7, n / 2 - 1)));
      Graph g = gen_random_connected(n, 0.15, rng(), b);
      Profile src(g.size(), 0.0);
      double lo = 1, hi = 0;
      for (Vertex v : g.boundary()) {
        src[v] = rng.uniform();
        lo = std::min(lo, src[v]);
        hi = std::max(hi, src[v]);
      }
      const auto a = extend(g, src, TieBreak::canonical);
      const auto c = extend(g, src, TieBreak::reversed);
      if (a.residual > 1e-10 * std::max(hi - lo, 1e-300))
        fail(r, "residual " + std::to_string(a.residual) + " on random graph n=" + std::to_string(n));
      if (lp_distance(a.h, c.h, Norm::infinity) > 1e-9)
        fail(r, "tie-break orders disagree on random graph n=" + std::to_string(n));
    }
  });
}

Profile upper_envelope(const Graph& g, Rng& rng) {
  Profile f(g.size(), 1.0);
  for (Vertex b : g.boundary()) f[b] = rng.uniform();
  return f;
}

CheckResult check_keylip(const Sizes& sz) {
  return timed("keylip inequalities and superharmonicity", [&](CheckResult& r) {
    Rng rng(17);
    for (int i = 0; i < sz.graphs && r.pass; ++i) {
      const int n = 8 + static_cast<int>(rng.below(18));
      Graph g = gen_random_connected(n, 0.2, rng(), 2 + static_cast<int>(rng.below(4)));
      const Profile f0 = upper_envelope(g, rng);
      const Profile h = extend(g, f0).h;
      const double nv = static_cast<double>(g.interior().size());
      RunConfig cfg;
      cfg.stop_mode = StopMode::horizon;
      cfg.max_steps = static_cast<std::uint64_t>(sz.steps);
      run(g, f0, UniformRandom{rng()}, cfg, [&](std::uint64_t t, Vertex, double, const Profile& f) {
        const double lap = infinity_laplacian_l1(g, f);
        const double dinf = lp_distance(f, h, Norm::infinity), d1 = lp_distance(f, h, Norm::one);
        if (dinf > nv * lap + 1e-9 || d1 > nv * nv * lap + 1e-9)
          fail(r, "keylip violated at t=" + std::to_string(t));
        for (Vertex v : g.interior())
          if (infinity_laplacian(g, f, v) > 1e-12)
            fail(r, "superharmonicity lost at t=" + std::to_string(t) + " vertex " + std::to_string(v));
        return r.pass;
      });
    }
  });
}

CheckResult check_round_robin() {
  return timed("round-robin boundary contraction", [&](CheckResult& r) {
    Graph g = gen_segment(16, true);
    Profile f0(g.size(), 1.0);
    f0[0] = 0.0;
    f0[32] = 1.0;
    const Profile h = extend(g, f0).h;
    const auto n = g.interior().size();
    RunConfig cfg;
    cfg.stop_mode = StopMode::horizon;
    cfg.max_steps = 200 * n;
    run(g, f0, RoundRobin{}, cfg, [&](std::uint64_t t, Vertex, double, const Profile& f) {
      if (t % n != 0) return true;
      const double k = static_cast<double>(t / n);
      const double bound = static_cast<double>(n) * std::exp(-k / (2.0 * n * n)) + 1e-9;
      if (lp_distance(f, h, Norm::one) > bound)
        fail(r, "t=" + std::to_string(t) + " exceeds the contraction bound");
      return r.pass;
    });
  });
}

CheckResult check_modulus(const Sizes& sz) {
  return timed("modulus certificate", [&](CheckResult& r) {
    Rng rng(18);
    for (int i = 0; i < sz.graphs / 2 + 2 && r.pass; ++i) {
      const int n = 6 + static_cast<int>(rng.below(20));
      Graph g = gen_random_connected(n, 0.2, rng());
      const auto diam = diameter(g);
      const auto kmax = k_for_epsilon(diam, 0.01);
      Profile f0 = preset_profile(g, "uniform_random", {{"seed", static_cast<double>(i)}});
      RunConfig cfg;
      cfg.stop_mode = StopMode::horizon;
      cfg.max_steps = kmax * g.size();
      cfg.record_every = g.size();
      const auto rec = run(g, f0, RoundRobin{}, cfg);
      for (const auto& s : rec.samples) {
        const auto k = s.t / g.size();
        if (s.osc > modulus_bound(diam, k) + 1e-12)
          fail(r, "osc " + std::to_string(s.osc) + " above bound at k=" + std::to_string(k));
      }
    }
  });
}

CheckResult check_lex(const Sizes& sz) {
  return timed("lex potential decrease", [&](CheckResult& r) {
    Rng rng(19);
    for (int i = 0; i < sz.trials && r.pass; ++i) {
      Graph g = gen_random_connected(5 + static_cast<int>(rng.below(10)), 0.3, rng());
      if (g.edge_count() > 50) continue;
      Profile f(g.size());
      for (Vertex v = 0; v < g.size(); ++v) f[v] = rng.uniform();
      const Vertex v = static_cast<Vertex>(rng.below(g.size()));
      Profile next = f;
      next[v] = update_value(g, f, v, PValue::infinity());
      if (std::fabs(next[v] - f[v]) <= 1e-12) continue;
      const auto before = sorted_gradients(g, f), after = sorted_gradients(g, next);
      if (!std::lexicographical_compare(after.begin(), after.end(), before.begin(), before.end()) ||
          lex_potential(g, next) > lex_potential(g, f) + 1e-12)
        fail(r, "no decrease at " + show(f, g, v));
    }
  });
}

CheckResult check_mass(const Sizes& sz) {
  return timed("mass conservation and Q/E increments", [&](CheckResult& r) {
    Rng rng(20);
    LineMeasure mu = LineMeasure::delta(0);
    const int steps = sz.steps * 10;
    for (int k = 0; k < steps && r.pass; ++k) {
      const std::int64_t i = static_cast<std::int64_t>(rng.below(21)) - 10;
      const double q0 = mu.q_functional(), e0 = mu.e_functional();
      const double h = mu.split(i);
      if (std::fabs(mu.q_functional() - q0 - h) > 1e-12 ||
          std::fabs(mu.e_functional() - e0 - h * h) > 1e-12)
        fail(r, "increment identity off at split " + std::to_string(k));
    }
    if (std::fabs(mu.total() - 1.0) > 1e-12) fail(r, "total mass drifted");
  });
}

CheckResult check_run_invariants(const Sizes& sz) {
  return timed("maximum principle and energy decrease", [&](CheckResult& r) {
    Rng rng(21);
    for (int i = 0; i < sz.graphs && r.pass; ++i) {
      Graph g = gen_random_connected(10 + static_cast<int>(rng.below(20)), 0.2, rng());
      Profile f0 = preset_profile(g, "uniform_random", {{"seed", static_cast<double>(i)}});
      for (PValue p : kPs) {
        RunConfig cfg;
        cfg.p = p;
        cfg.stop_mode = StopMode::horizon;
        cfg.max_steps = static_cast<std::uint64_t>(sz.steps);
        cfg.record_every = 1;
        const auto rec = run(g, f0, UniformRandom{rng()}, cfg);
        for (std::size_t k = 1; k < rec.samples.size(); ++k) {
          const auto& a = rec.samples[k - 1];
          const auto& b = rec.samples[k];
          if (b.min < a.min || b.max > a.max) fail(r, "maximum principle broken, p=" + p.str());
          if (!p.is_infinite() && b.energy > a.energy + 1e-12 * std::max(1.0, a.energy))
            fail(r, "energy increased, p=" + p.str() + " at t=" + std::to_string(b.t));
        }
      }
    }
  });
}

CheckResult check_floor() {
  return timed("cycle floor", [&](CheckResult& r) {
    std::vector<Schedule> scheds{RoundRobin{}};
    for (std::uint64_t s = 0; s < 5; ++s) scheds.push_back(UniformRandom{s});
    for (int n : {16, 32, 64}) {
      const auto rep = floor_certify(Construction::cycle1, {n, 0, 2, 0, PValue::infinity()}, scheds);
      if (!rep.pass) fail(r, "violation on C_" + std::to_string(n));
    }
  });
}

}  // namespace

VerifyReport verify_suite(VerifyLevel level, const UpdateKernel& kernel) {
  const UpdateKernel k = kernel ? kernel : UpdateKernel([](const Graph& g, const Profile& f, Vertex v, PValue p) {
    return update_value(g, f, v, p);
  });
  const Sizes sz = sizes_for(level);
  VerifyReport rep;
  rep.checks.push_back(check_monotonicity(sz, k));
  rep.checks.push_back(check_equivariance(sz, k));
  rep.checks.push_back(check_range_and_root(sz, k));
  rep.checks.push_back(check_p_independence());
  rep.checks.push_back(check_duality(sz));
  rep.checks.push_back(check_extension(sz));
  rep.checks.push_back(check_keylip(sz));
  rep.checks.push_back(check_round_robin());
  rep.checks.push_back(check_modulus(sz));
  rep.checks.push_back(check_lex(sz));
  rep.checks.push_back(check_mass(sz));
  rep.checks.push_back(check_run_invariants(sz));
  rep.checks.push_back(check_floor());
  return rep;
}

}  // namespace lpdyn
