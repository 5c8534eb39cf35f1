#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lpdyn/dynamics.hpp"
#include "lpdyn/experiments.hpp"
#include "lpdyn/extension.hpp"
#include "lpdyn/generators.hpp"
#include "lpdyn/specs.hpp"
#include "lpdyn/verify.hpp"

using json = nlohmann::json;
using namespace lpdyn;

namespace {

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

template <class T>
json optional_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

// Builds the graph and, when a boundary value file is given, makes its
// vertices the boundary set.
Graph build_graph(const std::string& graph_spec, const std::vector<BoundaryValue>& bvals) {
  Graph g = generate(parse_graph_spec(graph_spec));
  if (bvals.empty()) return g;
  std::vector<Vertex> b;
  for (const auto& bv : bvals) b.push_back(bv.v);
  std::sort(b.begin(), b.end());
  if (b != g.boundary()) g = g.with_boundary(b);
  return g;
}

StopMode parse_stop(const std::string& s) {
  if (s == "consensus") return StopMode::consensus;
  if (s == "boundary") return StopMode::boundary_approx;
  if (s == "horizon") return StopMode::horizon;
  throw Error("stop must be consensus, boundary or horizon");
}

std::vector<int> parse_sizes(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

json profile_json(const Profile& f) {
  json a = json::array();
  for (double x : f.values()) a.push_back(x);
  return a;
}

struct SimulateArgs {
  std::string graph, boundary, profile, p = "inf", schedule = "random:seed=0", stop = "consensus", out;
  double eps = 0.5;
  std::uint64_t max_steps = 1'000'000, record_every = 0;
};

int simulate(const SimulateArgs& a) {
  const auto bvals = a.boundary.empty() ? std::vector<BoundaryValue>{} : load_boundary_values(a.boundary);
  const Graph g = build_graph(a.graph, bvals);
  const Profile f0 = make_profile(g, parse_profile_spec(a.profile), bvals);
  RunConfig cfg;
  cfg.p = PValue::parse(a.p);
  cfg.epsilon = a.eps;
  cfg.max_steps = a.max_steps;
  cfg.stop_mode = parse_stop(a.stop);
  cfg.record_every = a.record_every;
  const auto rec = run(g, f0, parse_schedule_spec(a.schedule), cfg);

  json samples = json::array();
  for (const auto& s : rec.samples)
    samples.push_back({{"t", s.t}, {"osc", s.osc}, {"energy", number_or_null(s.energy)},
                       {"dist_l1", number_or_null(s.dist_l1)}, {"dist_inf", number_or_null(s.dist_inf)}});
  json out = {
      {"config",
       {{"graph", a.graph}, {"profile", a.profile}, {"p", cfg.p.str()}, {"schedule", a.schedule},
        {"eps", a.eps}, {"max_steps", a.max_steps}, {"stop", a.stop}, {"record_every", a.record_every}}},
      {"vertices", g.size()},
      {"edges", g.edge_count()},
      {"stopping_time", optional_json(rec.stopping_time)},
      {"censored", rec.censored()},
      {"steps", rec.steps},
      {"seed", optional_json(rec.seed)},
      {"cover_marks", rec.cover_marks},
      {"samples", samples},
      {"final_profile", profile_json(rec.final_profile)},
  };
  write_text(a.out, out.dump(2) + "\n");
  return 0;
}

int extend_cmd(const std::string& graph, const std::string& boundary, const std::string& out_path,
               double tol) {
  const auto bvals = load_boundary_values(boundary);
  const Graph g = build_graph(graph, bvals);
  const auto res = extend(g, bvals);
  std::ostringstream csv;
  csv.precision(17);
  csv << "v h\n";
  for (Vertex v = 0; v < g.size(); ++v) csv << v << " " << res.h[v] << "\n";
  write_text(out_path, csv.str());
  std::cerr << "residual " << res.residual << " (tolerance " << tol << "), " << res.audit.size()
            << " steps\n";
  return res.residual <= tol ? 0 : 1;
}

int predict_cmd(double n, const std::string& p_text, double D, double diam, double eps) {
  const PValue p = PValue::parse(p_text);
  json out;
  if (p.is_infinite()) {
    if (!(diam >= 0.0)) throw Error("p = inf needs --diam");
    const auto r = predict_infinity(n, diam, eps);
    out = {{"p", "inf"}, {"n", n}, {"diam", diam}, {"eps", eps}, {"beta", r.beta},
           {"expected_bound", r.expected_bound}, {"round_robin_bound", r.round_robin_bound}};
  } else {
    const auto r = predict(n, p.value(), D);
    out = {{"p", p.value()}, {"n", n}, {"D", D}, {"beta", r.beta}, {"theta", r.theta},
           {"F", r.F}, {"c", r.c}, {"cF", r.c * r.F}};
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int scaling_cmd(ScalingSpec spec, const std::string& family, const std::string& sizes,
                const std::string& p, const std::string& out) {
  const auto fam = parse_family(family);
  if (!fam) throw Error("unknown family '" + family + "'");
  spec.family = *fam;
  spec.sizes = parse_sizes(sizes);
  spec.p = PValue::parse(p);
  const auto res = scaling_study(spec);

  std::ostringstream csv;
  csv << "size,N,rep,seed,tau\n";
  for (const auto& c : res.cells)
    csv << c.size << "," << c.N << "," << c.rep << "," << c.seed << ","
        << (c.tau ? std::to_string(*c.tau) : "censored") << "\n";
  json rows = json::array();
  for (const auto& r : res.rows)
    rows.push_back({{"size", r.size}, {"N", r.N}, {"median", optional_json(r.median)},
                    {"mean", optional_json(r.mean)}, {"censored", r.censored}});
  json summary = {{"family", family_name(spec.family)},
                  {"p", spec.p.str()},
                  {"eps", spec.epsilon},
                  {"reps", spec.reps},
                  {"rows", rows},
                  {"predicted_exponent", res.predicted},
                  {"slope_certified", res.slope_certified},
                  {"monotone", res.monotone},
                  {"pass", res.pass}};
  if (res.fit)
    summary["fit"] = {{"slope", res.fit->slope}, {"intercept", res.fit->intercept}, {"r2", res.fit->r2}};
  else
    summary["fit"] = nullptr;

  if (out.empty()) {
    std::cout << summary.dump(2) << "\n";
  } else {
    write_text(out, csv.str());
    std::string json_path = out;
    if (auto dot = json_path.rfind('.'); dot != std::string::npos && json_path.find('/', dot) == std::string::npos)
      json_path.erase(dot);
    write_text(json_path + ".json", summary.dump(2) + "\n");
    std::cout << summary.dump(2) << "\n";
  }
  return res.pass ? 0 : 1;
}

std::vector<Schedule> parse_floor_schedules(const std::string& text) {
  std::vector<Schedule> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.rfind("random:", 0) == 0 && item.find('=') == std::string::npos) {
      const int k = std::stoi(item.substr(7));
      for (int i = 0; i < k; ++i) out.push_back(UniformRandom{static_cast<std::uint64_t>(i)});
    } else {
      out.push_back(parse_schedule_spec(item));
    }
  }
  return out;
}

int floor_cmd(const std::string& construction, const std::string& params, const std::string& schedules) {
  const auto c = parse_construction(construction);
  if (!c) throw Error("unknown construction '" + construction + "'");
  FloorParams prm;
  for (const auto& [k, v] : parse_key_values(params)) {
    if (k == "n")
      prm.n = std::stoi(v);
    else if (k == "d")
      prm.d = std::stoi(v);
    else if (k == "k")
      prm.k = std::stoi(v);
    else if (k == "L")
      prm.L = std::stoi(v);
    else if (k == "p")
      prm.p = PValue::parse(v);
    else
      throw Error("unknown floor parameter '" + k + "'");
  }
  const auto rep = floor_certify(*c, prm, parse_floor_schedules(schedules));
  json results = json::array();
  for (const auto& r : rep.results)
    results.push_back({{"schedule", r.schedule}, {"steps", r.steps}, {"min_osc", r.min_osc},
                       {"first_violation", optional_json(r.first_violation)}});
  json out = {{"construction", construction_name(*c)}, {"horizon", rep.horizon}, {"rule", rep.rule},
              {"violations", rep.violations}, {"pass", rep.pass}, {"results", results}};
  std::cout << out.dump(2) << "\n";
  return rep.pass ? 0 : 1;
}

int verify_cmd(const std::string& level) {
  if (level != "quick" && level != "full") throw Error("level must be quick or full");
  const auto rep = verify_suite(level == "quick" ? VerifyLevel::quick : VerifyLevel::full);
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.seconds << " s)";
    if (!c.detail.empty()) std::cout << ": " << c.detail;
    std::cout << "\n";
  }
  return rep.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Asynchronous l^p-energy minimization dynamics on graphs"};
  app.require_subcommand(1);

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Run the dynamics once and write a JSON record");
  s->add_option("--graph", sim.graph, "Graph spec, e.g. cycle:n=16")->required();
  s->add_option("--boundary", sim.boundary, "Boundary value file (v value)");
  s->add_option("--profile", sim.profile, "preset:NAME[:k=v,...] or file:PATH")->required();
  s->add_option("--p", sim.p, "Exponent, a number > 1 or inf");
  s->add_option("--schedule", sim.schedule, "random:seed=S, roundrobin or file:PATH");
  s->add_option("--eps", sim.eps, "Target oscillation or approximation gap");
  s->add_option("--max-steps", sim.max_steps, "Step budget");
  s->add_option("--stop", sim.stop, "consensus, boundary or horizon");
  s->add_option("--record-every", sim.record_every, "Sampling stride (0: first and last only)");
  s->add_option("--out", sim.out, "Output JSON path (default stdout)");

  std::string ext_graph, ext_boundary, ext_out;
  double ext_tol = 1e-9;
  auto* e = app.add_subcommand("extend", "Infinity-harmonic extension of boundary values");
  e->add_option("--graph", ext_graph, "Graph spec")->required();
  e->add_option("--boundary", ext_boundary, "Boundary value file (v value)")->required();
  e->add_option("--out", ext_out, "Output file of 'v h(v)' lines (default stdout)");
  e->add_option("--verify-tol", ext_tol, "Accepted max |Delta_inf h|");

  double pr_n = 0, pr_D = 2, pr_diam = -1, pr_eps = 0.5;
  std::string pr_p = "2";
  auto* pr = app.add_subcommand("predict", "Rate constants for given n, p and average degree");
  pr->add_option("--n", pr_n, "Vertex count")->required();
  pr->add_option("--p", pr_p, "Exponent or inf");
  pr->add_option("--D", pr_D, "Average degree");
  pr->add_option("--diam", pr_diam, "Diameter (p = inf)");
  pr->add_option("--eps", pr_eps, "Target oscillation (p = inf)");

  ScalingSpec sc;
  std::string sc_family = "cycle", sc_sizes, sc_p = "inf", sc_out;
  auto* scl = app.add_subcommand("scaling", "Median stopping time against size with a log-log fit");
  scl->add_option("--family", sc_family, "cycle, barbell, segment, parallel_paths, tree_tn, hdn");
  scl->add_option("--p", sc_p, "Exponent or inf");
  scl->add_option("--sizes", sc_sizes, "Comma-separated sizes")->required();
  scl->add_option("--reps", sc.reps, "Seeds per size");
  scl->add_option("--eps", sc.epsilon, "Target");
  scl->add_option("--seed", sc.seed, "Base seed");
  scl->add_option("--max-steps", sc.max_steps, "Step budget per run");
  scl->add_option("--k", sc.k, "Path count for parallel_paths");
  scl->add_option("--d", sc.d, "Clique size for hdn");
  scl->add_option("--band", sc.band, "Accepted |slope - predicted|");
  scl->add_option("--out", sc_out, "CSV path; the JSON summary goes next to it");

  std::string fl_c, fl_params, fl_sched = "random:20,roundrobin";
  auto* fl = app.add_subcommand("floor", "Check the oscillation floor up to a construction's horizon");
  fl->add_option("--construction", fl_c,
                 "cycle1, secondcycle, tree_tn, hdn, accordion, parallel_paths")
      ->required();
  fl->add_option("--params", fl_params, "e.g. n=64 or d=2,n=24,p=2.5")->required();
  fl->add_option("--schedules", fl_sched, "random:K, roundrobin, file:PATH (comma-separated)");

  std::string level = "quick";
  auto* v = app.add_subcommand("verify", "Run the invariant suite");
  v->add_option("--level", level, "quick or full");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*s) return simulate(sim);
    if (*e) return extend_cmd(ext_graph, ext_boundary, ext_out, ext_tol);
    if (*pr) return predict_cmd(pr_n, pr_p, pr_D, pr_diam, pr_eps);
    if (*scl) return scaling_cmd(sc, sc_family, sc_sizes, sc_p, sc_out);
    if (*fl) return floor_cmd(fl_c, fl_params, fl_sched);
    if (*v) return verify_cmd(level);
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
