#include "lpdyn/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "lpdyn/generators.hpp"
#include "lpdyn/rng.hpp"

namespace lpdyn {

OrderedValueIndex::OrderedValueIndex(std::span<const double> values) : count_(values.size()) {
  leaf_ = 1;
  while (leaf_ < std::max<std::size_t>(count_, 1)) leaf_ <<= 1;
  constexpr double inf = std::numeric_limits<double>::infinity();
  min_.assign(2 * leaf_, inf);
  max_.assign(2 * leaf_, -inf);
  for (std::size_t i = 0; i < count_; ++i) min_[leaf_ + i] = max_[leaf_ + i] = values[i];
  for (std::size_t i = leaf_ - 1; i >= 1; --i) {
    min_[i] = std::min(min_[2 * i], min_[2 * i + 1]);
    max_[i] = std::max(max_[2 * i], max_[2 * i + 1]);
  }
}

void OrderedValueIndex::set(Vertex v, double value) {
  std::size_t i = leaf_ + v;
  min_[i] = max_[i] = value;
  for (i >>= 1; i >= 1; i >>= 1) {
    const double lo = std::min(min_[2 * i], min_[2 * i + 1]);
    const double hi = std::max(max_[2 * i], max_[2 * i + 1]);
    if (lo == min_[i] && hi == max_[i]) break;
    min_[i] = lo;
    max_[i] = hi;
  }
}

double oscillation(const Profile& f) {
  auto [lo, hi] = std::minmax_element(f.values().begin(), f.values().end());
  return *hi - *lo;
}

double abs_pow(double x, double e) {
  const double a = std::fabs(x);
  return a == 0.0 ? 0.0 : std::exp(e * std::log(a));
}

namespace {

void check_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p))
    throw Error("energy exponent must be finite and > 1 (got " + std::to_string(p) + ")");
}

}  // namespace

double energy(const Graph& g, const Profile& f, double p) {
  check_exponent(p);
  double total = 0.0;
  for (const auto& e : g.edges()) total += abs_pow(f[e.u] - f[e.v], p);
  return total;
}

double energy_delta_at(const Graph& g, const Profile& f, Vertex v, double new_value, double p) {
  check_exponent(p);
  double delta = 0.0;
  for (Vertex w : g.neighbors(v)) delta += abs_pow(new_value - f[w], p) - abs_pow(f[v] - f[w], p);
  return delta;
}

std::vector<double> sorted_gradients(const Graph& g, const Profile& f) {
  std::vector<double> grads;
  grads.reserve(g.edge_count());
  for (const auto& e : g.edges()) grads.push_back(std::fabs(f[e.v] - f[e.u]));
  std::sort(grads.begin(), grads.end(), std::greater<>());
  return grads;
}

double lex_potential(const Graph& g, const Profile& f) {
  double weight = 1.0;
  double total = 0.0;
  for (double grad : sorted_gradients(g, f)) {
    weight /= 3.0;
    total += grad * weight;
  }
  return total;
}

double lp_distance(const Profile& f, const Profile& h, Norm norm) {
  if (f.size() != h.size())
    throw Error("profile dimensions differ (" + std::to_string(f.size()) + " vs " +
                std::to_string(h.size()) + ")");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double diff = std::fabs(f[i] - h[i]);
    acc = norm == Norm::one ? acc + diff : std::max(acc, diff);
  }
  return acc;
}

void apply_boundary_values(Profile& f, const Graph& g, const std::vector<BoundaryValue>& values) {
  for (const auto& bv : values) {
    if (bv.v >= g.size() || !g.is_boundary(bv.v))
      throw Error("boundary value given for non-boundary vertex " + std::to_string(bv.v));
    f[bv.v] = bv.value;
  }
}

namespace {

double param(const std::map<std::string, double>& params, const std::string& key,
             std::optional<double> fallback = std::nullopt) {
  auto it = params.find(key);
  if (it != params.end()) return it->second;
  if (fallback) return *fallback;
  throw Error("preset parameter '" + key + "' is required");
}

const GraphFamilySpec& family_of(const Graph& g, Family want, const std::string& preset) {
  if (!g.origin() || g.origin()->family != want)
    throw Error("preset '" + preset + "' requires a " + family_name(want) + " graph (got " +
                (g.origin() ? family_name(g.origin()->family) : "custom") + ")");
  return *g.origin();
}

}  // namespace

Profile preset_profile(const Graph& g, const std::string& preset,
                       const std::map<std::string, double>& params,
                       const std::vector<BoundaryValue>& boundary_values) {
  const std::size_t N = g.size();
  Profile f(N, 0.0);

  if (preset == "constant") {
    const double c = param(params, "c", 0.5);
    return Profile(N, c);
  }
  if (preset == "uniform_random") {
    Rng rng(static_cast<std::uint64_t>(param(params, "seed", 0.0)));
    for (Vertex v = 0; v < N; ++v) f[v] = rng.uniform();
    return f;
  }
  if (preset == "cycle_step") {
    const int n = family_of(g, Family::cycle, preset).n;
    for (int v = 0; v < n; ++v) f[v] = 2 * v >= n ? 1.0 : 0.0;
    return f;
  }
  if (preset == "second_cycle") {
    const int len = family_of(g, Family::cycle, preset).n;
    if (len % 4 != 0) throw Error("second_cycle needs a cycle of length 4n");
    const int n = len / 4;
    // index i carries coordinate i - 2n + 1 (coordinates -2n+1 .. 2n).
    for (int i = 0; i < len; ++i) {
      const int c = std::abs(i - 2 * n + 1);
      f[i] = c == n ? 0.5 : (c > n ? 1.0 : 0.0);
    }
    return f;
  }
  if (preset == "barbell_step") {
    const int nt = family_of(g, Family::barbell, preset).n;
    for (int i = 0; i <= 2 * nt; ++i) f[i] = i < nt ? 0.0 : (i == nt ? 0.5 : 1.0);
    for (int i = 0; i < nt - 1; ++i) f[3 * nt + i] = 1.0;
    return f;
  }
  if (preset == "parallel_halves") {
    const auto& s = family_of(g, Family::parallel_paths, preset);
    f[0] = 0.0;
    f[1] = 1.0;
    for (int j = 0; j < s.k; ++j)
      for (int i = 1; i <= s.L - 1; ++i) {
        const Vertex v = static_cast<Vertex>(2 + j * (s.L - 1) + (i - 1));
        f[v] = 2 * i < s.L ? 0.0 : (2 * i == s.L ? 0.5 : 1.0);
      }
    return f;
  }
  if (preset == "tn_profile") {
    const int n = family_of(g, Family::tree_tn, preset).n;
    const double p = param(params, "p");
    if (!(p > 1.0)) throw Error("tn_profile needs p > 1");
    const double a = std::isinf(p) ? 1.0 / n : std::pow(static_cast<double>(n), -p / (p - 1.0));
    for (int i = -n; i <= n; ++i) f[i + n] = a + (i + n) * (1.0 - 2.0 * a) / (2.0 * n);
    f[0] = a;
    f[2 * n] = 1.0 - a;
    for (int i = 0; i < 2 * n; ++i) {
      f[2 * n + 1 + i] = 0.0;
      f[4 * n + 1 + i] = 1.0;
    }
    return f;
  }
  if (preset == "hdn_step") {
    const auto& s = family_of(g, Family::cliques_hdn, preset);
    const int n = s.n;
    for (int i = 0; i <= 2 * n; ++i) f[i] = i < n ? 0.0 : (i == n ? 0.5 : 1.0);
    for (int i = 0; i < n; ++i) f[2 * n + 1 + n + i] = 1.0;  // U cliques
    return f;
  }
  if (preset == "accordion_step") {
    const auto& s = family_of(g, Family::accordion, preset);
    const auto lay = accordion_layout(s.d, s.n);
    for (int k = -lay.m; k <= lay.m; ++k)
      for (int j = 1; j <= lay.d; ++j) {
        f[lay.upper(k, j)] = 1.0;
        f[lay.lower(k, j)] = 0.0;
      }
    for (int i = -lay.n; i <= lay.n; ++i) {
      const double value = i < 0 ? 1.0 : (i == 0 ? 0.5 : 0.0);
      f[lay.w(i)] = value;
      f[lay.u(i)] = value;
    }
    return f;
  }
  if (preset == "boundary_segment") {
    const auto& s = family_of(g, Family::segment, preset);
    if (!s.boundary) throw Error("boundary_segment needs a segment with boundary endpoints");
    f[0] = 1.0;
    f[2 * s.n] = 1.0;
    if (!boundary_values.empty()) apply_boundary_values(f, g, boundary_values);
    return f;
  }
  if (preset == "upper_envelope" || preset == "lower_envelope") {
    if (!g.has_boundary()) throw Error("preset '" + preset + "' requires a boundary");
    const double inside = preset == "upper_envelope" ? 1.0 : 0.0;
    const double b = param(params, "b", 0.0);
    for (Vertex v = 0; v < N; ++v) f[v] = g.is_boundary(v) ? b : inside;
    apply_boundary_values(f, g, boundary_values);
    return f;
  }
  throw Error("unknown preset '" + preset + "'");
}

Profile parse_profile(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  Profile f(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<std::uint8_t> seen(n, 0);
  while (std::getline(in, line)) {
    ++line_no;
    auto pos = line.find_first_not_of(" \t\r");
    if (pos == std::string::npos || line[pos] == '#') continue;
    std::istringstream ss(line);
    long long v;
    double value;
    if (!(ss >> v >> value)) throw ParseError("expected \"v value\"", line_no);
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected trailing token '" + rest + "'", line_no);
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError("vertex out of range", line_no);
    if (!std::isfinite(value)) throw ParseError("value must be finite", line_no);
    f[static_cast<Vertex>(v)] = value;
    seen[v] = 1;
  }
  for (std::size_t v = 0; v < n; ++v)
    if (!seen[v]) throw Error("profile file has no value for vertex " + std::to_string(v));
  return f;
}

Profile load_profile(const std::string& path, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_profile(ss.str(), n);
}

}  // namespace lpdyn
