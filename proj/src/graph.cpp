#include "lpdyn/graph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

namespace lpdyn {

const char* family_name(Family f) {
  switch (f) {
    case Family::cycle: return "cycle";
    case Family::segment: return "segment";
    case Family::barbell: return "barbell";
    case Family::parallel_paths: return "parallel_paths";
    case Family::tree_tn: return "tree_tn";
    case Family::cliques_hdn: return "cliques_hdn";
    case Family::accordion: return "accordion";
    case Family::edge_list_file: return "edge_list_file";
    case Family::random_connected: return "random_connected";
    case Family::custom: return "custom";
  }
  return "custom";
}

std::optional<Family> parse_family(const std::string& name) {
  for (Family f : {Family::cycle, Family::segment, Family::barbell,
                   Family::parallel_paths, Family::tree_tn, Family::cliques_hdn,
                   Family::accordion, Family::edge_list_file,
                   Family::random_connected, Family::custom}) {
    if (name == family_name(f)) return f;
  }
  if (name == "hdn") return Family::cliques_hdn;
  if (name == "tn") return Family::tree_tn;
  if (name == "random") return Family::random_connected;
  if (name == "file") return Family::edge_list_file;
  return std::nullopt;
}

Graph Graph::from_edges(std::size_t n, std::vector<Edge> edges,
                        std::vector<Vertex> boundary,
                        std::optional<GraphFamilySpec> origin) {
  if (n == 0) throw GraphError("graph must have at least one vertex");
  if (n > std::numeric_limits<Vertex>::max())
    throw GraphError("vertex count exceeds index range");

  for (auto& e : edges) {
    if (e.u >= n || e.v >= n)
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v)
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end())
    throw GraphError("duplicate edge {" + std::to_string(dup->u) + "," +
                     std::to_string(dup->v) + "}");

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const auto& e : edges) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  g.targets_.resize(2 * edges.size());
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& e : edges) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t i = 0; i < n; ++i)
    std::sort(g.targets_.begin() + g.offsets_[i], g.targets_.begin() + g.offsets_[i + 1]);
  g.edges_ = std::move(edges);

  g.is_boundary_.assign(n, 0);
  for (Vertex b : boundary) {
    if (b >= n) throw GraphError("boundary vertex " + std::to_string(b) + " out of range");
    if (g.is_boundary_[b]) throw GraphError("boundary vertex " + std::to_string(b) + " listed twice");
    g.is_boundary_[b] = 1;
  }
  std::sort(boundary.begin(), boundary.end());
  g.boundary_ = std::move(boundary);
  for (Vertex v = 0; v < n; ++v)
    if (!g.is_boundary_[v]) g.interior_.push_back(v);
  if (g.interior_.empty()) throw GraphError("graph has no interior vertices");

  for (const auto& e : g.edges_) {
    if (g.is_boundary_[e.u] && g.is_boundary_[e.v])
      throw GraphError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       "} joins two boundary vertices");
  }
  for (Vertex v : g.interior_) {
    if (g.degree(v) == 0) throw GraphError("interior vertex " + std::to_string(v) + " is isolated");
  }
  auto dist = bfs_distances(g, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (dist[v] == std::numeric_limits<std::size_t>::max())
      throw GraphError("graph is disconnected (vertex " + std::to_string(v) +
                       " unreachable from 0)");
  }
  g.origin_ = std::move(origin);
  return g;
}

Graph Graph::with_boundary(std::vector<Vertex> boundary) const {
  return from_edges(size(), edges_, std::move(boundary), origin_);
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool skip_line(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

template <typename T>
T parse_token(std::istringstream& ss, std::size_t line_no, const char* what) {
  long double raw;
  if (!(ss >> raw)) throw ParseError(std::string("expected ") + what, line_no);
  if constexpr (std::is_integral_v<T>) {
    if (raw < 0 || raw != std::floor(raw) ||
        raw > static_cast<long double>(std::numeric_limits<T>::max()))
      throw ParseError(std::string("expected non-negative integer ") + what, line_no);
  }
  return static_cast<T>(raw);
}

void expect_end(std::istringstream& ss, std::size_t line_no) {
  std::string rest;
  if (ss >> rest) throw ParseError("unexpected trailing token '" + rest + "'", line_no);
}

}  // namespace

Graph parse_edge_list(const std::string& text, std::vector<Vertex> boundary) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    if (!header) {
      auto n = parse_token<std::size_t>(ss, line_no, "vertex count n");
      auto m = parse_token<std::size_t>(ss, line_no, "edge count m");
      expect_end(ss, line_no);
      header = {n, m};
      edges.reserve(m);
      continue;
    }
    auto u = parse_token<std::size_t>(ss, line_no, "vertex u");
    auto v = parse_token<std::size_t>(ss, line_no, "vertex v");
    expect_end(ss, line_no);
    if (u >= header->first || v >= header->first)
      throw ParseError("vertex index out of range", line_no);
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    if (edges.size() == header->second)
      throw ParseError("more edges than declared in header", line_no);
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!header) throw ParseError("missing \"n m\" header", line_no);
  if (edges.size() != header->second)
    throw ParseError("expected " + std::to_string(header->second) + " edges, found " +
                         std::to_string(edges.size()),
                     line_no);
  return Graph::from_edges(header->first, std::move(edges), std::move(boundary));
}

std::vector<BoundaryValue> parse_boundary_values(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::vector<BoundaryValue> out;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    std::istringstream ss(line);
    auto v = parse_token<std::size_t>(ss, line_no, "boundary vertex");
    auto value = parse_token<double>(ss, line_no, "boundary value");
    expect_end(ss, line_no);
    if (!(value >= 0.0 && value <= 1.0))
      throw ParseError("boundary value must lie in [0,1]", line_no);
    out.push_back({static_cast<Vertex>(v), value});
  }
  return out;
}

std::vector<BoundaryValue> load_boundary_values(const std::string& path) {
  return parse_boundary_values(read_file(path));
}

Graph load_graph(const std::string& path, const std::optional<std::string>& boundary_path) {
  std::vector<Vertex> boundary;
  if (boundary_path) {
    for (const auto& bv : load_boundary_values(*boundary_path)) boundary.push_back(bv.v);
  }
  Graph g = parse_edge_list(read_file(path), boundary);
  GraphFamilySpec spec;
  spec.family = Family::edge_list_file;
  spec.path = path;
  spec.boundary_path = boundary_path.value_or("");
  return Graph::from_edges(g.size(), g.edges(), g.boundary(), spec);
}

void save_edge_list(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto unreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.size(), unreached);
  std::vector<Vertex> queue;
  queue.reserve(g.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == unreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

namespace {

std::size_t eccentricity(const Graph& g, Vertex s) {
  auto dist = bfs_distances(g, s);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace

std::size_t diameter(const Graph& g) {
  const auto n = static_cast<std::int64_t>(g.size());
  std::size_t best = 0;
#pragma omp parallel for reduction(max : best) schedule(dynamic, 16)
  for (std::int64_t s = 0; s < n; ++s) {
    best = std::max(best, eccentricity(g, static_cast<Vertex>(s)));
  }
  return best;
}

std::size_t diameter_serial(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.size(); ++s) best = std::max(best, eccentricity(g, s));
  return best;
}

double average_degree(const Graph& g) {
  return 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(g.size());
}

}  // namespace lpdyn
