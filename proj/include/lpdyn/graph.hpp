#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpdyn {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Base for every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class GraphError : public Error {
 public:
  using Error::Error;
};

enum class Family {
  cycle,
  segment,
  barbell,
  parallel_paths,
  tree_tn,
  cliques_hdn,
  accordion,
  edge_list_file,
  random_connected,
  custom,
};

const char* family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

// Parameters a generator was called with. Which fields are meaningful
// depends on the family; unused fields stay zero.
struct GraphFamilySpec {
  Family family = Family::custom;
  int n = 0;      // cycle length, segment/T_n/H_{d,n}/accordion half-length, barbell ñ, random vertex count
  int k = 0;      // parallel path count
  int L = 0;      // parallel path length
  int d = 0;      // clique / anti-clique size
  double q = 0.0; // edge probability
  std::uint64_t seed = 0;
  int boundary_count = 0;  // random_connected
  bool boundary = false;   // segment endpoints marked as boundary
  std::string path;        // edge_list_file
  std::string boundary_path;
};

// Immutable, validated simple connected undirected graph with an optional
// boundary set. Adjacency is stored in CSR form with sorted neighbour lists.
class Graph {
 public:
  Graph() = default;

  // Validates and builds. Throws GraphError on a self-loop, duplicate edge,
  // out-of-range endpoint, boundary-boundary edge, isolated interior vertex,
  // or disconnected vertex set.
  static Graph from_edges(std::size_t n, std::vector<Edge> edges,
                          std::vector<Vertex> boundary = {},
                          std::optional<GraphFamilySpec> origin = std::nullopt);

  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  // Undirected edges with u < v, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_boundary(Vertex v) const { return is_boundary_[v] != 0; }
  bool has_boundary() const { return !boundary_.empty(); }
  const std::vector<Vertex>& boundary() const { return boundary_; }
  const std::vector<Vertex>& interior() const { return interior_; }

  const std::optional<GraphFamilySpec>& origin() const { return origin_; }

  // Same vertices and edges with a different boundary set (re-validated).
  Graph with_boundary(std::vector<Vertex> boundary) const;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> is_boundary_;
  std::vector<Vertex> boundary_;
  std::vector<Vertex> interior_;
  std::optional<GraphFamilySpec> origin_;
};

// Boundary file entry: vertex and its prescribed value.
struct BoundaryValue {
  Vertex v;
  double value;
};

// Edge-list file: "n m" header, then m lines "u v" (0 <= u < v < n).
// Lines starting with '#' are comments. The optional boundary file lists
// "v value" lines; its vertices become the boundary set.
Graph load_graph(const std::string& path,
                 const std::optional<std::string>& boundary_path = std::nullopt);
Graph parse_edge_list(const std::string& text,
                      std::vector<Vertex> boundary = {});
std::vector<BoundaryValue> load_boundary_values(const std::string& path);
std::vector<BoundaryValue> parse_boundary_values(const std::string& text);
void save_edge_list(const Graph& g, const std::string& path);

// Exact graph-metric diameter via BFS from every vertex (OpenMP over sources).
std::size_t diameter(const Graph& g);
// Single-threaded reference for diameter().
std::size_t diameter_serial(const Graph& g);
// BFS distances from a source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

// 2|E| / n.
double average_degree(const Graph& g);

}  // namespace lpdyn
