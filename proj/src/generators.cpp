#include "lpdyn/generators.hpp"

#include <algorithm>
#include <numeric>

#include "lpdyn/rng.hpp"

namespace lpdyn {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw GraphError(msg);
}

void add_clique(std::vector<Edge>& edges, const std::vector<Vertex>& members) {
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      edges.push_back({members[a], members[b]});
}

void add_path(std::vector<Edge>& edges, Vertex first, int length) {
  for (int i = 0; i < length; ++i)
    edges.push_back({static_cast<Vertex>(first + i), static_cast<Vertex>(first + i + 1)});
}

}  // namespace

Graph gen_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  GraphFamilySpec spec;
  spec.family = Family::cycle;
  spec.n = n;
  return Graph::from_edges(n, std::move(edges), {}, spec);
}

Graph gen_segment(int n, bool boundary) {
  require(n >= 1, "segment needs half-length n >= 1");
  std::vector<Edge> edges;
  add_path(edges, 0, 2 * n);
  std::vector<Vertex> b;
  if (boundary) b = {0, static_cast<Vertex>(2 * n)};
  GraphFamilySpec spec;
  spec.family = Family::segment;
  spec.n = n;
  spec.boundary = boundary;
  return Graph::from_edges(2 * n + 1, std::move(edges), std::move(b), spec);
}

Graph gen_barbell(int nt) {
  require(nt >= 2, "barbell needs clique size >= 2");
  std::vector<Edge> edges;
  add_path(edges, 0, 2 * nt);
  std::vector<Vertex> left{0}, right{static_cast<Vertex>(2 * nt)};
  for (int i = 0; i < nt - 1; ++i) {
    left.push_back(static_cast<Vertex>(2 * nt + 1 + i));
    right.push_back(static_cast<Vertex>(3 * nt + i));
  }
  add_clique(edges, left);
  add_clique(edges, right);
  GraphFamilySpec spec;
  spec.family = Family::barbell;
  spec.n = nt;
  return Graph::from_edges(4 * nt - 1, std::move(edges), {}, spec);
}

Graph gen_parallel_paths(int k, int L) {
  require(k >= 2, "parallel paths need k >= 2");
  require(L >= 2, "parallel paths need L >= 2");
  const int n = k * (L - 1) + 2;
  std::vector<Edge> edges;
  for (int j = 0; j < k; ++j) {
    const Vertex first = static_cast<Vertex>(2 + j * (L - 1));
    edges.push_back({0, first});
    add_path(edges, first, L - 2);
    edges.push_back({static_cast<Vertex>(first + L - 2), 1});
  }
  GraphFamilySpec spec;
  spec.family = Family::parallel_paths;
  spec.k = k;
  spec.L = L;
  return Graph::from_edges(n, std::move(edges), {}, spec);
}

Graph gen_tree_tn(int n) {
  require(n >= 1, "T_n needs n >= 1");
  std::vector<Edge> edges;
  add_path(edges, 0, 2 * n);
  for (int i = 0; i < 2 * n; ++i) {
    edges.push_back({0, static_cast<Vertex>(2 * n + 1 + i)});
    edges.push_back({static_cast<Vertex>(2 * n), static_cast<Vertex>(4 * n + 1 + i)});
  }
  GraphFamilySpec spec;
  spec.family = Family::tree_tn;
  spec.n = n;
  return Graph::from_edges(6 * n + 1, std::move(edges), {}, spec);
}

Graph gen_hdn(int d, int n) {
  require(d >= 2, "H_{d,n} needs d >= 2");
  require(n >= 1 && n % d == 0, "H_{d,n} needs d | n (d=" + std::to_string(d) +
                                    ", n=" + std::to_string(n) + ")");
  const int m = n / d;
  std::vector<Edge> edges;
  add_path(edges, 0, 2 * n);
  const Vertex left_end = 0, right_end = static_cast<Vertex>(2 * n);
  for (int side = 0; side < 2; ++side) {
    const Vertex anchor = side == 0 ? left_end : right_end;
    for (int i = 0; i < m; ++i) {
      std::vector<Vertex> clique;
      for (int j = 0; j < d; ++j) {
        clique.push_back(static_cast<Vertex>(2 * n + 1 + side * m * d + i * d + j));
        edges.push_back({anchor, clique.back()});
      }
      add_clique(edges, clique);
    }
  }
  GraphFamilySpec spec;
  spec.family = Family::cliques_hdn;
  spec.d = d;
  spec.n = n;
  return Graph::from_edges(4 * n + 1, std::move(edges), {}, spec);
}

Vertex AccordionLayout::upper(int k, int j) const {
  return static_cast<Vertex>((k + m) * d + (j - 1));
}
Vertex AccordionLayout::lower(int k, int j) const {
  return static_cast<Vertex>((2 * m + 1) * d + (k + m) * d + (j - 1));
}
Vertex AccordionLayout::w(int i) const {
  return static_cast<Vertex>(2 * (2 * m + 1) * d + (i + n));
}
Vertex AccordionLayout::u(int i) const {
  return static_cast<Vertex>(2 * (2 * m + 1) * d + (2 * n + 1) + (i + n));
}
std::size_t AccordionLayout::vertex_count() const {
  return static_cast<std::size_t>(2 * (2 * m + 1) * d + 2 * (2 * n + 1));
}

AccordionLayout accordion_layout(int d, int n) {
  require(d >= 2, "accordion needs d >= 2");
  require(n >= 1 && n % d == 0, "accordion needs d | n (d=" + std::to_string(d) +
                                    ", n=" + std::to_string(n) + ")");
  return {d, n, n / d};
}

Graph gen_accordion(int d, int n) {
  const auto lay = accordion_layout(d, n);
  const int m = lay.m;
  std::vector<Edge> edges;
  for (int copy = 0; copy < 2; ++copy) {
    auto at = [&](int k, int j) { return copy == 0 ? lay.upper(k, j) : lay.lower(k, j); };
    for (int k = -m; k < m; ++k)
      for (int j = 1; j <= d; ++j)
        for (int jj = 1; jj <= d; ++jj) edges.push_back({at(k, j), at(k + 1, jj)});
  }
  add_path(edges, lay.w(-n), 2 * n);
  add_path(edges, lay.u(-n), 2 * n);
  for (int j = 1; j <= d; ++j) {
    edges.push_back({lay.w(-n), lay.upper(-m, j)});
    edges.push_back({lay.w(n), lay.lower(-m, j)});
    edges.push_back({lay.u(-n), lay.upper(m, j)});
    edges.push_back({lay.u(n), lay.lower(m, j)});
  }
  GraphFamilySpec spec;
  spec.family = Family::accordion;
  spec.d = d;
  spec.n = n;
  return Graph::from_edges(lay.vertex_count(), std::move(edges), {}, spec);
}

Graph gen_random_connected(int n, double q, std::uint64_t seed, int boundary_count) {
  require(n >= 2, "random graph needs n >= 2");
  require(q > 0.0 && q <= 1.0, "edge probability must lie in (0,1]");
  require(boundary_count >= 0 && boundary_count < n, "boundary count must be in [0, n)");
  Rng rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  // Fisher-Yates with our own generator keeps the boundary choice portable.
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.below(i + 1)]);
  std::vector<Vertex> boundary(order.begin(), order.begin() + boundary_count);
  std::vector<std::uint8_t> is_b(n, 0);
  for (Vertex b : boundary) is_b[b] = 1;

  GraphFamilySpec spec;
  spec.family = Family::random_connected;
  spec.n = n;
  spec.q = q;
  spec.seed = seed;
  spec.boundary_count = boundary_count;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (is_b[u] && is_b[v]) continue;
        if (rng.uniform() < q) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      }
    try {
      return Graph::from_edges(n, std::move(edges), boundary, spec);
    } catch (const GraphError&) {
      // disconnected or isolated vertex; resample
    }
  }
  throw GraphError("could not sample a connected graph; increase q");
}

Graph generate(const GraphFamilySpec& spec) {
  switch (spec.family) {
    case Family::cycle: return gen_cycle(spec.n);
    case Family::segment: return gen_segment(spec.n, spec.boundary);
    case Family::barbell: return gen_barbell(spec.n);
    case Family::parallel_paths: return gen_parallel_paths(spec.k, spec.L);
    case Family::tree_tn: return gen_tree_tn(spec.n);
    case Family::cliques_hdn: return gen_hdn(spec.d, spec.n);
    case Family::accordion: return gen_accordion(spec.d, spec.n);
    case Family::random_connected:
      return gen_random_connected(spec.n, spec.q, spec.seed, spec.boundary_count);
    case Family::edge_list_file:
      return load_graph(spec.path, spec.boundary_path.empty()
                                       ? std::nullopt
                                       : std::optional<std::string>(spec.boundary_path));
    case Family::custom: break;
  }
  throw GraphError("family has no generator");
}

}  // namespace lpdyn
