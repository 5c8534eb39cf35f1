#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/rng.hpp"

namespace lpdyn {

// Uniform choice among interior vertices, reproducible from the seed.
struct UniformRandom {
  std::uint64_t seed = 0;
};

// Fixed cyclic order. An empty order means the interior in index order.
struct RoundRobin {
  std::vector<Vertex> order;
};

// A finite update sequence; the run ends when it is used up.
struct Explicit {
  std::vector<Vertex> sequence;
};

using Schedule = std::variant<UniformRandom, RoundRobin, Explicit>;

std::string describe(const Schedule& s);

// Produces update vertices for one run. Validates that every scheduled
// vertex is interior and that a round-robin order is a permutation of the
// interior.
class Scheduler {
 public:
  Scheduler(const std::vector<Vertex>& interior, std::size_t vertex_count, const Schedule& s);
  Scheduler(const Graph& g, const Schedule& s)
      : Scheduler(g.interior(), g.size(), s) {}

  // Next vertex, or nothing once an explicit sequence is exhausted.
  std::optional<Vertex> next();

 private:
  const std::vector<Vertex>* interior_;
  std::variant<Rng, std::vector<Vertex>> source_;
  bool cyclic_ = false;
  std::size_t pos_ = 0;
};

// Times T_1 < T_2 < ... <= horizon at which the schedule completes a cover
// of the interior since the previous mark.
std::vector<std::uint64_t> cover_times(const Schedule& s, const std::vector<Vertex>& interior,
                                       std::uint64_t horizon);

// Schedule file: whitespace-separated vertex ids, '#' comments.
Explicit load_schedule(const std::string& path);
Explicit parse_schedule(const std::string& text);

}  // namespace lpdyn
