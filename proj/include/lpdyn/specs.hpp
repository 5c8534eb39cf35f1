#pragma once

// Text forms used on the command line:
//
//   graph     cycle:n=16 | segment:n=8,boundary=1 | barbell:n=4 |
//             parallel_paths:k=3,L=8 | tree_tn:n=4 | hdn:d=2,n=8 |
//             accordion:d=2,n=24 | random:n=20,q=0.2,seed=1,boundary=4 |
//             file:EDGES[:BOUNDARY]
//   profile   preset:NAME[:key=value,...] | file:PATH
//   schedule  random:seed=S | roundrobin | file:PATH

#include <map>
#include <string>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/profile.hpp"
#include "lpdyn/schedule.hpp"

namespace lpdyn {

// "a=1,b=2" -> {a:1, b:2}. Throws Error on a malformed pair.
std::map<std::string, std::string> parse_key_values(const std::string& text);

GraphFamilySpec parse_graph_spec(const std::string& text);

struct ProfileSpec {
  std::string preset;  // empty for a file
  std::map<std::string, double> params;
  std::string path;
};
ProfileSpec parse_profile_spec(const std::string& text);
Profile make_profile(const Graph& g, const ProfileSpec& spec,
                     const std::vector<BoundaryValue>& boundary_values = {});

Schedule parse_schedule_spec(const std::string& text);

}  // namespace lpdyn
