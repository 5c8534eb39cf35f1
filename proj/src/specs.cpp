#include "lpdyn/specs.hpp"

#include <cstdint>
#include <cstdlib>

namespace lpdyn {

namespace {

std::pair<std::string, std::string> split_once(const std::string& s, char sep) {
  const auto pos = s.find(sep);
  if (pos == std::string::npos) return {s, ""};
  return {s.substr(0, pos), s.substr(pos + 1)};
}

double to_number(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (value.empty() || *end != '\0') throw Error("'" + key + "' needs a number, got '" + value + "'");
  return x;
}

int to_int(const std::string& key, const std::string& value) {
  const double x = to_number(key, value);
  if (x != static_cast<int>(x)) throw Error("'" + key + "' needs an integer, got '" + value + "'");
  return static_cast<int>(x);
}

std::uint64_t to_seed(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  std::uint64_t x = 0;
  try {
    x = std::stoull(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (value.empty() || used != value.size() || value[0] == '-')
    throw Error("'" + key + "' needs a non-negative integer, got '" + value + "'");
  return x;
}

}  // namespace

std::map<std::string, std::string> parse_key_values(const std::string& text) {
  std::map<std::string, std::string> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto [k, v] = split_once(item, '=');
    if (k.empty() || item.find('=') == std::string::npos)
      throw Error("expected key=value, got '" + item + "'");
    out[k] = v;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

GraphFamilySpec parse_graph_spec(const std::string& text) {
  const auto [name, rest] = split_once(text, ':');
  GraphFamilySpec spec;
  const auto fam = parse_family(name);
  if (!fam) throw Error("unknown graph family '" + name + "'");
  spec.family = *fam;
  if (spec.family == Family::edge_list_file) {
    const auto [path, bpath] = split_once(rest, ':');
    if (path.empty()) throw Error("file graph needs a path");
    spec.path = path;
    spec.boundary_path = bpath;
    return spec;
  }
  for (const auto& [k, v] : parse_key_values(rest)) {
    if (k == "n")
      spec.n = to_int(k, v);
    else if (k == "k")
      spec.k = to_int(k, v);
    else if (k == "L" || k == "l")
      spec.L = to_int(k, v);
    else if (k == "d")
      spec.d = to_int(k, v);
    else if (k == "q")
      spec.q = to_number(k, v);
    else if (k == "seed")
      spec.seed = to_seed(k, v);
    else if (k == "boundary") {
      if (spec.family == Family::segment)
        spec.boundary = to_int(k, v) != 0;
      else
        spec.boundary_count = to_int(k, v);
    } else {
      throw Error("unknown graph parameter '" + k + "'");
    }
  }
  return spec;
}

ProfileSpec parse_profile_spec(const std::string& text) {
  const auto [kind, rest] = split_once(text, ':');
  ProfileSpec spec;
  if (kind == "file") {
    if (rest.empty()) throw Error("profile file needs a path");
    spec.path = rest;
    return spec;
  }
  if (kind != "preset") throw Error("profile must be preset:NAME[:params] or file:PATH");
  const auto [name, params] = split_once(rest, ':');
  if (name.empty()) throw Error("preset name missing");
  spec.preset = name;
  if (!params.empty())
    for (const auto& [k, v] : parse_key_values(params)) spec.params[k] = to_number(k, v);
  return spec;
}

Profile make_profile(const Graph& g, const ProfileSpec& spec,
                     const std::vector<BoundaryValue>& boundary_values) {
  if (!spec.path.empty()) {
    Profile f = load_profile(spec.path, g.size());
    if (!boundary_values.empty()) apply_boundary_values(f, g, boundary_values);
    return f;
  }
  return preset_profile(g, spec.preset, spec.params, boundary_values);
}

Schedule parse_schedule_spec(const std::string& text) {
  const auto [kind, rest] = split_once(text, ':');
  if (kind == "roundrobin" || kind == "round_robin") return RoundRobin{};
  if (kind == "file") return load_schedule(rest);
  if (kind == "random") {
    UniformRandom u;
    if (!rest.empty()) {
      for (const auto& [k, v] : parse_key_values(rest)) {
        if (k != "seed") throw Error("unknown schedule parameter '" + k + "'");
        u.seed = to_seed(k, v);
      }
    }
    return u;
  }
  throw Error("schedule must be random:seed=S, roundrobin or file:PATH");
}

}  // namespace lpdyn
