#include "lpdyn/schedule.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace lpdyn {

std::string describe(const Schedule& s) {
  struct Visitor {
    std::string operator()(const UniformRandom& u) const {
      return "random:seed=" + std::to_string(u.seed);
    }
    std::string operator()(const RoundRobin&) const { return "roundrobin"; }
    std::string operator()(const Explicit& e) const {
      return "explicit:" + std::to_string(e.sequence.size());
    }
  };
  return std::visit(Visitor{}, s);
}

namespace {

void check_interior(const std::vector<Vertex>& seq, std::size_t n, const std::vector<Vertex>& interior) {
  std::vector<std::uint8_t> inside(n, 0);
  for (Vertex v : interior) inside[v] = 1;
  for (Vertex v : seq) {
    if (v >= n) throw Error("scheduled vertex " + std::to_string(v) + " out of range");
    if (!inside[v]) throw Error("scheduled vertex " + std::to_string(v) + " is a boundary vertex");
  }
}

}  // namespace

Scheduler::Scheduler(const std::vector<Vertex>& interior, std::size_t n, const Schedule& s)
    : interior_(&interior), source_(Rng(0)) {
  if (interior.empty()) throw Error("no interior vertex to schedule");
  if (auto* u = std::get_if<UniformRandom>(&s)) {
    source_ = Rng(u->seed);
  } else if (auto* r = std::get_if<RoundRobin>(&s)) {
    std::vector<Vertex> order = r->order.empty() ? interior : r->order;
    check_interior(order, n, interior);
    std::vector<Vertex> a = order, b = interior;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw Error("round-robin order must visit every interior vertex exactly once");
    source_ = std::move(order);
    cyclic_ = true;
  } else {
    const auto& e = std::get<Explicit>(s);
    if (e.sequence.empty()) throw Error("explicit schedule is empty");
    check_interior(e.sequence, n, interior);
    source_ = e.sequence;
  }
}

std::optional<Vertex> Scheduler::next() {
  if (auto* rng = std::get_if<Rng>(&source_)) return (*interior_)[rng->below(interior_->size())];
  const auto& seq = std::get<std::vector<Vertex>>(source_);
  if (pos_ == seq.size()) {
    if (!cyclic_) return std::nullopt;
    pos_ = 0;
  }
  return seq[pos_++];
}

std::vector<std::uint64_t> cover_times(const Schedule& s, const std::vector<Vertex>& interior,
                                       std::uint64_t horizon) {
  if (horizon < 1) throw Error("horizon must be >= 1");
  Vertex top = 0;
  for (Vertex v : interior) top = std::max(top, v);
  Scheduler sched(interior, static_cast<std::size_t>(top) + 1, s);
  std::vector<std::uint64_t> seen(static_cast<std::size_t>(top) + 1, 0);
  std::uint64_t epoch = 1;
  std::size_t covered = 0;
  std::vector<std::uint64_t> marks;
  for (std::uint64_t t = 1; t <= horizon; ++t) {
    auto v = sched.next();
    if (!v) break;
    if (seen[*v] != epoch) {
      seen[*v] = epoch;
      if (++covered == interior.size()) {
        marks.push_back(t);
        ++epoch;
        covered = 0;
      }
    }
  }
  return marks;
}

Explicit parse_schedule(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  Explicit e;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      long long v = -1;
      try {
        v = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) throw ParseError("bad vertex id '" + tok + "'", line_no);
      e.sequence.push_back(static_cast<Vertex>(v));
    }
  }
  return e;
}

Explicit load_schedule(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_schedule(ss.str());
}

}  // namespace lpdyn
