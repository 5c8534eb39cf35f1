#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lpdyn/graph.hpp"
#include "lpdyn/local_update.hpp"
#include "lpdyn/profile.hpp"

namespace lpdyn {

enum class VerifyLevel { quick, full };

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or summary
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool pass() const;
};

// Single-vertex update used by the kernel-level checks. Defaults to
// update_value; tests substitute broken kernels to see the suite fail.
using UpdateKernel = std::function<double(const Graph&, const Profile&, Vertex, PValue)>;

VerifyReport verify_suite(VerifyLevel level, const UpdateKernel& kernel = {});

}  // namespace lpdyn
