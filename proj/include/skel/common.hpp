#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace skel {

using NodeId = int;

// Internal-consistency failure during greedy assignment: a slot or interval
// produced by the skeleton phase could not be filled.  Must not occur on
// solver-produced skeletons.
struct AssignmentFailure : std::runtime_error {
  explicit AssignmentFailure(const std::string& what) : std::runtime_error(what) {}
};

struct SizeGuardError : std::runtime_error {
  explicit SizeGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct MalformedProfile : std::runtime_error {
  explicit MalformedProfile(const std::string& what) : std::runtime_error(what) {}
};

// Result of an independent schedule verifier.
struct VerifyReport {
  long long objective = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

}  // namespace skel
