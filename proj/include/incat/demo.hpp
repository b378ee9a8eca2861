#pragma once

#include <string>
#include <vector>

namespace incat {

const std::vector<std::string>& demo_names();

/// Replays one worked example end to end and returns the transcript.
/// Throws PreconditionViolation for an unknown name.
std::string run_demo(const std::string& name);

}  // namespace incat
