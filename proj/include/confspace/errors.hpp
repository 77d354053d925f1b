#pragma once

#include <stdexcept>
#include <string>

namespace confspace {

/// Raised when a sampled family is too coarse for a discrete certificate
/// (degree oracle, pose-grid planner) to be meaningful.
class ResolutionError : public std::runtime_error {
 public:
  explicit ResolutionError(const std::string& what)
      : std::runtime_error("resolution insufficient: " + what) {}
};

/// Raised when a requested construction cannot be realised at the given size.
class InfeasibleError : public std::runtime_error {
 public:
  explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace confspace
