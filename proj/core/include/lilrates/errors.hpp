#pragma once

#include <stdexcept>
#include <string>

namespace lilrates {

// Requested accuracy could not be certified within the refinement limits.
class tolerance_error : public std::runtime_error {
 public:
  explicit tolerance_error(const std::string& what) : std::runtime_error(what) {}
};

// An n-grid does not cover enough of a series for the requested tolerance.
class grid_error : public std::runtime_error {
 public:
  explicit grid_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lilrates
