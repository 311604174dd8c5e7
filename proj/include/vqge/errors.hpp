#pragma once

#include <stdexcept>
#include <string>

namespace vqge {

// Error taxonomy shared across modules. The CLI maps these onto exit codes:
// parse -> 1, capacity -> 3; everything else is a plain usage/internal error.
struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::invalid_argument {
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

struct EmptyPencilError : std::runtime_error {
  explicit EmptyPencilError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientStatisticsError : std::runtime_error {
  explicit InsufficientStatisticsError(const std::string& what)
      : std::runtime_error(what) {}
};

struct ModeError : std::runtime_error {
  explicit ModeError(const std::string& what) : std::runtime_error(what) {}
};

struct ArityError : std::invalid_argument {
  explicit ArityError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace vqge
