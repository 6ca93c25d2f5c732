#pragma once

#include <stdexcept>
#include <string>

namespace blipfield {

/// Violated numerical precondition (support leaking off the grid, aliasing
/// risk under a boost, non-antisymmetric phase gauge, ...). Distinct from
/// std::invalid_argument, which is reserved for malformed arguments/config.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

}
