#pragma once

#include <stdexcept>
#include <string>

namespace charvar {

// Thrown when two independently computed results that must agree do not.
// The CLI maps this to exit code 2; plain user errors use std::invalid_argument.
struct invariant_violation : std::runtime_error {
  explicit invariant_violation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace charvar
