#pragma once

#include <stdexcept>
#include <string>

namespace moldiff {

/// Invalid configuration or domain-type invariant violation.
/// The CLI maps this to exit code 2.
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure (non-convergence, degenerate input, diagnostic error).
/// The CLI maps this to exit code 3.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace moldiff
