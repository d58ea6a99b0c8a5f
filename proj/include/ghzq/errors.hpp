#ifndef GHZQ_ERRORS_HPP
#define GHZQ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ghzq {

/// Raised when a requested computation would exceed a configured resource
/// bound (state-vector amplitudes or LHV assignment space).
class ResourceLimitError : public std::runtime_error {
public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when two independent computation routes that must agree do not.
/// This always signals an implementation bug, never a physics result.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ghzq

#endif
