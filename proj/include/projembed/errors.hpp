#pragma once

#include <stdexcept>
#include <string>

namespace projembed {

/// Argument outside the mathematical domain of an operation (level out of range, off-sphere point).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Caller passed inconsistent shapes or options.
class UsageError : public std::invalid_argument {
 public:
  explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// An object that should exist by construction could not be formed (rank loss, no restriction map).
class StructuralError : public std::runtime_error {
 public:
  explicit StructuralError(const std::string& what) : std::runtime_error(what) {}
};

class PreconditionError : public std::logic_error {
 public:
  explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace projembed
