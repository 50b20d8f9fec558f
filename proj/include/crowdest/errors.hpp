#pragma once

#include <stdexcept>
#include <string>

namespace crowdest {

/// Input outside an operation's documented domain (CLI exit code 3).
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation of a rational function at a root of its denominator.
class PoleError : public DomainError {
public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// A certified internal invariant failed; indicates a bug (CLI exit code 4).
class InternalError : public std::logic_error {
public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace crowdest
