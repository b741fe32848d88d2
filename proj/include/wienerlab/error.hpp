#pragma once

#include <stdexcept>
#include <string>

namespace wienerlab {

// Category of a failure. The CLI maps these onto process exit codes.
enum class ErrorKind {
  kParse,         // malformed input text
  kValidation,    // input parsed but violates the tree invariants
  kPrecondition,  // arguments outside an operation's stated domain
  kDomain,        // well-formed request with no valid answer (empty class, stale context, ...)
  kInvariant,     // an internal cross-check disagreed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// First violated tree invariant found while validating an edge list.
enum class Violation {
  kEmpty,
  kTooLarge,
  kOutOfRange,
  kSelfLoop,
  kDuplicateEdge,
  kCycle,
  kDisconnected,
};

const char* to_string(Violation v);

class ValidationError : public Error {
 public:
  ValidationError(Violation violation, const std::string& detail)
      : Error(ErrorKind::kValidation, std::string(to_string(violation)) + ": " + detail),
        violation_(violation) {}

  Violation violation() const { return violation_; }

 private:
  Violation violation_;
};

}  // namespace wienerlab
