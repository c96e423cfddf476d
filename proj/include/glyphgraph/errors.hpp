#ifndef GLYPHGRAPH_ERRORS_HPP
#define GLYPHGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glyphgraph {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Invalid values or geometrically impossible data (exit code 1 in the CLI).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

// Malformed input documents; carries a JSON-ish path in the message.
class FormatError : public Error {
 public:
  explicit FormatError(const std::string& what) : Error(what) {}
};

// API or command-line misuse (exit code 2 in the CLI).
class UsageError : public Error {
 public:
  explicit UsageError(const std::string& what) : Error(what) {}
};

// A half-line pairing that cannot be merged; rejects the pairing plan.
class MergeError : public DomainError {
 public:
  explicit MergeError(const std::string& what) : DomainError(what) {}
};

}  // namespace glyphgraph

#endif  // GLYPHGRAPH_ERRORS_HPP
