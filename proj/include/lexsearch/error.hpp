#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lexsearch {

enum class ErrorKind {
  EmptyInput,
  SelfLoop,
  Disconnected,
  StartNotInGraph,
  InvalidOrder,
  NotASearchOrder,
  NotASpanningTree,
  RhoDoesNotEndAtStart,
  NotDfsLtree,
  InvalidBeta,
  NotChordal,
  GraphTooLarge,
  VertexNotInGroundSet,
  InvalidParameters,
  ParseError,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

// Thrown when an operation that requires a chordal input graph is handed a
// non-chordal one.  Carries the certifying chordless cycle (vertex ids, in
// cycle order) so callers can report it without re-running the check.
class NotChordalError : public Error {
 public:
  NotChordalError(const std::string& message, std::vector<int> cycle);
  const std::vector<int>& cycle() const { return cycle_; }

 private:
  std::vector<int> cycle_;
};

}  // namespace lexsearch
