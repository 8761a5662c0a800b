#include "lexsearch/error.hpp"

#include <utility>

namespace lexsearch {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::StartNotInGraph: return "StartNotInGraph";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::NotASearchOrder: return "NotASearchOrder";
    case ErrorKind::NotASpanningTree: return "NotASpanningTree";
    case ErrorKind::RhoDoesNotEndAtStart: return "RhoDoesNotEndAtStart";
    case ErrorKind::NotDfsLtree: return "NotDfsLtree";
    case ErrorKind::InvalidBeta: return "InvalidBeta";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::GraphTooLarge: return "GraphTooLarge";
    case ErrorKind::VertexNotInGroundSet: return "VertexNotInGroundSet";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "UnknownError";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

NotChordalError::NotChordalError(const std::string& message, std::vector<int> cycle)
    : Error(ErrorKind::NotChordal, message), cycle_(std::move(cycle)) {}

}  // namespace lexsearch
