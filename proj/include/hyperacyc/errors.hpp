#pragma once

#include <stdexcept>
#include <string>

namespace hyperacyc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownVertexError : Error {
  explicit UnknownVertexError(const std::string& token)
      : Error("unknown vertex: " + token) {}
};

struct MalformedTokenError : Error {
  explicit MalformedTokenError(const std::string& what) : Error(what) {}
};

struct EdgeNotInHypergraphError : Error {
  explicit EdgeNotInHypergraphError(const std::string& edge)
      : Error("edge not in hypergraph: " + edge) {}
};

struct InvalidSubsetError : Error {
  explicit InvalidSubsetError(const std::string& what) : Error(what) {}
};

struct NotNeighboursError : Error {
  NotNeighboursError(const std::string& x, const std::string& y)
      : Error("vertices are not neighbours: " + x + ", " + y) {}
};

struct NotAlphaAcyclicError : Error {
  NotAlphaAcyclicError() : Error("hypergraph is not alpha acyclic") {}
};

struct StepDoesNotApplyError : Error {
  explicit StepDoesNotApplyError(const std::string& what) : Error(what) {}
};

struct MalformedTreeError : Error {
  explicit MalformedTreeError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Thrown when a self-check that should be unreachable fails; indicates a bug.
struct InternalInconsistencyError : Error {
  explicit InternalInconsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace hyperacyc
