#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace satgraph {

// Base class for all domain errors thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter is outside its documented domain (k < 3, n < 2, t < 3,
// inadmissible construction parameters, ...).
struct ParameterDomainError : Error {
  using Error::Error;
};

// Vertex, part, or index coordinates out of range.
struct IndexDomainError : Error {
  using Error::Error;
};

// An edge inside a single partite set: not a host edge, never representable.
struct MultipartiteViolationError : Error {
  using Error::Error;
};

// Closed-form size requested for a construction that has none.
struct NoClosedFormError : Error {
  using Error::Error;
};

// Caller broke a documented precondition that is cheap to detect.
struct ContractError : Error {
  using Error::Error;
};

// Host too large for exhaustive enumeration.
struct EnumerationCapError : Error {
  using Error::Error;
};

// Malformed graph6 or JSON input.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (byte " + std::to_string(offset) + ")"), byte_offset(offset) {}
  std::size_t byte_offset;
};

}  // namespace satgraph
