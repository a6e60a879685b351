#ifndef SPLITGRAPH_ERRORS_HPP
#define SPLITGRAPH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace splitgraph {

// Input that does not parse: graph files, ideal files, config documents.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// A size guard refused the computation. The message names the offending cap.
struct CapExceededError : std::runtime_error {
  explicit CapExceededError(const std::string& m) : std::runtime_error(m) {}
};

// An internal consistency check failed. Indicates a bug, not bad input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& m) : std::logic_error(m) {}
};

}  // namespace splitgraph

#endif
