#pragma once

#include <stdexcept>
#include <string>

namespace rtopo {

enum class ErrorCode {
  DuplicateVertex,
  UnknownVertex,
  IndexOutOfRange,
  OverlappingPools,
  UnsortedPool,
  DuplicateEdge,
  UnknownEdge,
  DanglingEdge,
};

const char* to_string(ErrorCode code);

// Raised for any precondition violation on the graph structures.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rtopo
