#include "robust_topo/errors.hpp"

namespace rtopo {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::OverlappingPools: return "OverlappingPools";
    case ErrorCode::UnsortedPool: return "UnsortedPool";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::DanglingEdge: return "DanglingEdge";
  }
  return "UnknownError";
}

}  // namespace rtopo
