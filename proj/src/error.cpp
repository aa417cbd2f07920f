#include "odiam/error.hpp"

namespace odiam {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kLoopEdge: return "LoopEdge";
    case ErrorCode::kVertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kBridgeEdge: return "BridgeEdge";
    case ErrorCode::kNotBridgeless: return "NotBridgeless";
    case ErrorCode::kConflictingDirection: return "ConflictingDirection";
    case ErrorCode::kEndpointMismatch: return "EndpointMismatch";
    case ErrorCode::kOverlappingSets: return "OverlappingSets";
    case ErrorCode::kNotStrong: return "NotStrong";
    case ErrorCode::kEmptyClassViolation: return "EmptyClassViolation";
    case ErrorCode::kDefinitionUnsatisfiable: return "DefinitionUnsatisfiable";
    case ErrorCode::kIsolatedVertexInS: return "IsolatedVertexInS";
    case ErrorCode::kNoNeighborInR: return "NoNeighborInR";
    case ErrorCode::kPreconditionGstar: return "PreconditionGstar";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidSpec: return "InvalidSpec";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kIncompleteOrientation: return "IncompleteOrientation";
    case ErrorCode::kUnsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace odiam
