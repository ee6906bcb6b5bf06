#include "berge/error.hpp"

namespace berge {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidCycleLength: return "InvalidCycleLength";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyHypergraph: return "EmptyHypergraph";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::VertexNotInHost: return "VertexNotInHost";
    case ErrorCode::V0TooSmall: return "V0TooSmall";
    case ErrorCode::BadParameters: return "BadParameters";
    case ErrorCode::ParamsOutOfRange: return "ParamsOutOfRange";
    case ErrorCode::DoesNotDivide: return "DoesNotDivide";
    case ErrorCode::BlockTooSmall: return "BlockTooSmall";
    case ErrorCode::OutsideTheoremRange: return "OutsideTheoremRange";
    case ErrorCode::GridOutsideHypotheses: return "GridOutsideHypotheses";
    case ErrorCode::ScaleGuardExceeded: return "ScaleGuardExceeded";
    case ErrorCode::HostNotFree: return "HostNotFree";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace berge
