#include "arbor/error.hpp"

namespace arbor {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::RootQuery: return "RootQuery";
    case ErrorCode::UnknownArc: return "UnknownArc";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::PreconditionSourceTarget: return "PreconditionSourceTarget";
    case ErrorCode::PreconditionNewSourceTarget: return "PreconditionNewSourceTarget";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NonNumericWeight: return "NonNumericWeight";
    case ErrorCode::RootHasInArcs: return "RootHasInArcs";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NoRootArc: return "NoRootArc";
    case ErrorCode::NotRooted: return "NotRooted";
    case ErrorCode::ExpansionTooLarge: return "ExpansionTooLarge";
    case ErrorCode::UnboundVariable: return "UnboundVariable";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace arbor
