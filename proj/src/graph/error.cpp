#include "planted/error.hpp"

namespace planted {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ScanBudgetExceeded: return "ScanBudgetExceeded";
    case ErrorCode::PatternTooLarge: return "PatternTooLarge";
    case ErrorCode::DegenerateQ: return "DegenerateQ";
    case ErrorCode::InvalidMoment: return "InvalidMoment";
    case ErrorCode::TooFewEdges: return "TooFewEdges";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::MissingSigma: return "MissingSigma";
  }
  return "Unknown";
}

}  // namespace planted
