#include "snc/error.hpp"

namespace snc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::LoopRejected: return "LoopRejected";
    case ErrorCode::DigonRejected: return "DigonRejected";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::MoveLimitExceeded: return "MoveLimitExceeded";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::InternalTheoremViolation: return "InternalTheoremViolation";
    case ErrorCode::NotMissing: return "NotMissing";
    case ErrorCode::NotAllGood: return "NotAllGood";
    case ErrorCode::NotAViolation: return "NotAViolation";
    case ErrorCode::BadProfile: return "BadProfile";
    case ErrorCode::NoWitnessFound: return "NoWitnessFound";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace snc
