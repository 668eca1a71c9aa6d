#include "sgc/error.hpp"

namespace sgc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::BadEndpoint: return "BadEndpoint";
    case ErrorCode::BadVertex: return "BadVertex";
    case ErrorCode::DegenerateSquare: return "DegenerateSquare";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::HasPositiveEdge: return "HasPositiveEdge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::PartialAssignment: return "PartialAssignment";
    case ErrorCode::NoCandidateColorable: return "NoCandidateColorable";
    case ErrorCode::NotBipartite: return "NotBipartite";
    case ErrorCode::CircleMismatch: return "CircleMismatch";
    case ErrorCode::EqualAdjacentImages: return "EqualAdjacentImages";
    case ErrorCode::AmbiguousTie: return "AmbiguousTie";
    case ErrorCode::IntervalTouchesVertexImage: return "IntervalTouchesVertexImage";
    case ErrorCode::Uncolorable: return "Uncolorable";
    case ErrorCode::NotCylinder: return "NotCylinder";
    case ErrorCode::RTooLarge: return "RTooLarge";
    case ErrorCode::BadLemmaParams: return "BadLemmaParams";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sgc
