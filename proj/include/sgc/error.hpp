#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sgc {

enum class ErrorCode {
  DuplicateEdge,
  LoopEdge,
  BadEndpoint,
  BadVertex,
  DegenerateSquare,
  BadParams,
  HasPositiveEdge,
  TooLarge,
  PartialAssignment,
  NoCandidateColorable,
  NotBipartite,
  CircleMismatch,
  EqualAdjacentImages,
  AmbiguousTie,
  IntervalTouchesVertexImage,
  Uncolorable,
  NotCylinder,
  RTooLarge,
  BadLemmaParams,
  ParseError,
};

std::string_view to_string(ErrorCode code);

// Domain error carrying a stable code; the CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sgc
