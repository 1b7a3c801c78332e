#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace barnette {

enum class ErrorKind {
  AsymmetricAdjacency,
  MultiEdgeOrLoop,
  NonPlanarEmbedding,
  Disconnected,
  InvalidInput,
  NotEvenTriangulation,
  DegreeBelowFour,
  NotBipartite,
  CycleCapExceeded,
  NotCPath,
  PathConditionViolated,
  NoSuchBlock,
  NoCutPath,
  NotInFamilyH,
  NotOn4Cycle,
  BipyramidSpecialCase,
  CaseUnmatched,
  ConditionViolated,
  ConstraintInvalid,
  SearchExhausted,
  HNotInFamily,
  HComponentNot2Connected,
  NotTreePartition,
  NotHamilton,
  CapExceeded,
  SizeTooSmall,
  SizeOutOfRange,
  NoneFound,
  InternalError,
  IoError,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` is stable and machine
/// readable; `what()` carries the human-oriented detail.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace barnette
