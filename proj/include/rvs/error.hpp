#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rvs {

enum class Errc {
  DisconnectedGraph,
  UnknownName,
  BadParams,
  RankTooLarge,
  LoopedVertex,
  SameVertex,
  NotReduced,
  WrongType,
  BadDegree,
  LengthLimit,
  IncompleteAssignment,
  BrokenPath,
  TruncatedEnumeration,
  SearchBudgetExceeded,
  InvalidFlow,
  NotInCone,
  ProjectionFailed,
  ZeroEigenvalue,
  DiagonalizationFailed,
  Overflow,
  Parse,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rvs
