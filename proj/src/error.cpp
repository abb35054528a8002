#include "rvs/error.hpp"

namespace rvs {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::UnknownName: return "UnknownName";
    case Errc::BadParams: return "BadParams";
    case Errc::RankTooLarge: return "RankTooLarge";
    case Errc::LoopedVertex: return "LoopedVertex";
    case Errc::SameVertex: return "SameVertex";
    case Errc::NotReduced: return "NotReduced";
    case Errc::WrongType: return "WrongType";
    case Errc::BadDegree: return "BadDegree";
    case Errc::LengthLimit: return "LengthLimit";
    case Errc::IncompleteAssignment: return "IncompleteAssignment";
    case Errc::BrokenPath: return "BrokenPath";
    case Errc::TruncatedEnumeration: return "TruncatedEnumeration";
    case Errc::SearchBudgetExceeded: return "SearchBudgetExceeded";
    case Errc::InvalidFlow: return "InvalidFlow";
    case Errc::NotInCone: return "NotInCone";
    case Errc::ProjectionFailed: return "ProjectionFailed";
    case Errc::ZeroEigenvalue: return "ZeroEigenvalue";
    case Errc::DiagonalizationFailed: return "DiagonalizationFailed";
    case Errc::Overflow: return "Overflow";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace rvs
