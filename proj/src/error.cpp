#include "wonderlat/error.hpp"

#include "wonderlat/types.hpp"

namespace wonderlat {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::TypeAColorUnsupported: return "TypeAColorUnsupported";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::RhoInconsistent: return "RhoInconsistent";
    case ErrorCode::DatumMismatch: return "DatumMismatch";
    case ErrorCode::RootMovesNoColor: return "RootMovesNoColor";
    case ErrorCode::NotMovable: return "NotMovable";
    case ErrorCode::NotGroupKind: return "NotGroupKind";
    case ErrorCode::NotEffective: return "NotEffective";
    case ErrorCode::NegativeAnticanonicalCoeff: return "NegativeAnticanonicalCoeff";
    case ErrorCode::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorCode::FixtureMissing: return "FixtureMissing";
  }
  return "Unknown";
}

namespace {

std::string summarize(const std::vector<Violation>& violations) {
  std::string out = std::to_string(violations.size()) + " violation(s)";
  for (const auto& v : violations) out += "\n  " + v.path + ": " + v.message;
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(ErrorCode::ValidationError, summarize(violations)), violations_(std::move(violations)) {}

std::string format(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace wonderlat
