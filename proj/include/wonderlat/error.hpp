#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace wonderlat {

enum class ErrorCode {
  InvalidRank,
  InvalidArgument,
  IndexOutOfRange,
  TypeAColorUnsupported,
  ParseError,
  ValidationError,
  RhoInconsistent,
  DatumMismatch,
  RootMovesNoColor,
  NotMovable,
  NotGroupKind,
  NotEffective,
  NegativeAnticanonicalCoeff,
  ConsistencyFailure,
  FixtureMissing,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// One failed check, located by a JSON-pointer-style path such as "/colors/2/moved_by".
struct Violation {
  std::string path;
  std::string message;

  bool operator==(const Violation&) const = default;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  std::vector<Violation> violations_;
};

}  // namespace wonderlat
