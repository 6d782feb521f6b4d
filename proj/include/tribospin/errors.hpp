#pragma once

#include <stdexcept>
#include <string>

namespace tribospin {

// Stable failure codes; the C boundary maps these 1:1 onto ts_status values.
enum class ErrorCode {
  ZeroDivisor,
  ZeroDenominator,
  RepeatedRoots,
  PreconditionViolated,
  NotFound,
  SingularPivot,
  LimitExceeded,
  Parse,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

struct ZeroDivisorError : Error {
  explicit ZeroDivisorError(const std::string& w) : Error(ErrorCode::ZeroDivisor, w) {}
};

struct ZeroDenominatorError : Error {
  explicit ZeroDenominatorError(const std::string& w) : Error(ErrorCode::ZeroDenominator, w) {}
};

struct RepeatedRootsError : Error {
  explicit RepeatedRootsError(const std::string& w) : Error(ErrorCode::RepeatedRoots, w) {}
};

struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w) : Error(ErrorCode::PreconditionViolated, w) {}
};

struct NotFoundError : Error {
  explicit NotFoundError(const std::string& w) : Error(ErrorCode::NotFound, w) {}
};

struct SingularPivotError : Error {
  explicit SingularPivotError(const std::string& w) : Error(ErrorCode::SingularPivot, w) {}
};

struct LimitError : Error {
  explicit LimitError(const std::string& w) : Error(ErrorCode::LimitExceeded, w) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& w) : Error(ErrorCode::Parse, w) {}
};

}  // namespace tribospin
