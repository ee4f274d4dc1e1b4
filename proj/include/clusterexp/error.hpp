#ifndef CLUSTEREXP_ERROR_HPP
#define CLUSTEREXP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace clusterexp {

// Error taxonomy. Input errors are the user's fault (CLI exit 2); internal
// errors mean a proven property of the construction failed to hold at
// runtime, i.e. an implementation bug (CLI exit 3).
enum class ErrorCode {
  // input
  BAD_INPUT,
  BAD_LABELS,
  CROSSING_DIAGONALS,
  NOT_MAXIMAL,
  NON_ACYCLIC_QUIVER,
  LIMIT_EXCEEDED,
  SIZE_LIMIT,
  // internal
  NOT_DIVISIBLE,
  MALFORMED_DENOMINATOR,
  VERIFICATION_FAILED,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::BAD_INPUT: return "BAD_INPUT";
    case ErrorCode::BAD_LABELS: return "BAD_LABELS";
    case ErrorCode::CROSSING_DIAGONALS: return "CROSSING_DIAGONALS";
    case ErrorCode::NOT_MAXIMAL: return "NOT_MAXIMAL";
    case ErrorCode::NON_ACYCLIC_QUIVER: return "NON_ACYCLIC_QUIVER";
    case ErrorCode::LIMIT_EXCEEDED: return "LIMIT_EXCEEDED";
    case ErrorCode::SIZE_LIMIT: return "SIZE_LIMIT";
    case ErrorCode::NOT_DIVISIBLE: return "NOT_DIVISIBLE";
    case ErrorCode::MALFORMED_DENOMINATOR: return "MALFORMED_DENOMINATOR";
    case ErrorCode::VERIFICATION_FAILED: return "VERIFICATION_FAILED";
  }
  return "UNKNOWN";
}

// True for codes that indicate a broken internal invariant rather than bad
// user input.
inline bool is_internal_error(ErrorCode c) {
  return c == ErrorCode::NOT_DIVISIBLE || c == ErrorCode::MALFORMED_DENOMINATOR ||
         c == ErrorCode::VERIFICATION_FAILED;
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

// Internal invariant check; cheap enough to keep on in release builds.
inline void require(bool cond, ErrorCode code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

}  // namespace clusterexp

#endif
