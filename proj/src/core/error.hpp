#pragma once

#include <stdexcept>
#include <string>

namespace gmm {

/// Failure categories surfaced through the C API as distinct status codes.
enum class ErrorKind {
  kInvalidArgument,
  kIndex,
  kShape,
  kArity,
  kValidation,
  kDomain,
  kDivergence,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace gmm
