#pragma once

#include <stdexcept>
#include <string>

namespace uberhom {

/// Failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  invalid_argument,
  parse,
  dimension_mismatch,
  resource_cap,
  internal,
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

}  // namespace uberhom
