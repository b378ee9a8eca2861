#pragma once

#include <stdexcept>
#include <string>

namespace incat {

// Base of every error thrown by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotComposable : public Error {
 public:
  NotComposable(const std::string& left, const std::string& right)
      : Error("not composable: source of " + left + " differs from target of " + right) {}
};

class UndefinedKey : public Error {
 public:
  explicit UndefinedKey(const std::string& key) : Error("linear map undefined on key " + key) {}
};

// Raised when an enumerator cannot certify that it produced every factorization.
class EnumerationBound : public Error {
 public:
  using Error::Error;
};

// Length recursion exceeded the instance's declared bound without closing a cycle.
class Divergence : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace incat
