#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lamup {

// Base of all domain errors; the CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    TypeMismatch,
    EmptyContext,
    NotAFunction,
    CannotInfer,
    ContextMismatch,
    Syntax,
    Scope,
    StepLimit,
    Unsatisfiable,
  };

  Error(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class TypeMismatchError : public Error {
 public:
  TypeMismatchError(std::string expected, std::string found, std::string path);
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }
  const std::string& path() const { return path_; }

 private:
  std::string expected_, found_, path_;
};

class EmptyContextError : public Error {
 public:
  explicit EmptyContextError(const std::string& what_was_needed, const std::string& path);
};

class NotAFunctionError : public Error {
 public:
  NotAFunctionError(const std::string& found_ty, const std::string& path);
};

class CannotInferError : public Error {
 public:
  explicit CannotInferError(const std::string& why, const std::string& path);
};

class ContextMismatchError : public Error {
 public:
  explicit ContextMismatchError(const std::string& message)
      : Error(Kind::ContextMismatch, message) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::vector<std::string> expected,
              const std::string& found);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_, column_;
  std::vector<std::string> expected_;
};

class ScopeError : public Error {
 public:
  explicit ScopeError(const std::string& message) : Error(Kind::Scope, message) {}
};

class StepLimitError : public Error {
 public:
  explicit StepLimitError(unsigned long long limit);
};

class UnsatisfiableError : public Error {
 public:
  explicit UnsatisfiableError(const std::string& message)
      : Error(Kind::Unsatisfiable, message) {}
};

}  // namespace lamup
