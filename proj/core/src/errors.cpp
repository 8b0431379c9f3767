#include "lamup/errors.hpp"

#include <sstream>

namespace lamup {

namespace {
std::string at(const std::string& path) {
  return path.empty() ? std::string() : " at " + path;
}
}  // namespace

TypeMismatchError::TypeMismatchError(std::string expected, std::string found, std::string path)
    : Error(Kind::TypeMismatch,
            "type mismatch" + at(path) + ": expected " + expected + ", found " + found),
      expected_(std::move(expected)),
      found_(std::move(found)),
      path_(std::move(path)) {}

EmptyContextError::EmptyContextError(const std::string& what_was_needed, const std::string& path)
    : Error(Kind::EmptyContext, what_was_needed + " in the empty context" + at(path)) {}

NotAFunctionError::NotAFunctionError(const std::string& found_ty, const std::string& path)
    : Error(Kind::NotAFunction,
            "application head" + at(path) + " has non-function type " + found_ty) {}

CannotInferError::CannotInferError(const std::string& why, const std::string& path)
    : Error(Kind::CannotInfer, "cannot infer a type" + at(path) + ": " + why) {}

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         std::vector<std::string> expected, const std::string& found)
    : Error(Kind::Syntax,
            [&] {
              std::ostringstream os;
              os << "syntax error at " << line << ":" << column << ": found " << found
                 << ", expected ";
              for (std::size_t i = 0; i < expected.size(); ++i) {
                if (i > 0) os << (i + 1 == expected.size() ? " or " : ", ");
                os << expected[i];
              }
              return os.str();
            }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

StepLimitError::StepLimitError(unsigned long long limit)
    : Error(Kind::StepLimit,
            "step limit of " + std::to_string(limit) + " reductions exceeded") {}

}  // namespace lamup
