#pragma once

#include <stdexcept>
#include <string>

namespace golden::exact {

enum class ArithmeticErrorKind { DivisionByZero, NegativeRadicand, MalformedNumber };

class ArithmeticError : public std::domain_error {
 public:
  ArithmeticError(ArithmeticErrorKind kind, const std::string& what)
      : std::domain_error(what), kind_(kind) {}

  ArithmeticErrorKind kind() const noexcept { return kind_; }

 private:
  ArithmeticErrorKind kind_;
};

}  // namespace golden::exact
