#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "golden/script/ast.hpp"

namespace golden::script {

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, SourceSpan span)
      : std::runtime_error(to_string(span) + ": " + message), span_(span), message_(message) {}
  const SourceSpan& span() const { return span_; }
  const std::string& message() const { return message_; }

 private:
  SourceSpan span_;
  std::string message_;
};

enum class TokenType { Ident, Number, LParen, RParen, Comma, Equals, Colon, Plus, Minus, Star, Slash, Newline, End };

struct Token {
  TokenType type;
  std::string text;
  SourceSpan span;
};

/// Columns count code points, so a multi-byte character advances by one.
std::vector<Token> tokenize(std::string_view source);

/// Throws SyntaxError on the first malformed construct.
Program parse(std::string_view source);

}  // namespace golden::script
