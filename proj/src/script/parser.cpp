#include "golden/script/parser.hpp"

#include <array>
#include <cctype>

namespace golden::script {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ' ' || c == '\t') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') advance();
      } else if (c == '\n' || c == '\r') {
        out.push_back({TokenType::Newline, "\n", {line_, column_, 1}});
        if (c == '\r' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '\n') ++pos_;
        ++pos_;
        ++line_;
        column_ = 1;
      } else if (ident_start(c)) {
        const SourceSpan start{line_, column_, 0};
        const std::size_t from = pos_;
        while (pos_ < src_.size() && ident_char(src_[pos_])) advance();
        out.push_back(finish(TokenType::Ident, from, start));
      } else if (digit(c)) {
        const SourceSpan start{line_, column_, 0};
        const std::size_t from = pos_;
        while (pos_ < src_.size() && digit(src_[pos_])) advance();
        if (pos_ < src_.size() && src_[pos_] == '.') {
          advance();
          if (pos_ >= src_.size() || !digit(src_[pos_])) throw SyntaxError("digits expected after '.'", {line_, column_, 1});
          while (pos_ < src_.size() && digit(src_[pos_])) advance();
        }
        if (pos_ < src_.size() && ident_start(src_[pos_])) {
          throw SyntaxError("malformed number", {start.line, start.column, static_cast<int>(pos_ - from) + 1});
        }
        out.push_back(finish(TokenType::Number, from, start));
      } else {
        static constexpr std::array<std::pair<char, TokenType>, 9> punct{{{'(', TokenType::LParen},
                                                                         {')', TokenType::RParen},
                                                                         {',', TokenType::Comma},
                                                                         {'=', TokenType::Equals},
                                                                         {':', TokenType::Colon},
                                                                         {'+', TokenType::Plus},
                                                                         {'-', TokenType::Minus},
                                                                         {'*', TokenType::Star},
                                                                         {'/', TokenType::Slash}}};
        bool matched = false;
        for (const auto& [ch, type] : punct) {
          if (c == ch) {
            out.push_back({type, std::string(1, c), {line_, column_, 1}});
            advance();
            matched = true;
            break;
          }
        }
        if (!matched) {
          const SourceSpan at{line_, column_, 1};
          if (static_cast<unsigned char>(c) >= 0x80) throw SyntaxError("unexpected non-ASCII character", at);
          throw SyntaxError(std::string("unexpected character '") + c + "'", at);
        }
      }
    }
    out.push_back({TokenType::Newline, "\n", {line_, column_, 0}});
    out.push_back({TokenType::End, "", {line_, column_, 0}});
    return out;
  }

 private:
  // One code point forward.
  void advance() {
    ++pos_;
    while (pos_ < src_.size() && (static_cast<unsigned char>(src_[pos_]) & 0xC0) == 0x80) ++pos_;
    ++column_;
  }

  Token finish(TokenType type, std::size_t from, SourceSpan span) {
    span.length = column_ - span.column;
    return {type, std::string(src_.substr(from, pos_ - from)), span};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_kind_word(const std::string& w, Kind& kind) {
  static const std::array<std::pair<const char*, Kind>, 6> kinds{{{"point", Kind::Point},
                                                                  {"line", Kind::Line},
                                                                  {"circle", Kind::Circle},
                                                                  {"segment", Kind::Segment},
                                                                  {"scalar", Kind::Scalar},
                                                                  {"triangle", Kind::Triangle}}};
  for (const auto& [name, k] : kinds) {
    if (w == name) {
      kind = k;
      return true;
    }
  }
  return false;
}

bool reserved(const std::string& w) {
  Kind unused{};
  return w == "phi" || w == "sqrt" || w == "dist" || w == "assert" || is_kind_word(w, unused);
}

SourceSpan cover(const SourceSpan& a, const SourceSpan& b) {
  if (a.line != b.line) return a;
  return {a.line, a.column, b.column + b.length - a.column};
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : t_(std::move(tokens)) {}

  Program program() {
    Program p;
    for (;;) {
      while (at(TokenType::Newline)) ++i_;
      if (at(TokenType::End)) break;
      p.statements.push_back(statement());
      if (!at(TokenType::Newline)) fail("expected end of line after statement");
    }
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return t_[std::min(i_ + ahead, t_.size() - 1)]; }
  bool at(TokenType type) const { return peek().type == type; }
  bool at_word(const char* w) const { return at(TokenType::Ident) && peek().text == w; }

  [[noreturn]] void fail(const std::string& message) const {
    const Token& tok = peek();
    std::string found = tok.type == TokenType::Newline ? "end of line"
                        : tok.type == TokenType::End   ? "end of input"
                                                       : "'" + tok.text + "'";
    throw SyntaxError(message + ", found " + found, tok.span);
  }

  const Token& expect(TokenType type, const char* what) {
    if (!at(type)) fail(std::string("expected ") + what);
    return t_[i_++];
  }

  const Token& expect_name(const char* what) {
    const Token& tok = expect(TokenType::Ident, what);
    if (reserved(tok.text)) throw SyntaxError("'" + tok.text + "' is a reserved word", tok.span);
    return tok;
  }

  Statement statement() {
    Statement s;
    const Token& first = peek();
    s.span = first.span;
    if (at_word("assert")) {
      ++i_;
      s.type = Statement::Type::Assert;
      const Token& name = expect_name("assertion name");
      s.name = name.text;
      s.name_span = name.span;
      expect(TokenType::Colon, "':'");
      s.relation = relation();
    } else {
      Kind kind{};
      if (!at(TokenType::Ident) || !is_kind_word(peek().text, kind)) {
        fail("expected a declaration (point, line, circle, segment, scalar, triangle) or 'assert'");
      }
      ++i_;
      s.kind = kind;
      const Token& name = expect_name("a name");
      s.name = name.text;
      s.name_span = name.span;
      expect(TokenType::Equals, "'='");
      s.expr = expr();
    }
    s.span = cover(s.span, t_[i_ - 1].span);
    return s;
  }

  Relation relation() {
    Relation r;
    const Token& head = expect(TokenType::Ident, "a relation");
    r.span = head.span;
    std::size_t arity = 0;
    if (head.text == "equal") {
      r.kind = RelationKind::Equal;
      expect(TokenType::LParen, "'('");
      r.scalars.push_back(scalar());
      expect(TokenType::Comma, "','");
      r.scalars.push_back(scalar());
    } else {
      if (head.text == "right_angle") {
        r.kind = RelationKind::RightAngle;
        arity = 3;
      } else if (head.text == "congruent") {
        r.kind = RelationKind::Congruent;
        arity = 2;
      } else if (head.text == "parallel") {
        r.kind = RelationKind::Parallel;
        arity = 2;
      } else {
        throw SyntaxError("unknown relation '" + head.text + "'", head.span);
      }
      expect(TokenType::LParen, "'('");
      for (std::size_t k = 0; k < arity; ++k) {
        if (k) expect(TokenType::Comma, "','");
        const Token& n = expect_name("a name");
        r.names.push_back(n.text);
        r.name_spans.push_back(n.span);
      }
    }
    r.span = cover(r.span, expect(TokenType::RParen, "')'").span);
    return r;
  }

  bool at_call() const {
    if (!at(TokenType::Ident) || peek(1).type != TokenType::LParen) return false;
    const std::string& w = peek().text;
    return w != "phi" && w != "sqrt" && w != "dist";
  }

  Expr expr() {
    if (at_call()) return call();
    if (at(TokenType::LParen)) {
      // Either a point literal or a parenthesized scalar; try the literal first.
      const std::size_t save = i_;
      const SourceSpan open = peek().span;
      ++i_;
      Expr x = scalar();
      if (at(TokenType::Comma)) {
        ++i_;
        Expr y = scalar();
        const Token& close = expect(TokenType::RParen, "')'");
        Expr p;
        p.kind = ExprKind::PointLiteral;
        p.span = cover(open, close.span);
        p.args.push_back(std::move(x));
        p.args.push_back(std::move(y));
        return p;
      }
      i_ = save;
    }
    return scalar();
  }

  Expr call() {
    Expr c;
    c.kind = ExprKind::Call;
    const Token& name = t_[i_++];
    c.name = name.text;
    ++i_;  // '('
    if (!at(TokenType::RParen)) {
      c.args.push_back(expr());
      while (at(TokenType::Comma)) {
        ++i_;
        c.args.push_back(expr());
      }
    }
    c.span = cover(name.span, expect(TokenType::RParen, "')' or ','").span);
    return c;
  }

  Expr binary(char op, Expr lhs, Expr rhs) {
    Expr b;
    b.kind = ExprKind::Binary;
    b.op = op;
    b.span = cover(lhs.span, rhs.span);
    b.args.push_back(std::move(lhs));
    b.args.push_back(std::move(rhs));
    return b;
  }

  Expr scalar() {
    Expr lhs = term();
    while (at(TokenType::Plus) || at(TokenType::Minus)) {
      const char op = t_[i_++].text[0];
      lhs = binary(op, std::move(lhs), term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = factor();
    while (at(TokenType::Star) || at(TokenType::Slash)) {
      const char op = t_[i_++].text[0];
      lhs = binary(op, std::move(lhs), factor());
    }
    return lhs;
  }

  Expr factor() {
    const Token& tok = peek();
    Expr e;
    e.span = tok.span;
    switch (tok.type) {
      case TokenType::Number:
        ++i_;
        e.kind = ExprKind::Number;
        e.text = tok.text;
        e.value = exact::Rational::parse(tok.text);
        return e;
      case TokenType::Minus:
        ++i_;
        e.kind = ExprKind::Negate;
        e.args.push_back(factor());
        e.span = cover(tok.span, e.args[0].span);
        return e;
      case TokenType::LParen: {
        ++i_;
        Expr inner = scalar();
        expect(TokenType::RParen, "')'");
        return inner;
      }
      case TokenType::Ident:
        break;
      default:
        fail("expected a number, name or '('");
    }
    ++i_;
    if (tok.text == "phi") {
      e.kind = ExprKind::Phi;
      return e;
    }
    if (tok.text == "sqrt") {
      e.kind = ExprKind::Sqrt;
      expect(TokenType::LParen, "'(' after sqrt");
      e.args.push_back(scalar());
      e.span = cover(tok.span, expect(TokenType::RParen, "')'").span);
      return e;
    }
    if (tok.text == "dist") {
      e.kind = ExprKind::Dist;
      expect(TokenType::LParen, "'(' after dist");
      for (int k = 0; k < 2; ++k) {
        if (k) expect(TokenType::Comma, "','");
        const Token& n = expect_name("a point name");
        Expr name;
        name.kind = ExprKind::Name;
        name.name = n.text;
        name.span = n.span;
        e.args.push_back(std::move(name));
      }
      e.span = cover(tok.span, expect(TokenType::RParen, "')'").span);
      return e;
    }
    if (at(TokenType::LParen)) {
      --i_;
      return call();
    }
    if (reserved(tok.text)) throw SyntaxError("'" + tok.text + "' is a reserved word", tok.span);
    e.kind = ExprKind::Name;
    e.name = tok.text;
    return e;
  }

  std::vector<Token> t_;
  std::size_t i_ = 0;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

Program parse(std::string_view source) { return Parser(tokenize(source)).program(); }

}  // namespace golden::script
