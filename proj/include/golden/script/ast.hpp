#pragma once

#include <string>
#include <vector>

#include "golden/exact/rational.hpp"

namespace golden::script {

struct SourceSpan {
  int line = 1;
  int column = 1;
  int length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

std::string to_string(const SourceSpan& span);

enum class Kind { Point, Line, Circle, Segment, Scalar, Triangle };

const char* to_string(Kind kind);

enum class ExprKind { Number, Phi, Sqrt, Dist, Name, Binary, Negate, PointLiteral, Call };

/// Expression node. Which fields are meaningful depends on `kind`:
/// Number uses value/text, Name and Call use name, Binary uses op, Dist uses
/// args as two Name nodes.
struct Expr {
  ExprKind kind = ExprKind::Number;
  SourceSpan span;
  exact::Rational value;
  std::string text;
  std::string name;
  char op = 0;
  std::vector<Expr> args;
};

/// Structural equality; spans and literal spelling are ignored.
bool same_tree(const Expr& a, const Expr& b);

enum class RelationKind { Equal, RightAngle, Congruent, Parallel };

struct Relation {
  RelationKind kind = RelationKind::Equal;
  SourceSpan span;
  /// The two sides of equal(...).
  std::vector<Expr> scalars;
  /// Object names for the other relations.
  std::vector<std::string> names;
  std::vector<SourceSpan> name_spans;
};

struct Statement {
  enum class Type { Declare, Assert } type = Type::Declare;
  SourceSpan span;
  Kind kind = Kind::Point;
  std::string name;
  SourceSpan name_span;
  Expr expr;
  Relation relation;
};

struct Program {
  std::vector<Statement> statements;
};

bool same_program(const Program& a, const Program& b);

std::string print(const Expr& e);
std::string print(const Relation& r);
std::string print(const Statement& s);
/// Canonical source text; parses back to an equal program.
std::string print(const Program& p);

}  // namespace golden::script
