#include "golden/script/ast.hpp"

namespace golden::script {

std::string to_string(const SourceSpan& span) {
  return "line " + std::to_string(span.line) + ", column " + std::to_string(span.column);
}

const char* to_string(Kind kind) {
  switch (kind) {
    case Kind::Point: return "point";
    case Kind::Line: return "line";
    case Kind::Circle: return "circle";
    case Kind::Segment: return "segment";
    case Kind::Scalar: return "scalar";
    case Kind::Triangle: return "triangle";
  }
  return "?";
}

bool same_tree(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case ExprKind::Number:
      if (a.value != b.value) return false;
      break;
    case ExprKind::Name:
    case ExprKind::Call:
      if (a.name != b.name) return false;
      break;
    case ExprKind::Binary:
      if (a.op != b.op) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_tree(a.args[i], b.args[i])) return false;
  }
  return true;
}

namespace {

bool same_relation(const Relation& a, const Relation& b) {
  if (a.kind != b.kind || a.names != b.names || a.scalars.size() != b.scalars.size()) return false;
  for (std::size_t i = 0; i < a.scalars.size(); ++i) {
    if (!same_tree(a.scalars[i], b.scalars[i])) return false;
  }
  return true;
}

int precedence(const Expr& e) {
  if (e.kind == ExprKind::Binary) return (e.op == '+' || e.op == '-') ? 1 : 2;
  if (e.kind == ExprKind::Negate) return 3;
  return 4;
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + print(e) + ")" : print(e); }

std::string join(const std::vector<Expr>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print(args[i]);
  }
  return out;
}

// Literals are integers or finite decimals; other values fall back to n/d.
std::string number_text(const Expr& e) {
  if (!e.text.empty()) return e.text;
  const exact::Rational& v = e.value;
  if (v.is_integer()) return v.to_string();
  mpz_class scale = 1;
  std::size_t places = 0;
  while (places < 64 && mpz_divisible_p(scale.get_mpz_t(), v.denominator().get_mpz_t()) == 0) {
    scale *= 10;
    ++places;
  }
  if (mpz_divisible_p(scale.get_mpz_t(), v.denominator().get_mpz_t()) == 0) return v.to_string();
  const mpz_class scaled = abs(v.numerator()) * (scale / v.denominator());
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (v.sign() < 0 ? "-" : "") + digits;
}

}  // namespace

bool same_program(const Program& a, const Program& b) {
  if (a.statements.size() != b.statements.size()) return false;
  for (std::size_t i = 0; i < a.statements.size(); ++i) {
    const Statement& x = a.statements[i];
    const Statement& y = b.statements[i];
    if (x.type != y.type || x.name != y.name) return false;
    if (x.type == Statement::Type::Declare) {
      if (x.kind != y.kind || !same_tree(x.expr, y.expr)) return false;
    } else if (!same_relation(x.relation, y.relation)) {
      return false;
    }
  }
  return true;
}

std::string print(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number: return number_text(e);
    case ExprKind::Phi: return "phi";
    case ExprKind::Name: return e.name;
    case ExprKind::Sqrt: return "sqrt(" + print(e.args[0]) + ")";
    case ExprKind::Dist: return "dist(" + print(e.args[0]) + ", " + print(e.args[1]) + ")";
    case ExprKind::Negate: return "-" + wrap(e.args[0], precedence(e.args[0]) < 3 || e.args[0].kind == ExprKind::Negate);
    case ExprKind::PointLiteral: return "(" + join(e.args) + ")";
    case ExprKind::Call: return e.name + "(" + join(e.args) + ")";
    case ExprKind::Binary: {
      const int p = precedence(e);
      return wrap(e.args[0], precedence(e.args[0]) < p) + " " + e.op + " " + wrap(e.args[1], precedence(e.args[1]) <= p);
    }
  }
  return "";
}

std::string print(const Relation& r) {
  switch (r.kind) {
    case RelationKind::Equal: return "equal(" + join(r.scalars) + ")";
    case RelationKind::RightAngle: return "right_angle(" + r.names[0] + ", " + r.names[1] + ", " + r.names[2] + ")";
    case RelationKind::Congruent: return "congruent(" + r.names[0] + ", " + r.names[1] + ")";
    case RelationKind::Parallel: return "parallel(" + r.names[0] + ", " + r.names[1] + ")";
  }
  return "";
}

std::string print(const Statement& s) {
  if (s.type == Statement::Type::Assert) return "assert " + s.name + ": " + print(s.relation);
  return std::string(to_string(s.kind)) + " " + s.name + " = " + print(s.expr);
}

std::string print(const Program& p) {
  std::string out;
  for (const auto& s : p.statements) out += print(s) + "\n";
  return out;
}

}  // namespace golden::script
