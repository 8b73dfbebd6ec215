#include "golden/script/checker.hpp"

#include <map>
#include <set>

namespace golden::script {

const char* to_string(DiagnosticCode code) {
  switch (code) {
    case DiagnosticCode::UnknownIdentifier: return "UnknownIdentifier";
    case DiagnosticCode::UnknownFunction: return "UnknownFunction";
    case DiagnosticCode::ArityMismatch: return "ArityMismatch";
    case DiagnosticCode::DuplicateName: return "DuplicateName";
    case DiagnosticCode::KindMismatch: return "KindMismatch";
    case DiagnosticCode::BadIndex: return "BadIndex";
  }
  return "?";
}

std::string format(const Diagnostic& d) {
  return to_string(d.span) + ": " + to_string(d.code) + ": " + d.message;
}

const std::vector<Builtin>& builtins() {
  using P = Param;
  static const std::vector<Builtin> table{
      {"line", {P::Point, P::Point}, Kind::Line},
      {"segment", {P::Point, P::Point}, Kind::Segment},
      {"ray", {P::Point, P::Point}, Kind::Line},
      {"circle", {P::Point, P::Scalar}, Kind::Circle},
      {"circle_through", {P::Point, P::Point}, Kind::Circle},
      {"midpoint", {P::Point, P::Point}, Kind::Point},
      {"foot", {P::Point, P::Linear}, Kind::Point},
      {"perp_at", {P::Point, P::Linear}, Kind::Line},
      {"intersect", {P::Curve, P::Curve, P::Index}, Kind::Point},
      {"point_on", {P::Linear, P::Scalar}, Kind::Point},
      {"square_on_1", {P::Point, P::Point, P::Point}, Kind::Point},
      {"square_on_2", {P::Point, P::Point, P::Point}, Kind::Point},
      {"golden_ext", {P::Point, P::Point}, Kind::Point},
      {"kepler", {P::Point, P::Point}, Kind::Point},
      {"triangle", {P::Point, P::Point, P::Point}, Kind::Triangle},
  };
  return table;
}

const Builtin* find_builtin(std::string_view name) {
  for (const auto& b : builtins()) {
    if (b.name == name) return &b;
  }
  return nullptr;
}

namespace {

bool accepts(Param p, Kind k) {
  switch (p) {
    case Param::Point: return k == Kind::Point;
    case Param::Linear: return k == Kind::Line || k == Kind::Segment;
    case Param::Curve: return k == Kind::Line || k == Kind::Segment || k == Kind::Circle;
    case Param::Scalar:
    case Param::Index: return k == Kind::Scalar;
  }
  return false;
}

const char* describe(Param p) {
  switch (p) {
    case Param::Point: return "a point";
    case Param::Linear: return "a line, ray or segment";
    case Param::Curve: return "a line or circle";
    case Param::Scalar: return "a scalar";
    case Param::Index: return "the index 1 or 2";
  }
  return "?";
}

class Checker {
 public:
  std::vector<Diagnostic> run(const Program& program) {
    for (const auto& s : program.statements) {
      const bool fresh = declare(s.name, s.name_span);
      if (s.type == Statement::Type::Declare) {
        const auto got = infer(s.expr);
        if (got && *got != s.kind) {
          report(DiagnosticCode::KindMismatch,
                 std::string("'") + s.name + "' is declared " + to_string(s.kind) + " but the value is a " + to_string(*got),
                 s.expr.span);
        }
        if (fresh) kinds_[s.name] = s.kind;
      } else {
        relation(s.relation);
        if (fresh) asserts_.emplace(s.name);
      }
    }
    return std::move(out_);
  }

 private:
  void report(DiagnosticCode code, std::string message, SourceSpan span) {
    out_.push_back({code, std::move(message), span});
  }

  bool declare(const std::string& name, SourceSpan span) {
    if (kinds_.count(name) != 0 || asserts_.count(name) != 0) {
      report(DiagnosticCode::DuplicateName, "'" + name + "' is already defined", span);
      return false;
    }
    return true;
  }

  std::optional<Kind> lookup(const std::string& name, SourceSpan span) {
    const auto it = kinds_.find(name);
    if (it != kinds_.end()) return it->second;
    if (asserts_.count(name) != 0) {
      report(DiagnosticCode::KindMismatch, "'" + name + "' names an assertion, not an object", span);
    } else {
      report(DiagnosticCode::UnknownIdentifier, "'" + name + "' is not declared before this use", span);
    }
    return std::nullopt;
  }

  void require(const Expr& e, Kind want) {
    const auto got = infer(e);
    if (got && *got != want) {
      report(DiagnosticCode::KindMismatch, std::string("expected a ") + to_string(want) + ", got a " + to_string(*got),
             e.span);
    }
  }

  std::optional<Kind> infer(const Expr& e) {
    switch (e.kind) {
      case ExprKind::Number:
      case ExprKind::Phi:
        return Kind::Scalar;
      case ExprKind::Sqrt:
      case ExprKind::Negate:
        require(e.args[0], Kind::Scalar);
        return Kind::Scalar;
      case ExprKind::Binary:
        require(e.args[0], Kind::Scalar);
        require(e.args[1], Kind::Scalar);
        return Kind::Scalar;
      case ExprKind::Dist:
        require(e.args[0], Kind::Point);
        require(e.args[1], Kind::Point);
        return Kind::Scalar;
      case ExprKind::Name:
        return lookup(e.name, e.span);
      case ExprKind::PointLiteral:
        require(e.args[0], Kind::Scalar);
        require(e.args[1], Kind::Scalar);
        return Kind::Point;
      case ExprKind::Call:
        return call(e);
    }
    return std::nullopt;
  }

  std::optional<Kind> call(const Expr& e) {
    const Builtin* b = find_builtin(e.name);
    if (!b) {
      report(DiagnosticCode::UnknownFunction, "unknown function '" + e.name + "'", e.span);
      for (const auto& a : e.args) infer(a);
      return std::nullopt;
    }
    if (e.args.size() != b->params.size()) {
      report(DiagnosticCode::ArityMismatch,
             e.name + " takes " + std::to_string(b->params.size()) + " arguments, got " + std::to_string(e.args.size()),
             e.span);
      return b->result;
    }
    for (std::size_t i = 0; i < e.args.size(); ++i) {
      const Expr& a = e.args[i];
      if (b->params[i] == Param::Index) {
        if (a.kind != ExprKind::Number || !(a.value == exact::Rational(1) || a.value == exact::Rational(2))) {
          report(DiagnosticCode::BadIndex, "intersection index must be the literal 1 or 2", a.span);
        }
        continue;
      }
      const auto got = infer(a);
      if (got && !accepts(b->params[i], *got)) {
        report(DiagnosticCode::KindMismatch,
               "argument " + std::to_string(i + 1) + " of " + e.name + " must be " + describe(b->params[i]) + ", got a " +
                   to_string(*got),
               a.span);
      }
    }
    return b->result;
  }

  void name_of(const std::string& name, SourceSpan span, bool (*ok)(Kind), const char* what) {
    const auto k = lookup(name, span);
    if (k && !ok(*k)) {
      report(DiagnosticCode::KindMismatch, "'" + name + "' must be " + what + ", it is a " + to_string(*k), span);
    }
  }

  void relation(const Relation& r) {
    switch (r.kind) {
      case RelationKind::Equal:
        require(r.scalars[0], Kind::Scalar);
        require(r.scalars[1], Kind::Scalar);
        return;
      case RelationKind::RightAngle:
        for (std::size_t i = 0; i < 3; ++i) {
          name_of(r.names[i], r.name_spans[i], [](Kind k) { return k == Kind::Point; }, "a point");
        }
        return;
      case RelationKind::Parallel:
        for (std::size_t i = 0; i < 2; ++i) {
          name_of(r.names[i], r.name_spans[i], [](Kind k) { return k == Kind::Line || k == Kind::Segment; },
                  "a line or segment");
        }
        return;
      case RelationKind::Congruent: {
        const auto a = lookup(r.names[0], r.name_spans[0]);
        const auto b = lookup(r.names[1], r.name_spans[1]);
        for (std::size_t i = 0; i < 2; ++i) {
          const auto& k = i == 0 ? a : b;
          if (k && *k != Kind::Triangle && *k != Kind::Segment) {
            report(DiagnosticCode::KindMismatch, "congruent compares triangles or segments", r.name_spans[i]);
          }
        }
        if (a && b && *a != *b && (*a == Kind::Triangle || *a == Kind::Segment) &&
            (*b == Kind::Triangle || *b == Kind::Segment)) {
          report(DiagnosticCode::KindMismatch, "congruent needs two objects of the same kind", r.name_spans[1]);
        }
        return;
      }
    }
  }

  std::map<std::string, Kind> kinds_;
  std::set<std::string> asserts_;
  std::vector<Diagnostic> out_;
};

}  // namespace

std::vector<Diagnostic> check(const Program& program) { return Checker().run(program); }

}  // namespace golden::script
