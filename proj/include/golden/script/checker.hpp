#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "golden/script/ast.hpp"

namespace golden::script {

enum class DiagnosticCode { UnknownIdentifier, UnknownFunction, ArityMismatch, DuplicateName, KindMismatch, BadIndex };

const char* to_string(DiagnosticCode code);

struct Diagnostic {
  DiagnosticCode code;
  std::string message;
  SourceSpan span;
};

std::string format(const Diagnostic& d);

/// Parameter classes of built-in calls.
enum class Param {
  Point,
  Linear,  // line, ray or segment (a segment stands for its supporting line)
  Curve,   // linear or circle
  Scalar,
  Index,   // the integer literal 1 or 2
};

struct Builtin {
  std::string_view name;
  std::vector<Param> params;
  Kind result;
};

const Builtin* find_builtin(std::string_view name);
const std::vector<Builtin>& builtins();

/// Name, kind and arity diagnostics, without evaluating any geometry.
std::vector<Diagnostic> check(const Program& program);

}  // namespace golden::script
