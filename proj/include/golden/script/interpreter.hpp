#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "golden/euclid/construction.hpp"
#include "golden/script/ast.hpp"
#include "golden/script/checker.hpp"

namespace golden::script {

using Value = std::variant<euclid::Point, euclid::Line, euclid::Circle, euclid::Segment, exact::Real, euclid::Triangle>;

/// Raised when a program fails the checker; execution never starts.
class CheckError : public std::runtime_error {
 public:
  explicit CheckError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// A statement whose geometry or arithmetic failed. `cause` is the name of
/// the underlying error kind, e.g. "NoIntersection" or "NegativeRadicand".
class GeometryError : public std::runtime_error {
 public:
  GeometryError(std::string cause, std::size_t step, SourceSpan span, const std::string& detail);
  const std::string& cause() const { return cause_; }
  /// Zero-based statement index.
  std::size_t step() const { return step_; }
  const SourceSpan& span() const { return span_; }

 private:
  std::string cause_;
  std::size_t step_;
  SourceSpan span_;
};

struct SceneObject {
  std::string name;
  Kind kind;
  Value value;
  /// Position in the scene trace for points, lines and circles.
  std::optional<std::size_t> trace_id;
  SourceSpan span;
};

struct AssertionResult {
  std::string name;
  std::string relation;
  bool passed = false;
  SourceSpan span;
};

struct Scene {
  std::vector<SceneObject> objects;
  euclid::ConstructionTrace trace;
  std::vector<AssertionResult> assertions;

  const SceneObject* find(const std::string& name) const;
  bool all_passed() const;
  /// Exact text form of every object and assertion outcome.
  std::string serialize() const;
};

/// Checks, then runs every statement in order with exact arithmetic.
Scene execute(const Program& program);

}  // namespace golden::script
