#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "golden/exact/rational.hpp"

namespace golden::cli {

/// A number the claimed identities are written with. The verification suite
/// builds every expected value from this table, so changing one entry must
/// make at least one identity fail.
struct GoldenConstant {
  std::string name;
  exact::Rational value;
};

class GoldenConstants {
 public:
  static GoldenConstants defaults();

  const exact::Rational& get(std::string_view name) const;
  /// Throws std::invalid_argument for an unknown name.
  void set(std::string_view name, const exact::Rational& value);
  /// Applies "name=value"; throws std::invalid_argument when malformed.
  void apply(std::string_view assignment);
  const std::vector<GoldenConstant>& entries() const { return entries_; }

 private:
  std::vector<GoldenConstant> entries_;
};

struct IdentityResult {
  std::string name;
  bool passed = false;
};

/// Every exact identity of the conic problem and the constructions, decided
/// with sign determination starting at `bits` of precision.
std::vector<IdentityResult> verify_identities(const GoldenConstants& constants, long bits);

}  // namespace golden::cli
