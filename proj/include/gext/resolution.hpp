#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gext/module.hpp"

namespace gext {

class MissingLengthCap : public std::invalid_argument {
 public:
  MissingLengthCap() : std::invalid_argument("resolutions over a quotient ring need a length cap") {}
};

/// Minimal graded free resolution ... -> F_2 -> F_1 -> F_0 -> M.
/// differentials[i] is d_{i+1}: F_{i+1} -> F_i.
struct FreeResolution {
  GradedModule module;  // the pruned module being resolved
  std::vector<FreeModule> frees;
  std::vector<GradedMatrix> differentials;
  /// Set when the construction stopped at the cap before reaching a zero module.
  std::optional<int> truncatedAtLength;

  int length() const { return static_cast<int>(frees.size()) - 1; }
};

/// Over a polynomial ring the resolution is computed to completion; over a
/// quotient ring `lengthCap` bounds the number of differentials.
FreeResolution freeResolution(const GradedModule& m, std::optional<int> lengthCap = std::nullopt);

class BettiTable {
 public:
  BettiTable() = default;
  explicit BettiTable(const FreeResolution& res);
  /// Zero counts are dropped.
  static BettiTable fromEntries(const std::map<std::pair<int, int>, int>& entries);

  /// Multiplicity of R(-degree) in F_index.
  int entry(int index, int degree) const;
  const std::map<std::pair<int, int>, int>& entries() const { return mEntries; }
  int rank(int index) const;

  ExtInt maxDegree(int index) const;  // -infinity when F_index = 0
  ExtInt minDegree(int index) const;  // +infinity when F_index = 0
  ExtInt projectiveDimension() const;

  /// Grid with rows degree - index and columns the homological index.
  std::string toString() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::map<std::pair<int, int>, int> mEntries;  // (index, degree) -> count
};

BettiTable bettiStats(const FreeResolution& res);

}  // namespace gext
