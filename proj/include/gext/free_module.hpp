#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gext/ring.hpp"

namespace gext {

class InhomogeneousError : public std::invalid_argument {
 public:
  InhomogeneousError(const std::string& what, std::size_t index)
      : std::invalid_argument(what), mIndex(index) {}
  /// Index of the offending generator or column.
  std::size_t index() const { return mIndex; }

 private:
  std::size_t mIndex;
};

/// Graded free module (+)_j R(-a_j) over a ring; basis vector j has degree a_j.
class FreeModule {
 public:
  FreeModule() = default;
  FreeModule(Ring ring, std::vector<int> degrees)
      : mRing(std::move(ring)), mDegrees(std::move(degrees)) {}

  const Ring& ring() const { return mRing; }
  int rank() const { return static_cast<int>(mDegrees.size()); }
  const std::vector<int>& degrees() const { return mDegrees; }
  int degree(std::size_t j) const { return mDegrees[j]; }

  /// F(v): every basis degree decreases by v.
  FreeModule twisted(int v) const;
  FreeModule overRing(const Ring& ring) const { return {ring, mDegrees}; }
  static FreeModule directSum(const FreeModule& a, const FreeModule& b);

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.mRing == b.mRing && a.mDegrees == b.mDegrees;
  }

 private:
  Ring mRing;
  std::vector<int> mDegrees;
};

struct VecTerm {
  Monomial mono;
  Coef coef = 0;
  std::uint32_t comp = 0;
  friend bool operator==(const VecTerm&, const VecTerm&) = default;
};

/// Module term order: grevlex on the monomial, then the lower basis index wins.
inline int termCompare(const VecTerm& a, const VecTerm& b) {
  int c = grevlexCompare(a.mono, b.mono);
  if (c != 0) return c;
  if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
  return 0;
}

/// Element of a free module: terms strictly descending in the module order,
/// no zero coefficients.
class Vec {
 public:
  Vec() = default;
  explicit Vec(std::vector<VecTerm> canonicalTerms) : mTerms(std::move(canonicalTerms)) {}
  static Vec fromPoly(const Poly& f, std::uint32_t comp);
  static Vec basis(std::uint32_t comp, int numVars);

  bool isZero() const { return mTerms.empty(); }
  std::size_t size() const { return mTerms.size(); }
  const std::vector<VecTerm>& terms() const { return mTerms; }
  const VecTerm& lead() const { return mTerms.front(); }

  Poly entry(std::uint32_t comp) const;
  /// Degree shared by all terms given the basis twists; nullopt if zero or mixed.
  std::optional<int> homogeneousDegree(const std::vector<int>& twists) const;

  friend bool operator==(const Vec&, const Vec&) = default;

 private:
  std::vector<VecTerm> mTerms;
};

namespace vec {

Vec canonicalize(const PrimeField& k, std::vector<VecTerm> terms);
Vec add(const PrimeField& k, const Vec& a, const Vec& b);
Vec sub(const PrimeField& k, const Vec& a, const Vec& b);
Vec scale(const PrimeField& k, const Vec& a, Coef c);
/// c * m * a
Vec mulTerm(const PrimeField& k, const Vec& a, Coef c, const Monomial& m);
/// a + c * m * b
Vec addMul(const PrimeField& k, const Vec& a, Coef c, const Monomial& m, const Vec& b);
Vec mulPoly(const PrimeField& k, const Poly& f, const Vec& a);
/// Renumber components; entries mapped to -1 are dropped.
Vec remap(const PrimeField& k, const Vec& a, std::span<const int> newIndex);
Vec shift(const Vec& a, std::uint32_t offset);
/// Reduce every entry modulo the ring's quotient ideal.
Vec reduceModQuotient(const Ring& ring, const Vec& a);

}  // namespace vec

/// Degree-zero homomorphism source -> target of graded free modules, stored by
/// columns: column j is the image of the j-th source basis vector.
/// Entry (i, j) is homogeneous of degree a_j(source) - a_i(target), or zero.
class GradedMatrix {
 public:
  GradedMatrix() = default;
  /// Validates shapes and homogeneity.
  GradedMatrix(FreeModule source, FreeModule target, std::vector<Vec> columns);

  /// Rows are indexed by target generators; the source degrees are inferred
  /// from the first nonzero entry of each column. All-zero columns need
  /// explicit degrees, so they are rejected unless `sourceDegrees` is given.
  static GradedMatrix fromRows(const FreeModule& target,
                               const std::vector<std::vector<Poly>>& rows,
                               std::optional<std::vector<int>> sourceDegrees = std::nullopt);
  static GradedMatrix identity(const FreeModule& f);
  static GradedMatrix zero(const FreeModule& source, const FreeModule& target);

  const FreeModule& source() const { return mSource; }
  const FreeModule& target() const { return mTarget; }
  const Ring& ring() const { return mTarget.ring(); }
  int numRows() const { return mTarget.rank(); }
  int numCols() const { return mSource.rank(); }
  const std::vector<Vec>& columns() const { return mColumns; }
  const Vec& column(std::size_t j) const { return mColumns[j]; }
  Poly entry(std::size_t i, std::size_t j) const { return mColumns[j].entry(static_cast<std::uint32_t>(i)); }

  /// this * other, i.e. apply `other` first.
  GradedMatrix compose(const GradedMatrix& other) const;
  GradedMatrix negated() const;
  /// [this | other], same target.
  GradedMatrix concatColumns(const GradedMatrix& other) const;
  /// Stack this over other: same source, target is the direct sum.
  GradedMatrix stackRows(const GradedMatrix& other) const;
  bool hasUnitEntry() const;
  bool isZero() const;

  friend bool operator==(const GradedMatrix&, const GradedMatrix&) = default;

 private:
  FreeModule mSource;
  FreeModule mTarget;
  std::vector<Vec> mColumns;
};

}  // namespace gext
