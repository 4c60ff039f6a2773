#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace gext {

inline constexpr int kMaxVariables = 16;
using Exponent = std::uint16_t;

class ExponentOverflow : public std::overflow_error {
 public:
  ExponentOverflow() : std::overflow_error("monomial exponent overflow") {}
};

/// Power product x_0^e_0 ... x_n^e_n in the standard grading.
///
/// Exponents are stored in a fixed-width array; unused trailing slots are
/// zero. The total degree and a support bitmask are cached so that the
/// graded reverse lexicographic comparison and divisibility tests are cheap.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(int numVars);

  static Monomial variable(int index, int numVars);
  static Monomial fromExponents(std::span<const int> exps);

  int numVars() const { return mVars; }
  int degree() const { return mDegree; }
  Exponent operator[](int i) const { return mExp[static_cast<std::size_t>(i)]; }
  bool isOne() const { return mDegree == 0; }
  std::uint32_t supportMask() const { return mMask; }

  bool divides(const Monomial& other) const {
    if ((mMask & ~other.mMask) != 0 || mDegree > other.mDegree) return false;
    for (int i = 0; i < mVars; ++i)
      if (mExp[i] > other.mExp[i]) return false;
    return true;
  }
  bool coprimeTo(const Monomial& other) const { return (mMask & other.mMask) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// this / divisor; requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  std::vector<int> exponents() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.mDegree == b.mDegree && a.mExp == b.mExp;
  }

 private:
  void refresh();

  std::array<Exponent, kMaxVariables> mExp{};
  std::int32_t mDegree = 0;
  std::uint32_t mMask = 0;
  std::uint8_t mVars = 0;
};

/// Graded reverse lexicographic order with x_0 > x_1 > ... > x_n.
/// Throws std::invalid_argument when the variable counts differ.
std::strong_ordering monomialCompare(const Monomial& a, const Monomial& b);

/// Same as monomialCompare without the variable-count check; for hot loops.
inline int grevlexCompare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (int i = kMaxVariables - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

/// All monomials of the given degree in numVars variables, descending in grevlex.
std::vector<Monomial> monomialsOfDegree(int numVars, int degree);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace gext
