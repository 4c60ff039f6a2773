#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>

namespace gext {

/// An integer or one of +-infinity. Used for the conventions max{} = -inf
/// and min{} = +inf in Betti statistics and truncation bounds.
class ExtInt {
 public:
  constexpr ExtInt() = default;  // -infinity
  constexpr ExtInt(int v) : mKind(Kind::Finite), mValue(v) {}  // NOLINT(google-explicit-constructor)

  static constexpr ExtInt negInf() { return ExtInt(); }
  static constexpr ExtInt posInf() {
    ExtInt x;
    x.mKind = Kind::PosInf;
    return x;
  }

  constexpr bool isFinite() const { return mKind == Kind::Finite; }
  constexpr bool isNegInf() const { return mKind == Kind::NegInf; }
  constexpr bool isPosInf() const { return mKind == Kind::PosInf; }
  int value() const {
    if (!isFinite()) throw std::logic_error("value() of an infinite ExtInt");
    return mValue;
  }
  std::optional<int> finite() const { return isFinite() ? std::optional<int>(mValue) : std::nullopt; }

  /// Shifts by a finite amount; infinities are absorbing.
  friend constexpr ExtInt operator+(ExtInt a, int b) { return a.isFinite() ? ExtInt(a.mValue + b) : a; }
  friend constexpr ExtInt operator-(ExtInt a, int b) { return a + (-b); }
  /// a - b where a counts as an upper statistic and b as a lower one: any
  /// -inf in a or +inf in b gives -inf (an empty max stays empty).
  friend constexpr ExtInt minusLower(ExtInt a, ExtInt b) {
    if (a.isNegInf() || b.isPosInf()) return negInf();
    if (a.isPosInf() || b.isNegInf()) return posInf();
    return ExtInt(a.mValue - b.mValue);
  }

  friend constexpr std::strong_ordering operator<=>(const ExtInt& a, const ExtInt& b) {
    if (a.mKind != b.mKind) return rank(a.mKind) <=> rank(b.mKind);
    if (a.isFinite()) return a.mValue <=> b.mValue;
    return std::strong_ordering::equal;
  }
  friend constexpr bool operator==(const ExtInt& a, const ExtInt& b) { return (a <=> b) == 0; }

  std::string toString() const {
    if (isNegInf()) return "-infinity";
    if (isPosInf()) return "infinity";
    return std::to_string(mValue);
  }

 private:
  enum class Kind { NegInf, Finite, PosInf };
  static constexpr int rank(Kind k) { return k == Kind::NegInf ? 0 : k == Kind::Finite ? 1 : 2; }

  Kind mKind = Kind::NegInf;
  int mValue = 0;
};

inline ExtInt max(ExtInt a, ExtInt b) { return a < b ? b : a; }
inline ExtInt min(ExtInt a, ExtInt b) { return a < b ? a : b; }

}  // namespace gext
