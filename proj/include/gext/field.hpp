#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gext {

/// Residue class in [0, p); the prime is held by the owning PrimeField.
using Coef = std::uint32_t;

class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in prime field") {}
};

/// Arithmetic in Z/p for a prime 2 <= p < 2^31.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return mP; }

  Coef add(Coef a, Coef b) const {
    Coef s = a + b;
    return s >= mP ? s - mP : s;
  }
  Coef sub(Coef a, Coef b) const { return a >= b ? a - b : a + mP - b; }
  Coef neg(Coef a) const { return a == 0 ? 0 : mP - a; }
  Coef mul(Coef a, Coef b) const {
    return static_cast<Coef>((static_cast<std::uint64_t>(a) * b) % mP);
  }
  Coef inverse(Coef a) const;
  Coef divide(Coef a, Coef b) const { return mul(a, inverse(b)); }

  Coef fromInteger(std::int64_t v) const;
  /// Symmetric representative in (-p/2, p/2].
  std::int64_t toSigned(Coef a) const {
    return a > mP / 2 ? static_cast<std::int64_t>(a) - mP : a;
  }

  static bool isPrime(std::uint64_t n);

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t mP;
};

}  // namespace gext
