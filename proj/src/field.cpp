#include "gext/field.hpp"

namespace gext {

PrimeField::PrimeField(std::uint32_t p) : mP(p) {
  if (p < 2 || p >= (1u << 31) || !isPrime(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31, got " +
                                std::to_string(p));
}

Coef PrimeField::inverse(Coef a) const {
  if (a == 0) throw DivisionByZero();
  std::int64_t t = 0, newT = 1;
  std::int64_t r = mP, newR = a;
  while (newR != 0) {
    std::int64_t q = r / newR;
    std::int64_t tmp = t - q * newT;
    t = newT;
    newT = tmp;
    tmp = r - q * newR;
    r = newR;
    newR = tmp;
  }
  if (t < 0) t += mP;
  return static_cast<Coef>(t);
}

Coef PrimeField::fromInteger(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(mP);
  if (r < 0) r += mP;
  return static_cast<Coef>(r);
}

bool PrimeField::isPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace gext
