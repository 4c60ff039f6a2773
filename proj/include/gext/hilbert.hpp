#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gext/extended_int.hpp"
#include "gext/monomial.hpp"

namespace gext {

/// Laurent polynomial in t with integer coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, std::int64_t coef = 1);

  bool isZero() const { return mCoefs.empty(); }
  std::int64_t coefficient(int exponent) const;
  const std::map<int, std::int64_t>& coefficients() const { return mCoefs; }
  std::int64_t valueAtOne() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly shifted(int by) const;
  /// Exact division by (1 - t); requires valueAtOne() == 0.
  LaurentPoly dividedByOneMinusT() const;

  std::string toString() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  void add(int e, std::int64_t c);
  std::map<int, std::int64_t> mCoefs;  // no zero entries
};

/// Hilbert series numerator / (1 - t)^numVars of a graded module.
struct HilbertSeries {
  LaurentPoly numerator;
  int numVars = 0;

  /// dim of the degree-d component.
  std::int64_t valueAt(int d) const;
  /// 1 + degree of the Hilbert polynomial; -infinity for the zero module.
  ExtInt dimension() const;
};

/// Numerator K(t) of the Hilbert series of S/J, J generated by `gens`
/// (S has numVars variables). Every entry of the result has exponent >= 0.
LaurentPoly monomialIdealNumerator(std::vector<Monomial> gens);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace gext
