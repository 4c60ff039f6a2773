#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "gext/field.hpp"
#include "gext/polynomial.hpp"

namespace gext {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg), mPosition(position) {}
  std::size_t position() const { return mPosition; }

 private:
  std::size_t mPosition;
};

/// A standard-graded ring R = S/I with S = k[x_0..x_n], k = Z/p.
///
/// Rings are cheap handles onto shared immutable data. The quotient ideal
/// (empty for S itself) is stored together with a Groebner basis of it,
/// computed once at construction.
class Ring {
 public:
  /// Empty handle; only assignable. Every other member requires a real ring.
  Ring() = default;

  static Ring polynomial(std::uint32_t p, std::vector<std::string> varNames);
  /// R = this / (ideal); requires this to be a polynomial ring and every
  /// generator homogeneous of positive degree.
  Ring quotient(const std::vector<Poly>& ideal) const;

  const PrimeField& field() const;
  int numVars() const;
  const std::vector<std::string>& varNames() const;
  int varIndex(std::string_view name) const;  // -1 if unknown

  bool isQuotient() const;
  const std::vector<Poly>& quotientIdeal() const;
  /// Reduced Groebner basis of the quotient ideal over the ambient ring.
  const std::vector<Poly>& quotientBasis() const;
  /// The polynomial ring S this ring is a quotient of (itself if not a quotient).
  Ring ambient() const;

  // Polynomial arithmetic (canonical results).
  Poly zero() const { return {}; }
  Poly one() const;
  Poly constant(std::int64_t c) const;
  Poly variable(int index) const;
  Poly monomial(Coef c, const Monomial& m) const;
  Poly fromTerms(std::vector<Term> terms) const;
  Poly add(const Poly& f, const Poly& g) const;
  Poly sub(const Poly& f, const Poly& g) const;
  Poly neg(const Poly& f) const;
  Poly scale(const Poly& f, Coef c) const;
  Poly mulTerm(const Poly& f, Coef c, const Monomial& m) const;
  Poly mul(const Poly& f, const Poly& g) const;
  Poly derivative(const Poly& f, int var) const;
  /// Remainder of f modulo the quotient ideal (f itself over S).
  Poly reduce(const Poly& f) const;

  /// Grammar: terms joined by '+'/'-'; a term is an optional integer
  /// coefficient followed by '*'-separated factors `var` or `var^k`.
  Poly parse(std::string_view text) const;
  std::string format(const Poly& f) const;
  std::string formatMonomial(const Monomial& m) const;
  Monomial unitMonomial() const { return Monomial(numVars()); }

  std::string description() const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : mImpl(std::move(impl)) {}
  std::shared_ptr<const Impl> mImpl;
};

}  // namespace gext
