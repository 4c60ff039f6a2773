#pragma once

#include <optional>
#include <vector>

#include "gext/field.hpp"
#include "gext/monomial.hpp"

namespace gext {

struct Term {
  Monomial mono;
  Coef coef = 0;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in canonical form: terms strictly descending in grevlex,
/// no zero coefficients. Arithmetic lives on Ring, which owns the field.
class Poly {
 public:
  Poly() = default;
  /// Takes terms already in canonical form.
  explicit Poly(std::vector<Term> canonicalTerms) : mTerms(std::move(canonicalTerms)) {}

  bool isZero() const { return mTerms.empty(); }
  std::size_t size() const { return mTerms.size(); }
  const std::vector<Term>& terms() const { return mTerms; }
  const Term& lead() const { return mTerms.front(); }
  bool isConstant() const { return mTerms.empty() || (mTerms.size() == 1 && mTerms[0].mono.isOne()); }

  /// The common degree of all terms; nullopt for the zero polynomial or mixed degrees.
  std::optional<int> homogeneousDegree() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Term> mTerms;
};

}  // namespace gext
