#pragma once

#include <optional>
#include <vector>

#include "gext/free_module.hpp"

namespace gext {

/// Groebner basis of a homogeneous submodule of a graded free module.
///
/// When the ambient ring is a quotient R = S/I, the computation is carried
/// out over S with the relations I*e_j adjoined for every basis vector e_j;
/// those adjoined elements are part of `elements()` and `overQuotient()` is set.
/// Every element has a monic leading term and no leading term divides another.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  /// Trusts that `elements` is a Groebner basis with monic, pairwise
  /// non-divisible leading terms.
  GroebnerBasis(FreeModule ambient, std::vector<Vec> elements, bool overQuotient);

  const FreeModule& ambient() const { return mAmbient; }
  const std::vector<Vec>& elements() const { return mElements; }
  bool overQuotient() const { return mOverQuotient; }
  std::size_t size() const { return mElements.size(); }

  /// Fully reduced remainder; zero iff v lies in the submodule.
  Vec normalForm(const Vec& v) const;
  bool contains(const Vec& v) const { return normalForm(v).isZero(); }

  struct Division {
    Vec remainder;
    /// v = remainder + sum_k quotients[k] * elements()[k]
    std::vector<Poly> quotients;
  };
  Division divide(const Vec& v) const;

  /// Index of an element whose leading term divides (m, comp), or -1.
  int findDivisor(const Monomial& m, std::uint32_t comp) const;
  /// Leading monomials of the elements, grouped by basis vector.
  std::vector<std::vector<Monomial>> leadMonomials() const;

 private:
  struct Lead {
    Monomial mono;
    std::uint32_t index;
  };
  FreeModule mAmbient;
  std::vector<Vec> mElements;
  std::vector<std::vector<Lead>> mByComponent;
  bool mOverQuotient = false;
};

/// Groebner basis of the submodule generated by `gens` (plus I*F over a quotient ring).
/// Generators must be homogeneous; pairs are selected by lcm degree, then by
/// insertion order, so the result is deterministic.
GroebnerBasis groebnerBasis(const FreeModule& ambient, const std::vector<Vec>& gens);

Vec normalForm(const Vec& v, const GroebnerBasis& gb);

/// The Groebner basis {g*e_j : g in GB(I)} of I*F (empty over a polynomial ring).
GroebnerBasis quotientBasisFor(const FreeModule& ambient);

/// Generators of the syzygy module of the columns: the returned matrix Z
/// satisfies gens * Z = 0 (over the ring of gens, so modulo I for quotients)
/// and its columns generate every such relation.
GradedMatrix syzygies(const GradedMatrix& gens);

/// Engine request. `tracked` generators are the ones whose syzygies and
/// minimality are reported; `base` is an existing Groebner basis whose
/// elements are taken as is (pairs among them are skipped).
struct SubmoduleRequest {
  FreeModule ambient;
  std::optional<GroebnerBasis> base;  // default: quotientBasisFor(ambient)
  std::vector<Vec> tracked;
  std::vector<int> trackedDegrees;
  bool wantSyzygies = false;
  bool wantMinimal = false;
  std::optional<int> maxDegree;
};

struct SubmoduleResult {
  GroebnerBasis basis;
  /// minimal[i]: tracked[i] is not in the span of base + earlier generators.
  std::vector<bool> minimal;
  /// Syzygies of the tracked generators modulo base, in coordinates
  /// (+)_i S(-trackedDegrees[i]).
  std::vector<Vec> syzygies;
};

SubmoduleResult computeSubmodule(const SubmoduleRequest& request);

}  // namespace gext
