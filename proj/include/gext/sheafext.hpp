#pragma once

#include <array>
#include <span>
#include <vector>

#include "gext/homext.hpp"

namespace gext {

/// Truncation point for computing sum_{v >= e} Ext^m(X; M~, N~(v)) as
/// Ext^m_R(M_{>= r}, N), with the data the bound was read from.
struct TruncationBound {
  ExtInt r;
  /// Same maximum without the "- i" shift; also valid, usually larger.
  ExtInt coarseR;
  int m = 0;
  int e = 0;
  int n = 0;      // projective dimension of the ambient space
  ExtInt ell;     // min(dim N, m)
  ExtInt pd;      // projective dimension of N over S
  /// maxDegrees[i] = max generator degree of F_i(N over S), i = 0..n+1.
  std::vector<ExtInt> maxDegrees;
};

TruncationBound truncationBound(int m, int e, const GradedModule& n);

/// Least e satisfying the twist inequalities derived from the Betti data of
/// M over R and of N over S; -infinity when no index contributes.
ExtInt corollaryBound(int m, const GradedModule& source, const GradedModule& target);

/// v0 such that H^m(X, N~(v)) = 0 for every v >= v0; requires m >= 1.
ExtInt vanishingBound(int m, const GradedModule& n);

/// sum_{v >= e} Ext^m(X; M~, N~(v)) as a pruned graded R-module.
GradedModule globalExtSum(int m, int e, const GradedModule& source, const GradedModule& target);
/// Ext^m(X; M~, N~), the degree-0 part of globalExtSum(m, 0, M, N).
GradedComponent globalExt(int m, const GradedModule& source, const GradedModule& target);
/// sum_{v >= e} H^m(X, N~(v)).
GradedModule sheafCohomologySum(int m, int e, const GradedModule& n);
GradedComponent sheafCohomology(int m, const GradedModule& n);

/// Data shared by every extension of M by N built from a truncation of M.
struct ExtensionSetup {
  int r = 0;
  GradedModule truncated;  // M' = M_{>= r}
  Submodule relations;     // K inside the free cover P of M'
  HomModule homToTarget;   // Hom(K, N)
};

/// Uses r from truncationBound(1, 0, N); M itself when that bound is -infinity.
ExtensionSetup extensionSetup(const GradedModule& source, const GradedModule& target);
/// Same with a presentation of M' supplied directly.
ExtensionSetup extensionSetupFor(const GradedModule& truncated, const GradedModule& target);

struct ExtensionResult {
  GradedModule extension;  // E
  GradedModule twistedTarget;  // N(d), d the degree of theta
  ModuleMap iota;          // N(d) -> E
  ModuleMap phi;           // E -> M'
  /// ker iota = 0, im iota = ker phi, im phi = M'.
  std::array<bool, 3> verified{};
  /// theta extends over P, i.e. its Ext^1 class vanishes.
  bool classIsZero = false;
  int thetaDegree = 0;
};

/// Pushout of theta: K -> N and the inclusion K -> P. A theta of degree d is
/// read as a degree-0 map K -> N(d), giving 0 -> N(d) -> E -> M' -> 0.
ExtensionResult extensionFromHom(const ExtensionSetup& setup, const ModuleMap& theta);
/// The degree-0 element of Hom(K, N) with the given coordinates.
ExtensionResult yonedaExtension(const ExtensionSetup& setup, std::span<const Coef> coords);
/// Same with theta given as a degree-0 element of the cover of Hom(K, N).
ExtensionResult yonedaExtension(const ExtensionSetup& setup, const Vec& element);

/// Cotangent module of Proj R from the conormal sequence; K = ker of the
/// Euler map (+) R(-1) -> R, modulo the Jacobian columns.
GradedModule cotangentModule(const Ring& ring);

}  // namespace gext
