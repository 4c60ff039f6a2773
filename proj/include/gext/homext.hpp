#pragma once

#include <span>
#include <vector>

#include "gext/resolution.hpp"

namespace gext {

/// Hom_R(M, N) graded by the degrees of the maps.
///
/// The module sits inside (+)_j N(a_j) = Hom(F0(M), N); anchors[i] is
/// generator i written in the cover of that direct sum, where the basis
/// vector e_g of the j-th copy of N has index j * |G0(N)| + g.
struct HomModule {
  GradedModule module;
  GradedModule source;
  GradedModule target;
  std::vector<Vec> anchors;
};

HomModule homModule(const GradedModule& m, const GradedModule& n);

/// Ext^m_R(M, N), pruned; zero for m < 0. Uses the minimal resolution of M
/// through homological degree m + 1.
GradedModule extModule(int m, const GradedModule& source, const GradedModule& target);

/// The homomorphism source -> target represented by `element` (a homogeneous
/// element of h.module's cover). Its degree is the element's degree.
ModuleMap homomorphismFrom(const HomModule& h, const Vec& element);
/// Same for a k-linear combination of the generators of h.module; all
/// generators with a nonzero coefficient must share one degree.
ModuleMap homomorphismFrom(const HomModule& h, std::span<const Coef> coords);

/// Hom(F, N) = (+)_j N(a_j) for a free module F, with the index layout above.
GradedModule homFromFree(const FreeModule& f, const GradedModule& n);
/// Images of the generators of Hom(target(d), N) in the cover of
/// Hom(source(d), N) under composition with d.
std::vector<Vec> precomposeImages(const GradedMatrix& d, const GradedModule& n);

/// Encodes a homomorphism as an element of (+)_j N(a_j), the inverse of the
/// reshaping done by homomorphismFrom.
Vec homVector(const ModuleMap& f);

}  // namespace gext
