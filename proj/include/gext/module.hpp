#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gext/extended_int.hpp"
#include "gext/groebner.hpp"
#include "gext/hilbert.hpp"

namespace gext {

class IllDefinedMap : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Finitely generated graded module given as coker(F1 -> F0).
///
/// Copies share a lazily computed Groebner basis of the relation submodule
/// (relations plus I*F0 over a quotient ring); the cache is thread-safe.
class GradedModule {
 public:
  GradedModule() = default;
  explicit GradedModule(GradedMatrix presentation);

  static GradedModule cokernel(const GradedMatrix& presentation) { return GradedModule(presentation); }
  static GradedModule free(const FreeModule& f);
  static GradedModule zero(const Ring& ring);
  /// R itself, generated in degree 0.
  static GradedModule ringModule(const Ring& ring);

  const GradedMatrix& presentation() const { return mPresentation; }
  const Ring& ring() const { return mPresentation.ring(); }
  const FreeModule& cover() const { return mPresentation.target(); }
  const std::vector<int>& generatorDegrees() const { return cover().degrees(); }
  int numGenerators() const { return cover().rank(); }
  int numRelations() const { return mPresentation.numCols(); }

  const GroebnerBasis& relationBasis() const;
  HilbertSeries hilbertSeries() const;
  bool isZero() const;
  /// Normal form of a cover element modulo the relations.
  Vec reduce(const Vec& v) const { return relationBasis().normalForm(v); }

  std::string toString() const;

 private:
  struct Cache;
  GradedMatrix mPresentation;
  std::shared_ptr<Cache> mCache;
};

/// Homogeneous homomorphism of the given degree, stored as the images of
/// the source generators in the target cover.
class ModuleMap {
 public:
  ModuleMap() = default;
  /// Validates that every image is homogeneous of degree a_j + degree and
  /// that relations of the source go to zero in the target.
  ModuleMap(GradedModule source, GradedModule target, std::vector<Vec> images, int degree = 0);
  static ModuleMap unchecked(GradedModule source, GradedModule target, std::vector<Vec> images, int degree = 0);
  static ModuleMap identity(const GradedModule& m);

  const GradedModule& source() const { return mSource; }
  const GradedModule& target() const { return mTarget; }
  const std::vector<Vec>& images() const { return mImages; }
  int degree() const { return mDegree; }

  /// Matrix F0(source)(-degree) -> F0(target).
  GradedMatrix matrix() const;
  /// Image of a source cover element (not reduced).
  Vec apply(const Vec& v) const;
  /// this after other.
  ModuleMap compose(const ModuleMap& other) const;
  bool isZero() const;

 private:
  GradedModule mSource;
  GradedModule mTarget;
  std::vector<Vec> mImages;
  int mDegree = 0;
};

/// A module together with its inclusion into an ambient module.
struct Submodule {
  GradedModule module;
  ModuleMap inclusion;
};

struct PruneResult {
  GradedModule module;
  ModuleMap toOriginal;    // module -> original, an isomorphism
  ModuleMap fromOriginal;  // original -> module, its inverse
};

/// The generated degree d component: one (monomial, generator) basis entry
/// per standard monomial.
struct GradedComponent {
  int degree = 0;
  std::vector<VecTerm> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// M(v): generator and relation degrees decrease by v.
GradedModule twist(const GradedModule& m, int v);
/// Minimal presentation: unit entries eliminated, relations minimal mod I*F0.
PruneResult pruneWithMaps(const GradedModule& m);
GradedModule prune(const GradedModule& m);
/// M_{>= r}, pruned; returns m unchanged when r <= its lowest generator degree.
GradedModule truncate(const GradedModule& m, int r);
GradedModule directSum(const GradedModule& a, const GradedModule& b);
/// View of a module over S = ambient of its ring; identity over S.
GradedModule restrictScalars(const GradedModule& m);

/// Submodule of `target` generated by the given cover elements.
Submodule imageInModule(const std::vector<Vec>& gens, const GradedModule& target);
Submodule imageOf(const ModuleMap& f);
Submodule kernelOf(const ModuleMap& f);
/// Both must be submodules of the same ambient module.
bool submoduleEquals(const Submodule& a, const Submodule& b);

std::int64_t hilbertFunction(const GradedModule& m, int d);
GradedComponent gradedComponent(const GradedModule& m, int d);
/// Krull dimension; -infinity for the zero module.
ExtInt krullDim(const GradedModule& m);

}  // namespace gext
