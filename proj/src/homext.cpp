#include "gext/homext.hpp"

#include <algorithm>

namespace gext {

GradedModule homFromFree(const FreeModule& f, const GradedModule& n) {
  const Ring& ring = n.ring();
  const int s = n.numGenerators();
  std::vector<int> coverDegs;
  std::vector<int> relDegs;
  std::vector<Vec> rels;
  for (int j = 0; j < f.rank(); ++j) {
    const int a = f.degree(static_cast<std::size_t>(j));
    for (int deg : n.generatorDegrees()) coverDegs.push_back(deg - a);
    const GradedMatrix& p = n.presentation();
    for (int c = 0; c < p.numCols(); ++c) {
      rels.push_back(vec::shift(p.column(static_cast<std::size_t>(c)), static_cast<std::uint32_t>(j * s)));
      relDegs.push_back(p.source().degree(static_cast<std::size_t>(c)) - a);
    }
  }
  FreeModule cover(ring, std::move(coverDegs));
  return GradedModule(GradedMatrix(FreeModule(ring, std::move(relDegs)), cover, std::move(rels)));
}

std::vector<Vec> precomposeImages(const GradedMatrix& d, const GradedModule& n) {
  const Ring& ring = n.ring();
  const PrimeField& k = ring.field();
  const int s = n.numGenerators();
  std::vector<Vec> out;
  for (int j = 0; j < d.numRows(); ++j) {
    std::vector<Poly> row;
    for (int c = 0; c < d.numCols(); ++c) row.push_back(d.entry(static_cast<std::size_t>(j), static_cast<std::size_t>(c)));
    for (int g = 0; g < s; ++g) {
      Vec img;
      for (int c = 0; c < d.numCols(); ++c) {
        const Poly& f = row[static_cast<std::size_t>(c)];
        if (f.isZero()) continue;
        img = vec::add(k, img, Vec::fromPoly(f, static_cast<std::uint32_t>(c * s + g)));
      }
      out.push_back(std::move(img));
    }
  }
  return out;
}

namespace {

/// Cohomology of Hom(F_{i-1}, N) -> Hom(F_i, N) -> Hom(F_{i+1}, N) at the
/// middle, as a submodule of Hom(F_i, N) / im(dIn^*).
Submodule cohomologyAt(const GradedModule& n, const FreeModule& middle, const GradedMatrix* dIn,
                       const GradedMatrix* dOut) {
  const Ring& ring = n.ring();
  GradedModule hom = homFromFree(middle, n);
  if (hom.numGenerators() == 0) return {hom, ModuleMap::identity(hom)};

  std::vector<Vec> cycles;
  if (dOut != nullptr && dOut->numCols() > 0) {
    GradedModule next = homFromFree(dOut->source(), n);
    SubmoduleRequest req;
    req.ambient = next.cover();
    req.base = next.relationBasis();
    req.tracked = precomposeImages(*dOut, n);
    req.trackedDegrees = hom.generatorDegrees();
    req.wantSyzygies = true;
    for (const Vec& z : computeSubmodule(req).syzygies) {
      Vec r = vec::reduceModQuotient(ring, z);
      if (!r.isZero()) cycles.push_back(std::move(r));
    }
  } else {
    for (int i = 0; i < hom.numGenerators(); ++i) cycles.push_back(Vec::basis(static_cast<std::uint32_t>(i), ring.numVars()));
  }

  GradedModule quotient = hom;
  if (dIn != nullptr && dIn->numCols() > 0) {
    std::vector<Vec> rels = hom.presentation().columns();
    std::vector<int> degs = hom.presentation().source().degrees();
    std::vector<Vec> bounds = precomposeImages(*dIn, n);
    GradedModule prev = homFromFree(dIn->target(), n);
    for (std::size_t i = 0; i < bounds.size(); ++i) {
      if (bounds[i].isZero()) continue;
      rels.push_back(std::move(bounds[i]));
      degs.push_back(prev.generatorDegrees()[i]);
    }
    quotient = GradedModule(GradedMatrix(FreeModule(ring, std::move(degs)), hom.cover(), std::move(rels)));
  }
  return imageInModule(cycles, quotient);
}

}  // namespace

HomModule homModule(const GradedModule& m, const GradedModule& n) {
  if (!(m.ring() == n.ring())) throw std::invalid_argument("Hom of modules over different rings");
  const GradedMatrix& p = m.presentation();
  Submodule sub = cohomologyAt(n, m.cover(), nullptr, &p);
  PruneResult pruned = pruneWithMaps(sub.module);
  HomModule h;
  h.module = pruned.module;
  h.source = m;
  h.target = n;
  for (const Vec& v : pruned.toOriginal.images()) h.anchors.push_back(sub.inclusion.apply(v));
  return h;
}

GradedModule extModule(int m, const GradedModule& source, const GradedModule& target) {
  if (!(source.ring() == target.ring())) throw std::invalid_argument("Ext of modules over different rings");
  const Ring& ring = source.ring();
  if (m < 0) return GradedModule::zero(ring);
  FreeResolution res = freeResolution(source, m + 1);
  if (m > res.length()) return GradedModule::zero(ring);
  const GradedMatrix* dIn = m >= 1 ? &res.differentials[static_cast<std::size_t>(m - 1)] : nullptr;
  const GradedMatrix* dOut =
      m < static_cast<int>(res.differentials.size()) ? &res.differentials[static_cast<std::size_t>(m)] : nullptr;
  return prune(cohomologyAt(target, res.frees[static_cast<std::size_t>(m)], dIn, dOut).module);
}

ModuleMap homomorphismFrom(const HomModule& h, const Vec& element) {
  const Ring& ring = h.target.ring();
  const PrimeField& k = ring.field();
  int degree = 0;
  if (!element.isZero()) {
    auto d = element.homogeneousDegree(h.module.generatorDegrees());
    if (!d) throw InhomogeneousError("element of Hom is not homogeneous", 0);
    degree = *d;
  }
  Vec blocks;
  for (const VecTerm& t : element.terms()) blocks = vec::addMul(k, blocks, t.coef, t.mono, h.anchors[t.comp]);
  const auto s = static_cast<std::uint32_t>(h.target.numGenerators());
  std::vector<std::vector<VecTerm>> columns(static_cast<std::size_t>(h.source.numGenerators()));
  for (const VecTerm& t : blocks.terms()) columns[t.comp / s].push_back({t.mono, t.coef, t.comp % s});
  std::vector<Vec> images;
  for (auto& c : columns) images.push_back(vec::reduceModQuotient(ring, vec::canonicalize(k, std::move(c))));
  return ModuleMap(h.source, h.target, std::move(images), degree);
}

ModuleMap homomorphismFrom(const HomModule& h, std::span<const Coef> coords) {
  if (static_cast<int>(coords.size()) != h.module.numGenerators())
    throw std::invalid_argument("one coordinate per generator of the Hom module is required");
  const int nv = h.target.ring().numVars();
  std::vector<VecTerm> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] % h.target.ring().field().characteristic() != 0)
      terms.push_back({Monomial(nv), coords[i] % h.target.ring().field().characteristic(), static_cast<std::uint32_t>(i)});
  Vec element = vec::canonicalize(h.target.ring().field(), std::move(terms));
  return homomorphismFrom(h, element);
}

Vec homVector(const ModuleMap& f) {
  const PrimeField& k = f.target().ring().field();
  const auto s = static_cast<std::uint32_t>(f.target().numGenerators());
  std::vector<VecTerm> terms;
  for (std::size_t j = 0; j < f.images().size(); ++j)
    for (const VecTerm& t : f.images()[j].terms()) terms.push_back({t.mono, t.coef, static_cast<std::uint32_t>(j) * s + t.comp});
  return vec::canonicalize(k, std::move(terms));
}

}  // namespace gext
