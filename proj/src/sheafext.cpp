#include "gext/sheafext.hpp"

#include <algorithm>

namespace gext {

namespace {

void requireSameRing(const GradedModule& a, const GradedModule& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("modules over different rings");
}

ExtInt ellFor(int m, const GradedModule& n) {
  const ExtInt dim = krullDim(n);
  return dim.isNegInf() ? dim : min(dim, ExtInt(m));
}

/// Betti data of N viewed as an S-module.
BettiTable ambientBetti(const GradedModule& n) { return bettiStats(freeResolution(restrictScalars(n))); }

}  // namespace

TruncationBound truncationBound(int m, int e, const GradedModule& n) {
  TruncationBound tb;
  tb.m = m;
  tb.e = e;
  tb.n = n.ring().numVars() - 1;
  tb.ell = ellFor(m, n);
  const BettiTable betti = ambientBetti(n);
  tb.pd = betti.projectiveDimension();
  for (int i = 0; i <= tb.n + 1; ++i) tb.maxDegrees.push_back(betti.maxDegree(i));

  ExtInt best = ExtInt::negInf();
  ExtInt coarse = ExtInt::negInf();
  if (tb.ell.isFinite() && tb.pd.isFinite()) {
    for (int i = tb.n - tb.ell.value(); i <= tb.pd.value(); ++i) {
      const ExtInt a = betti.maxDegree(i);
      best = max(best, a - i);
      coarse = max(coarse, a);
    }
  }
  tb.r = best - e - m + 1;
  tb.coarseR = coarse - e - m + 1;
  return tb;
}

ExtInt corollaryBound(int m, const GradedModule& source, const GradedModule& target) {
  requireSameRing(source, target);
  if (m < 0) return ExtInt::negInf();
  const int n = target.ring().numVars() - 1;
  const ExtInt ell = ellFor(m, target);
  if (!ell.isFinite() || ell.value() < 0) return ExtInt::negInf();
  const BettiTable sn = ambientBetti(target);
  const BettiTable mr = bettiStats(freeResolution(source, m));
  auto upper = [&](int i) { return i < 0 ? ExtInt::negInf() : sn.maxDegree(i); };
  auto lower = [&](int i) { return i < 0 ? ExtInt::posInf() : mr.minDegree(i); };
  ExtInt best = ExtInt::negInf();
  for (int u = 0; u <= ell.value(); ++u) {
    best = max(best, minusLower(upper(n - u), lower(m - u)));
    if (u != 1) best = max(best, minusLower(upper(n - u + 1), lower(m - u)));
  }
  return best - n;
}

ExtInt vanishingBound(int m, const GradedModule& n) {
  if (m <= 0) throw std::invalid_argument("vanishing bound needs m >= 1");
  const int dim = n.ring().numVars() - 1;
  if (dim - m < 0) return ExtInt::negInf();
  return ambientBetti(n).maxDegree(dim - m) - dim;
}

GradedModule globalExtSum(int m, int e, const GradedModule& source, const GradedModule& target) {
  requireSameRing(source, target);
  const Ring& ring = source.ring();
  if (m < 0 || target.isZero()) return GradedModule::zero(ring);
  const ExtInt dimM = krullDim(source);
  if (!dimM.isFinite() || dimM.value() == 0) return GradedModule::zero(ring);

  const TruncationBound tb = truncationBound(m, e, target);
  const bool vacuous = !tb.r.isFinite();
  GradedModule ext = vacuous ? extModule(m, source, target) : extModule(m, truncate(source, tb.r.value()), target);
  return prune(truncate(ext, e));
}

GradedComponent globalExt(int m, const GradedModule& source, const GradedModule& target) {
  return gradedComponent(globalExtSum(m, 0, source, target), 0);
}

GradedModule sheafCohomologySum(int m, int e, const GradedModule& n) {
  return globalExtSum(m, e, GradedModule::ringModule(n.ring()), n);
}

GradedComponent sheafCohomology(int m, const GradedModule& n) {
  return gradedComponent(sheafCohomologySum(m, 0, n), 0);
}

// ---------------------------------------------------------------------------

ExtensionSetup extensionSetupFor(const GradedModule& truncated, const GradedModule& target) {
  requireSameRing(truncated, target);
  ExtensionSetup s;
  s.truncated = truncated;
  const auto& degs = truncated.generatorDegrees();
  s.r = degs.empty() ? 0 : *std::min_element(degs.begin(), degs.end());
  GradedModule cover = GradedModule::free(truncated.cover());
  s.relations = imageInModule(truncated.presentation().columns(), cover);
  s.homToTarget = homModule(s.relations.module, target);
  return s;
}

ExtensionSetup extensionSetup(const GradedModule& source, const GradedModule& target) {
  const TruncationBound tb = truncationBound(1, 0, target);
  GradedModule truncated = tb.r.isFinite() ? truncate(source, tb.r.value()) : source;
  ExtensionSetup s = extensionSetupFor(truncated, target);
  if (tb.r.isFinite()) s.r = tb.r.value();
  return s;
}

ExtensionResult extensionFromHom(const ExtensionSetup& setup, const ModuleMap& theta) {
  const GradedModule& k = setup.relations.module;
  const GradedModule& mp = setup.truncated;
  if (!(theta.source().presentation() == k.presentation()))
    throw std::invalid_argument("theta must be defined on the relation module K");
  const Ring& ring = mp.ring();
  const PrimeField& field = ring.field();
  const int nv = ring.numVars();

  ExtensionResult out;
  out.thetaDegree = theta.degree();
  out.twistedTarget = twist(theta.target(), theta.degree());
  const GradedModule& nd = out.twistedTarget;
  const auto p = static_cast<std::uint32_t>(mp.numGenerators());

  FreeModule cover = FreeModule::directSum(mp.cover(), nd.cover());
  std::vector<Vec> rels;
  std::vector<int> relDegs;
  for (int c = 0; c < nd.numRelations(); ++c) {
    rels.push_back(vec::shift(nd.presentation().column(static_cast<std::size_t>(c)), p));
    relDegs.push_back(nd.presentation().source().degree(static_cast<std::size_t>(c)));
  }
  for (int i = 0; i < k.numGenerators(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    Vec col = vec::sub(field, setup.relations.inclusion.images()[idx], vec::shift(theta.images()[idx], p));
    if (col.isZero()) continue;
    rels.push_back(std::move(col));
    relDegs.push_back(k.generatorDegrees()[idx]);
  }
  out.extension = GradedModule(GradedMatrix(FreeModule(ring, std::move(relDegs)), cover, std::move(rels)));

  std::vector<Vec> iotaImgs;
  for (int g = 0; g < nd.numGenerators(); ++g) iotaImgs.push_back(Vec::basis(p + static_cast<std::uint32_t>(g), nv));
  out.iota = ModuleMap(nd, out.extension, std::move(iotaImgs));
  std::vector<Vec> phiImgs;
  for (std::uint32_t j = 0; j < p; ++j) phiImgs.push_back(Vec::basis(j, nv));
  for (int g = 0; g < nd.numGenerators(); ++g) phiImgs.emplace_back();
  out.phi = ModuleMap(out.extension, mp, std::move(phiImgs));

  out.verified[0] = kernelOf(out.iota).module.isZero();
  out.verified[1] = submoduleEquals(imageOf(out.iota), kernelOf(out.phi));
  out.verified[2] = submoduleEquals(imageOf(out.phi), Submodule{mp, ModuleMap::identity(mp)});

  // theta is a restriction of some P -> N(d) iff it lies in the image of
  // Hom(P, N(d)) -> Hom(F0(K), N(d)) modulo the relations of the latter.
  const GradedModule homK = homFromFree(k.cover(), nd);
  const GradedMatrix alpha(k.cover(), mp.cover(), setup.relations.inclusion.images());
  const GradedModule homP = homFromFree(mp.cover(), nd);
  SubmoduleRequest req;
  req.ambient = homK.cover();
  req.base = homK.relationBasis();
  req.tracked = precomposeImages(alpha, nd);
  req.trackedDegrees = homP.generatorDegrees();
  const GroebnerBasis gb = computeSubmodule(req).basis;
  out.classIsZero = gb.contains(homVector(ModuleMap::unchecked(k, nd, theta.images(), 0)));
  return out;
}

namespace {

ExtensionResult degreeZeroExtension(const ExtensionSetup& setup, const ModuleMap& theta) {
  if (theta.degree() != 0) throw std::invalid_argument("theta must have degree 0");
  return extensionFromHom(setup, theta);
}

}  // namespace

ExtensionResult yonedaExtension(const ExtensionSetup& setup, std::span<const Coef> coords) {
  return degreeZeroExtension(setup, homomorphismFrom(setup.homToTarget, coords));
}

ExtensionResult yonedaExtension(const ExtensionSetup& setup, const Vec& element) {
  return degreeZeroExtension(setup, homomorphismFrom(setup.homToTarget, element));
}

GradedModule cotangentModule(const Ring& ring) {
  const int nv = ring.numVars();
  const PrimeField& k = ring.field();
  FreeModule ones(ring, std::vector<int>(static_cast<std::size_t>(nv), 1));
  std::vector<Vec> euler;
  for (int i = 0; i < nv; ++i) euler.push_back(Vec::fromPoly(ring.variable(i), 0));
  ModuleMap eulerMap(GradedModule::free(ones), GradedModule::ringModule(ring), std::move(euler));
  const Submodule kernel = kernelOf(eulerMap);

  std::vector<Vec> jacobian;
  std::vector<int> jacDegs;
  if (ring.isQuotient()) {
    const Ring s = ring.ambient();
    for (const Poly& f : ring.quotientIdeal()) {
      Vec col;
      for (int i = 0; i < nv; ++i) {
        Poly df = ring.reduce(s.derivative(f, i));
        if (!df.isZero()) col = vec::add(k, col, Vec::fromPoly(df, static_cast<std::uint32_t>(i)));
      }
      if (col.isZero()) continue;
      jacobian.push_back(std::move(col));
      jacDegs.push_back(*f.homogeneousDegree());
    }
  }
  GradedModule quotient(GradedMatrix(FreeModule(ring, std::move(jacDegs)), ones, std::move(jacobian)));
  return prune(imageInModule(kernel.inclusion.images(), quotient).module);
}

}  // namespace gext
