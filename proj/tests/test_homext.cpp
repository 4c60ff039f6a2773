#include <gtest/gtest.h>

#include <random>

#include "examples.hpp"
#include "oracle.hpp"

using namespace gext;

namespace {

/// The two-step complex F1 -> F0 given by a presentation; enough for Hom.
FreeResolution presentationComplex(const GradedModule& m) {
  FreeResolution res;
  res.module = m;
  res.frees = {m.cover(), m.presentation().source()};
  res.differentials = {m.presentation()};
  return res;
}

Poly randomForm(const Ring& r, int degree, std::mt19937& rng, int maxTerms = 3) {
  if (degree < 0) return {};
  auto monos = monomialsOfDegree(r.numVars(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-3, 3);
  Poly f;
  for (int t = 0; t < maxTerms; ++t) f = r.add(f, r.monomial(r.field().fromInteger(coef(rng)), monos[pick(rng)]));
  return f;
}

/// Random module over r with generators in degrees 0/1 and a few relations.
GradedModule randomModule(const Ring& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> ngens(1, 2);
  std::uniform_int_distribution<int> nrels(1, 3);
  std::uniform_int_distribution<int> deg01(0, 1);
  std::uniform_int_distribution<int> reldeg(1, 2);
  std::vector<int> degs;
  for (int i = ngens(rng); i > 0; --i) degs.push_back(deg01(rng));
  FreeModule f(r, degs);
  std::vector<Vec> cols;
  std::vector<int> colDegs;
  for (int c = nrels(rng); c > 0; --c) {
    const int d = *std::max_element(degs.begin(), degs.end()) + reldeg(rng);
    Vec col;
    for (std::size_t j = 0; j < degs.size(); ++j)
      col = vec::add(r.field(), col, Vec::fromPoly(r.reduce(randomForm(r, d - degs[j], rng)), static_cast<std::uint32_t>(j)));
    if (col.isZero()) continue;
    cols.push_back(col);
    colDegs.push_back(d);
  }
  return GradedModule(GradedMatrix(FreeModule(r, colDegs), f, cols));
}

}  // namespace

TEST(Hom, FromRingIsTarget) {
  GradedModule n = examples::quarticCurve();
  GradedModule h = homModule(GradedModule::ringModule(n.ring()), n).module;
  for (int d = -1; d < 6; ++d) EXPECT_EQ(hilbertFunction(h, d), hilbertFunction(n, d));
}

TEST(Hom, FromTwistedFreeIsTwist) {
  GradedModule n = examples::quarticCurve();
  GradedModule h = homModule(GradedModule::free(FreeModule(n.ring(), {3})), n).module;
  for (int d = -4; d < 4; ++d) EXPECT_EQ(hilbertFunction(h, d), hilbertFunction(n, d + 3));
}

TEST(Hom, EndomorphismsOfCyclicModule) {
  Ring s = Ring::polynomial(32003, {"x", "y"});
  GradedModule m = examples::rowModule(s, {"x"});
  GradedModule h = homModule(m, m).module;
  for (int d = 0; d < 6; ++d) EXPECT_EQ(hilbertFunction(h, d), 1);
  EXPECT_EQ(hilbertFunction(h, -1), 0);
}

TEST(Hom, DimensionsMatchLinearAlgebra) {
  std::mt19937 rng(7);
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  Ring e = examples::ellipticRing();
  for (int trial = 0; trial < 12; ++trial) {
    const Ring& r = trial % 2 == 0 ? s : e;
    GradedModule m = randomModule(r, rng);
    GradedModule n = randomModule(r, rng);
    GradedModule h = homModule(m, n).module;
    FreeResolution pres = presentationComplex(m);
    for (int d = -2; d < 3; ++d) EXPECT_EQ(hilbertFunction(h, d), oracle::extDimByLinearAlgebra(pres, n, 0, d)) << trial << " " << d;
  }
}

TEST(Ext, DimensionsMatchLinearAlgebra) {
  std::mt19937 rng(11);
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  Ring e = examples::ellipticRing();
  std::int64_t total = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const Ring& r = trial % 2 == 0 ? s : e;
    GradedModule m = randomModule(r, rng);
    GradedModule n = randomModule(r, rng);
    FreeResolution res = freeResolution(m, 3);
    for (int k = 0; k <= 2; ++k) {
      GradedModule x = extModule(k, m, n);
      for (int d = -4; d < 2; ++d) {
        const std::int64_t want = oracle::extDimByLinearAlgebra(res, n, k, d);
        EXPECT_EQ(hilbertFunction(x, d), want) << trial << " " << k << " " << d;
        total += k > 0 ? want : 0;
      }
    }
  }
  EXPECT_GT(total, 0);
}

TEST(Ext, NegativeIndexAndDegreeZero) {
  GradedModule n = examples::quarticCurve();
  GradedModule r = GradedModule::ringModule(n.ring());
  EXPECT_TRUE(extModule(-1, r, n).isZero());
  GradedModule e0 = extModule(0, r, n);
  for (int d = 0; d < 5; ++d) EXPECT_EQ(hilbertFunction(e0, d), hilbertFunction(n, d));
  EXPECT_TRUE(extModule(1, r, n).isZero());
}

TEST(Ext, DimensionShiftAlongSyzygies) {
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  std::mt19937 rng(3);
  for (int trial = 0; trial < 4; ++trial) {
    GradedModule m = randomModule(s, rng);
    GradedModule n = randomModule(s, rng);
    // 0 -> K -> P -> M -> 0 with P the free cover
    GradedModule p = GradedModule::free(m.cover());
    GradedModule k = imageInModule(m.presentation().columns(), p).module;
    for (int i = 1; i <= 2; ++i) {
      EXPECT_TRUE(extModule(i, p, n).isZero());
      GradedModule a = extModule(i, k, n);
      GradedModule b = extModule(i + 1, m, n);
      for (int d = -4; d < 3; ++d) EXPECT_EQ(hilbertFunction(a, d), hilbertFunction(b, d));
    }
  }
}

TEST(Ext, SharpnessWitnessOnQuartic) {
  GradedModule n = examples::quarticCurve();
  GradedModule s = GradedModule::ringModule(n.ring());
  GradedModule one = prune(truncate(extModule(1, truncate(s, 1), n), 0));
  EXPECT_EQ(one.numGenerators(), 4);
  EXPECT_EQ(one.numRelations(), 16);
  EXPECT_TRUE(prune(truncate(extModule(1, truncate(s, 2), n), 0)).isZero());
}

TEST(Homomorphism, ZeroAndIdentity) {
  Ring s = Ring::polynomial(32003, {"x", "y"});
  GradedModule m = examples::rowModule(s, {"x^2", "y"});
  HomModule h = homModule(m, m);
  std::vector<Coef> zero(static_cast<std::size_t>(h.module.numGenerators()), 0);
  EXPECT_TRUE(homomorphismFrom(h, zero).isZero());
  ASSERT_EQ(h.module.numGenerators(), 1);
  ModuleMap id = homomorphismFrom(h, std::vector<Coef>{1});
  EXPECT_EQ(id.degree(), 0);
  EXPECT_TRUE(m.reduce(vec::sub(s.field(), id.images()[0], Vec::basis(0, 2))).isZero());
}

TEST(Homomorphism, RoundTripThroughHomVector) {
  ExtensionSetup setup = extensionSetupFor(examples::ellipticTruncation(), GradedModule::ringModule(examples::ellipticRing()));
  const HomModule& h = setup.homToTarget;
  for (int i = 0; i < h.module.numGenerators(); ++i) {
    std::vector<Coef> c(static_cast<std::size_t>(h.module.numGenerators()), 0);
    c[static_cast<std::size_t>(i)] = 1;
    ModuleMap f = homomorphismFrom(h, c);
    EXPECT_EQ(f.degree(), h.module.generatorDegrees()[static_cast<std::size_t>(i)]);
    EXPECT_EQ(homVector(f), h.anchors[static_cast<std::size_t>(i)]);
  }
}

TEST(Homomorphism, MixedDegreesAreRejected) {
  ExtensionSetup setup = extensionSetupFor(examples::ellipticTruncation(), GradedModule::ringModule(examples::ellipticRing()));
  const HomModule& h = setup.homToTarget;
  std::vector<Coef> c(static_cast<std::size_t>(h.module.numGenerators()), 1);
  EXPECT_THROW(homomorphismFrom(h, c), InhomogeneousError);
}
