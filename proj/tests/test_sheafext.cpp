#include <gtest/gtest.h>

#include "examples.hpp"
#include "oracle.hpp"

using namespace gext;

namespace {

std::int64_t monomialCount(int numVars, int degree) {
  return degree < 0 ? 0 : static_cast<std::int64_t>(monomialsOfDegree(numVars, degree).size());
}

}  // namespace

TEST(TruncationBound, QuarticCurve) {
  TruncationBound tb = truncationBound(1, 0, examples::quarticCurve());
  EXPECT_EQ(tb.n, 3);
  EXPECT_EQ(tb.ell, ExtInt(1));
  EXPECT_EQ(tb.pd, ExtInt(3));
  EXPECT_EQ(tb.maxDegrees[2], ExtInt(4));
  EXPECT_EQ(tb.maxDegrees[3], ExtInt(5));
  EXPECT_EQ(tb.r, ExtInt(2));
  // without the index shift: max{4, 5} - 1 + 1
  EXPECT_EQ(tb.coarseR, ExtInt(5));
}

TEST(TruncationBound, TwistShiftsBound) {
  EXPECT_EQ(truncationBound(1, 3, examples::quarticCurve()).r, ExtInt(-1));
  EXPECT_EQ(truncationBound(2, 0, examples::quarticCurve()).r, ExtInt(1));
}

TEST(TruncationBound, EllipticCurve) {
  TruncationBound tb = truncationBound(1, 0, GradedModule::ringModule(examples::ellipticRing()));
  EXPECT_EQ(tb.n, 2);
  EXPECT_EQ(tb.ell, ExtInt(1));
  EXPECT_EQ(tb.r, ExtInt(2));
}

TEST(TruncationBound, VacuousWhenProjectiveDimensionIsSmall) {
  TruncationBound tb = truncationBound(1, 0, GradedModule::ringModule(examples::veroneseRing()));
  EXPECT_EQ(tb.pd, ExtInt(3));
  EXPECT_EQ(tb.n - tb.ell.value(), 4);
  EXPECT_EQ(tb.r, ExtInt::negInf());
}

TEST(CorollaryBound, QuarticTruncation) {
  GradedModule n = examples::quarticCurve();
  GradedModule s = GradedModule::ringModule(n.ring());
  const int r = truncationBound(1, 0, n).r.value();
  // Betti data: N over S has a-bar = (0, 3, 4, 5); S_{>=2} has a-underline = (2, 3).
  // u = 0: 5 - 3 - 3 = -1, and 5+? index 4 is empty; u = 1: 4 - 2 - 3 = -1
  EXPECT_EQ(corollaryBound(1, truncate(s, r), n), ExtInt(-1));
  EXPECT_LE(corollaryBound(1, truncate(s, r), n), ExtInt(0));
  EXPECT_EQ(corollaryBound(-1, s, n), ExtInt::negInf());
}

TEST(VanishingBound, Values) {
  GradedModule n = examples::quarticCurve();
  EXPECT_EQ(vanishingBound(1, n), ExtInt(1));
  EXPECT_EQ(vanishingBound(4, n), ExtInt::negInf());
  EXPECT_THROW(vanishingBound(0, n), std::invalid_argument);
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  EXPECT_EQ(vanishingBound(1, GradedModule::ringModule(s)), ExtInt::negInf());
}

TEST(GlobalExt, QuarticCurve) {
  GradedModule n = examples::quarticCurve();
  GradedModule s = GradedModule::ringModule(n.ring());
  EXPECT_TRUE(globalExtSum(1, 0, s, n).isZero());
  EXPECT_TRUE(globalExtSum(-1, 0, s, n).isZero());
  EXPECT_TRUE(sheafCohomologySum(1, 0, n).isZero());
}

TEST(GlobalExt, EllipticCurve) {
  GradedModule r = GradedModule::ringModule(examples::ellipticRing());
  EXPECT_EQ(globalExt(1, r, r).dimension(), 1u);
  EXPECT_EQ(sheafCohomology(0, r).dimension(), 1u);
  EXPECT_EQ(sheafCohomology(1, r).dimension(), 1u);
}

TEST(GlobalExt, DelPezzoDuality) {
  GradedModule g = examples::delPezzoSheaf();
  GradedModule omega = twist(GradedModule::ringModule(g.ring()), -1);
  const std::size_t want[] = {2, 2, 0};
  for (int j = 0; j <= 2; ++j) {
    EXPECT_EQ(sheafCohomology(j, g).dimension(), want[j]);
    EXPECT_EQ(globalExt(2 - j, g, omega).dimension(), sheafCohomology(j, g).dimension());
  }
}

TEST(GlobalExt, ZeroDimensionalSourceGivesZero) {
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  GradedModule point = examples::rowModule(s, {"x", "y", "z^2"});
  GradedModule r = GradedModule::ringModule(s);
  EXPECT_EQ(krullDim(point), ExtInt(0));
  for (int m = 0; m < 3; ++m) EXPECT_TRUE(globalExtSum(m, 0, point, r).isZero());
}

TEST(GlobalExt, ZeroTargetGivesZero) {
  Ring s = Ring::polynomial(32003, {"x", "y"});
  EXPECT_TRUE(sheafCohomologySum(0, 0, GradedModule::zero(s)).isZero());
}

TEST(SheafCohomology, ProjectivePlaneLineBundles) {
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  GradedModule o = GradedModule::ringModule(s);
  for (int v = -5; v <= 3; ++v) {
    GradedModule ov = twist(o, v);
    EXPECT_EQ(static_cast<std::int64_t>(sheafCohomology(0, ov).dimension()), monomialCount(3, v)) << v;
    EXPECT_EQ(sheafCohomology(1, ov).dimension(), 0u) << v;
    EXPECT_EQ(static_cast<std::int64_t>(sheafCohomology(2, ov).dimension()), monomialCount(3, -v - 3)) << v;
  }
}

TEST(SheafCohomology, GlobalSectionsOfProjectiveSpace) {
  Ring s = Ring::polynomial(32003, {"x", "y", "z", "w"});
  GradedModule h0 = sheafCohomologySum(0, 0, GradedModule::ringModule(s));
  for (int d = 0; d < 5; ++d) EXPECT_EQ(hilbertFunction(h0, d), monomialCount(4, d));
}

TEST(SheafCohomology, GrothendieckVanishing) {
  GradedModule n = examples::quarticCurve();
  // dim N = 2, so H^m vanishes for m >= 2
  for (int m = 2; m <= 3; ++m)
    for (int v = -3; v <= 2; ++v) EXPECT_EQ(sheafCohomology(m, twist(n, v)).dimension(), 0u);
}

TEST(SheafCohomology, VanishingBoundOnQuartic) {
  GradedModule n = examples::quarticCurve();
  for (int m = 1; m <= 3; ++m) {
    ExtInt v0 = vanishingBound(m, n);
    const int start = v0.isFinite() ? v0.value() : -3;
    for (int v = start; v <= start + 3; ++v) EXPECT_EQ(sheafCohomology(m, twist(n, v)).dimension(), 0u) << m << " " << v;
  }
}

TEST(Extension, PrintedTruncationMatchesEngine) {
  GradedModule r = GradedModule::ringModule(examples::ellipticRing());
  GradedModule mine = truncate(r, 2);
  GradedModule printed = examples::ellipticTruncation();
  EXPECT_EQ(mine.numGenerators(), 6);
  EXPECT_EQ(mine.numRelations(), 9);
  for (int d = 0; d < 7; ++d) EXPECT_EQ(hilbertFunction(mine, d), hilbertFunction(printed, d));
}

TEST(Extension, SplitExtensionAddsHilbertFunctions) {
  GradedModule n = GradedModule::ringModule(examples::ellipticRing());
  ExtensionSetup setup = extensionSetup(n, n);
  EXPECT_EQ(setup.r, 2);
  std::vector<Coef> zero(static_cast<std::size_t>(setup.homToTarget.module.numGenerators()), 0);
  ExtensionResult ext = yonedaExtension(setup, zero);
  EXPECT_TRUE(ext.verified[0] && ext.verified[1] && ext.verified[2]);
  EXPECT_TRUE(ext.classIsZero);
  for (int d = 0; d <= 5; ++d)
    EXPECT_EQ(hilbertFunction(ext.extension, d), hilbertFunction(n, d) + hilbertFunction(setup.truncated, d));
  EXPECT_EQ(sheafCohomology(0, ext.extension).dimension(), 2u);
  EXPECT_EQ(sheafCohomology(1, ext.extension).dimension(), 2u);
}

TEST(Extension, NonsplitClassInDegreeZero) {
  GradedModule n = GradedModule::ringModule(examples::ellipticRing());
  ExtensionSetup setup = extensionSetup(n, n);
  const HomModule& h = setup.homToTarget;
  // Hom(K, N) has no degree-0 generators; search a basis of its degree-0 part.
  bool found = false;
  for (const VecTerm& t : gradedComponent(h.module, 0).basis) {
    ExtensionResult ext = yonedaExtension(setup, Vec({t}));
    EXPECT_TRUE(ext.verified[0] && ext.verified[1] && ext.verified[2]);
    if (ext.classIsZero) continue;
    found = true;
    // the connecting map H^0(O) -> H^1(O) is an isomorphism
    EXPECT_EQ(sheafCohomology(0, ext.extension).dimension(), 1u);
    EXPECT_EQ(sheafCohomology(1, ext.extension).dimension(), 1u);
    break;
  }
  EXPECT_TRUE(found);
}

TEST(Extension, PrintedThetaIsTheFirstRow) {
  GradedModule n = GradedModule::ringModule(examples::ellipticRing());
  ExtensionSetup setup = extensionSetupFor(examples::ellipticTruncation(), n);
  ModuleMap theta = examples::thetaFromRow(setup, n, examples::ellipticTruncationRows()[0], -2);
  ExtensionResult ext = extensionFromHom(setup, theta);
  EXPECT_EQ(ext.extension.numGenerators(), 7);
  EXPECT_EQ(ext.extension.numRelations(), 9);
  EXPECT_TRUE(ext.verified[0] && ext.verified[1] && ext.verified[2]);
  EXPECT_TRUE(ext.classIsZero);
  EXPECT_EQ(sheafCohomology(0, ext.extension).dimension(), 1u);
}

TEST(Extension, NonzeroDegreeNeedsGeneralConstructor) {
  GradedModule n = GradedModule::ringModule(examples::ellipticRing());
  ExtensionSetup setup = extensionSetupFor(examples::ellipticTruncation(), n);
  const HomModule& h = setup.homToTarget;
  for (int i = 0; i < h.module.numGenerators(); ++i) {
    if (h.module.generatorDegrees()[static_cast<std::size_t>(i)] == 0) continue;
    std::vector<Coef> c(static_cast<std::size_t>(h.module.numGenerators()), 0);
    c[static_cast<std::size_t>(i)] = 1;
    EXPECT_THROW(yonedaExtension(setup, c), std::invalid_argument);
    break;
  }
}

TEST(Cotangent, ProjectivePlane) {
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  GradedModule omega = cotangentModule(s);
  // Euler sequence: h(Omega, d) = 3*h(S, d-1) - h(S, d) for d >= 1
  for (int d = 1; d < 6; ++d) EXPECT_EQ(hilbertFunction(omega, d), 3 * monomialCount(3, d - 1) - monomialCount(3, d));
  EXPECT_EQ(sheafCohomology(1, omega).dimension(), 1u);
}

TEST(Cotangent, VeroneseBothSides) {
  Ring r = examples::veroneseRing();
  GradedModule ring = GradedModule::ringModule(r);
  GradedModule omega = cotangentModule(r);
  GradedModule dual = homModule(omega, ring).module;
  GradedModule a = globalExtSum(1, 0, dual, ring);
  GradedModule b = globalExtSum(1, 0, ring, omega);
  for (int d = 0; d <= 3; ++d) {
    EXPECT_EQ(hilbertFunction(a, d), d == 0 ? 1 : 0);
    EXPECT_EQ(hilbertFunction(b, d), d == 0 ? 1 : 0);
  }
}
