// Acceptance suite: one PASS/FAIL line per criterion.
//
// Exit status is nonzero when a criterion fails, except for criteria listed
// in kRecordedDeviations, whose reference data is known to be inconsistent;
// those still print FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "examples.hpp"
#include "oracle.hpp"

using namespace gext;

namespace {

const std::set<std::string> kRecordedDeviations{"1a"};

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  std::string id;
  std::string title;
  std::function<Outcome()> run;
};

using Clock = std::chrono::steady_clock;
double secondsSince(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

bool killedByMaximalIdeal(const GradedModule& m) {
  const Ring& r = m.ring();
  for (int j = 0; j < m.numGenerators(); ++j)
    for (int i = 0; i < r.numVars(); ++i) {
      Vec v({VecTerm{Monomial::variable(i, r.numVars()), 1, static_cast<std::uint32_t>(j)}});
      if (!m.reduce(v).isZero()) return false;
    }
  return true;
}

std::vector<std::int64_t> window(const GradedModule& m, int lo, int hi) {
  std::vector<std::int64_t> out;
  for (int d = lo; d <= hi; ++d) out.push_back(hilbertFunction(m, d));
  return out;
}

std::string show(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
  out << "]";
  return out.str();
}

// ---------------------------------------------------------------------------
// random data

Poly randomForm(const Ring& r, int degree, std::mt19937& rng, int maxTerms) {
  if (degree < 0) return {};
  auto monos = monomialsOfDegree(r.numVars(), degree);
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<int> coef(-5, 5);
  Poly f;
  for (int t = 0; t < maxTerms; ++t) f = r.add(f, r.monomial(r.field().fromInteger(coef(rng)), monos[pick(rng)]));
  return f;
}

GradedModule randomModule(const Ring& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> ngens(1, 3);
  std::uniform_int_distribution<int> nrels(1, 4);
  std::uniform_int_distribution<int> deg01(0, 1);
  std::uniform_int_distribution<int> reldeg(1, 2);
  std::vector<int> degs;
  for (int i = ngens(rng); i > 0; --i) degs.push_back(deg01(rng));
  std::vector<Vec> cols;
  std::vector<int> colDegs;
  for (int c = nrels(rng); c > 0; --c) {
    const int d = *std::max_element(degs.begin(), degs.end()) + reldeg(rng);
    Vec col;
    for (std::size_t j = 0; j < degs.size(); ++j)
      col = vec::add(r.field(), col, Vec::fromPoly(randomForm(r, d - degs[j], rng, 3), static_cast<std::uint32_t>(j)));
    if (col.isZero()) continue;
    cols.push_back(col);
    colDegs.push_back(d);
  }
  return GradedModule(GradedMatrix(FreeModule(r, colDegs), FreeModule(r, degs), cols));
}

// ---------------------------------------------------------------------------
// 1. rational quartic

Outcome quarticBetti() {
  FreeResolution res = freeResolution(examples::quarticCurve());
  std::ostringstream got;
  for (std::size_t i = 0; i < res.frees.size(); ++i) {
    std::vector<int> d = res.frees[i].degrees();
    std::sort(d.begin(), d.end());
    got << (i ? "; " : "") << join(d);
  }
  const std::string want = "0; 2,3,3; 4,4,4,4; 5";
  return {got.str() == want, "expected {" + want + "} got {" + got.str() + "}"};
}

Outcome quarticBound() {
  TruncationBound tb = truncationBound(1, 0, examples::quarticCurve());
  return {tb.r == ExtInt(2), "r = " + tb.r.toString()};
}

Outcome quarticGlobalExt() {
  GradedModule n = examples::quarticCurve();
  GradedModule e = globalExtSum(1, 0, GradedModule::ringModule(n.ring()), n);
  return {e.isZero(), "globalExtSum(1,0,S,S/I) = " + e.toString()};
}

Outcome quarticSharpness() {
  GradedModule n = examples::quarticCurve();
  GradedModule s = GradedModule::ringModule(n.ring());
  GradedModule e = prune(truncate(extModule(1, truncate(s, 1), n), 0));
  const bool degreeZero = std::all_of(e.generatorDegrees().begin(), e.generatorDegrees().end(), [](int d) { return d == 0; });
  const bool killed = killedByMaximalIdeal(e);
  std::ostringstream d;
  d << e.numGenerators() << " generators in degrees {" << join(e.generatorDegrees()) << "}, " << e.numRelations()
    << " relations, killed by (w,x,y,z): " << (killed ? "yes" : "no");
  return {e.numGenerators() == 4 && degreeZero && killed, d.str()};
}

// ---------------------------------------------------------------------------
// 2. Veronese cotangent bundle

Outcome veronese() {
  Ring r = examples::veroneseRing();
  GradedModule ring = GradedModule::ringModule(r);
  TruncationBound tb = truncationBound(1, 0, ring);
  const bool vacuous = tb.pd == ExtInt(3) && tb.ell.isFinite() && tb.n - tb.ell.value() == 4;
  GradedModule omega = cotangentModule(r);
  GradedModule dual = homModule(omega, ring).module;

  auto t0 = Clock::now();
  GradedModule a = globalExtSum(1, 0, dual, ring);
  const double dualTime = secondsSince(t0);
  t0 = Clock::now();
  GradedModule b = globalExtSum(1, 0, ring, omega);
  const double omegaTime = secondsSince(t0);

  const std::vector<std::int64_t> want{1, 0, 0, 0};
  const auto wa = window(a, 0, 3);
  const auto wb = window(b, 0, 3);
  std::ostringstream d;
  d << "pd = " << tb.pd.toString() << ", n-l = " << (tb.ell.isFinite() ? tb.n - tb.ell.value() : -1) << "; dual side "
    << show(wa) << " in " << dualTime << " s, Omega side " << show(wb) << " in " << omegaTime << " s";
  return {vacuous && wa == want && wb == want && dualTime < omegaTime, d.str()};
}

// ---------------------------------------------------------------------------
// 3. Del Pezzo duality

Outcome delPezzo() {
  GradedModule g = examples::delPezzoSheaf();
  GradedModule omega = twist(GradedModule::ringModule(g.ring()), -1);
  std::vector<std::int64_t> ext;
  std::vector<std::int64_t> coh;
  for (int m : {2, 1, 0}) ext.push_back(static_cast<std::int64_t>(globalExt(m, g, omega).dimension()));
  for (int m : {0, 1, 2}) coh.push_back(static_cast<std::int64_t>(sheafCohomology(m, g).dimension()));
  const std::vector<std::int64_t> want{2, 2, 0};
  return {ext == want && coh == want, "Ext^{2,1,0}(G,w) = " + show(ext) + ", H^{0,1,2}(G) = " + show(coh)};
}

// ---------------------------------------------------------------------------
// 4. elliptic curve extension

Outcome ellipticExt() {
  GradedModule r = GradedModule::ringModule(examples::ellipticRing());
  const std::size_t d = globalExt(1, r, r).dimension();
  return {d == 1, "dim Ext^1(X; O, O) = " + std::to_string(d)};
}

Outcome ellipticTruncation() {
  GradedModule r = GradedModule::ringModule(examples::ellipticRing());
  TruncationBound tb = truncationBound(1, 0, r);
  GradedModule t = prune(truncate(r, 2));
  std::ostringstream d;
  d << "r = " << tb.r.toString() << ", truncate(2,R): " << t.numGenerators() << " generators, " << t.numRelations()
    << " relations";
  return {tb.r == ExtInt(2) && t.numGenerators() == 6 && t.numRelations() == 9, d.str()};
}

Outcome ellipticYoneda() {
  GradedModule n = GradedModule::ringModule(examples::ellipticRing());
  GradedModule printed = examples::ellipticTruncation();
  const bool sameTruncation = window(printed, 0, 6) == window(truncate(n, 2), 0, 6);
  ExtensionSetup setup = extensionSetupFor(printed, n);
  ModuleMap theta = examples::thetaFromRow(setup, n, examples::ellipticTruncationRows()[0], -2);
  ExtensionResult ext = extensionFromHom(setup, theta);
  const std::size_t h0 = sheafCohomology(0, ext.extension).dimension();
  const bool verified = ext.verified[0] && ext.verified[1] && ext.verified[2];
  std::ostringstream d;
  d << "E is " << ext.extension.numGenerators() << "x" << ext.extension.numRelations() << ", verified = ("
    << std::boolalpha << ext.verified[0] << "," << ext.verified[1] << "," << ext.verified[2] << "), h^0(E) = " << h0
    << ", theta degree " << ext.thetaDegree << ", Ext class " << (ext.classIsZero ? "zero" : "nonzero");
  return {sameTruncation && verified && h0 == 1, d.str()};
}

Outcome ellipticSplit() {
  GradedModule n = GradedModule::ringModule(examples::ellipticRing());
  ExtensionSetup setup = extensionSetup(n, n);
  std::vector<Coef> zero(static_cast<std::size_t>(setup.homToTarget.module.numGenerators()), 0);
  ExtensionResult ext = yonedaExtension(setup, zero);
  std::vector<std::int64_t> sum;
  for (int d = 0; d <= 5; ++d) sum.push_back(hilbertFunction(n, d) + hilbertFunction(setup.truncated, d));
  const auto got = window(ext.extension, 0, 5);
  return {got == sum && ext.verified[0] && ext.verified[1] && ext.verified[2],
          "hilbert(E) = " + show(got) + ", hilbert(N) + hilbert(M') = " + show(sum)};
}

// ---------------------------------------------------------------------------
// 5. property suites

Outcome groebnerProperty() {
  std::mt19937 rng(20240601);
  int checked = 0;
  int membership = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int nv = 1 + trial % 3;
    std::vector<std::string> names{"x", "y", "z"};
    names.resize(static_cast<std::size_t>(nv));
    Ring s = Ring::polynomial(32003, names);
    const PrimeField& k = s.field();
    FreeModule f(s, {0});
    std::uniform_int_distribution<int> ngens(1, 4);
    std::uniform_int_distribution<int> degs(1, 3);
    std::vector<Vec> gens;
    for (int g = ngens(rng); g > 0; --g) {
      Poly p = randomForm(s, degs(rng), rng, 3);
      if (!p.isZero()) gens.push_back(Vec::fromPoly(p, 0));
    }
    if (gens.empty()) continue;
    GroebnerBasis gb = groebnerBasis(f, gens);
    const auto& el = gb.elements();
    for (std::size_t i = 0; i < el.size(); ++i)
      for (std::size_t j = i + 1; j < el.size(); ++j) {
        const Monomial l = el[i].lead().mono.lcm(el[j].lead().mono);
        Vec sp = vec::sub(k, vec::mulTerm(k, el[i], 1, l / el[i].lead().mono), vec::mulTerm(k, el[j], 1, l / el[j].lead().mono));
        if (!gb.normalForm(sp).isZero()) return {false, "S-pair did not reduce to zero in trial " + std::to_string(trial)};
      }
    for (int d = 0; d <= 6; ++d) {
      // one random member and one random form per degree
      Vec member;
      for (const Vec& g : gens) {
        const int gd = g.lead().mono.degree();
        if (gd <= d) member = vec::add(k, member, vec::mulPoly(k, randomForm(s, d - gd, rng, 2), g));
      }
      Vec any = Vec::fromPoly(randomForm(s, d, rng, 4), 0);
      for (const Vec& v : {member, any}) {
        if (v.isZero()) continue;
        if (gb.contains(v) != oracle::memberByLinearAlgebra(f, gens, v))
          return {false, "membership disagrees in trial " + std::to_string(trial)};
        ++membership;
      }
    }
    ++checked;
  }
  return {checked >= 190, std::to_string(checked) + " ideals, " + std::to_string(membership) + " membership checks"};
}

Outcome resolutionProperty() {
  std::mt19937 rng(77);
  Ring s3 = Ring::polynomial(32003, {"x", "y", "z"});
  Ring s4 = Ring::polynomial(32003, {"w", "x", "y", "z"});
  for (int trial = 0; trial < 50; ++trial) {
    GradedModule m = randomModule(trial % 2 ? s4 : s3, rng);
    FreeResolution res = freeResolution(m);
    const BettiTable betti = bettiStats(res);
    LaurentPoly alt;
    for (const auto& [key, count] : betti.entries())
      alt = alt + LaurentPoly::monomial(key.second, (key.first % 2 == 0 ? 1 : -1) * count);
    if (!(alt == m.hilbertSeries().numerator))
      return {false, "trial " + std::to_string(trial) + ": " + alt.toString() + " vs " + m.hilbertSeries().numerator.toString()};
    for (int d = 0; d < 4; ++d)
      if (hilbertFunction(m, d) != oracle::hilbertByLinearAlgebra(m, d))
        return {false, "Hilbert function disagrees with linear algebra in trial " + std::to_string(trial)};
  }
  return {true, "50 modules"};
}

Outcome boundStability() {
  struct Case {
    std::string name;
    int m;
    GradedModule source;
    GradedModule target;
  };
  std::vector<Case> cases;
  {
    GradedModule n = examples::quarticCurve();
    cases.push_back({"quartic", 1, GradedModule::ringModule(n.ring()), n});
  }
  {
    Ring r = examples::veroneseRing();
    cases.push_back({"veronese", 1, GradedModule::ringModule(r), cotangentModule(r)});
  }
  {
    GradedModule g = examples::delPezzoSheaf();
    GradedModule omega = twist(GradedModule::ringModule(g.ring()), -1);
    cases.push_back({"del pezzo m=1", 1, g, omega});
    cases.push_back({"del pezzo m=2", 2, g, omega});
  }
  {
    GradedModule r = GradedModule::ringModule(examples::ellipticRing());
    cases.push_back({"elliptic", 1, r, r});
  }
  std::ostringstream d;
  for (const Case& c : cases) {
    TruncationBound tb = truncationBound(c.m, 0, c.target);
    const auto& degs = c.source.generatorDegrees();
    const int r = tb.r.isFinite() ? tb.r.value() : *std::min_element(degs.begin(), degs.end());
    std::vector<std::vector<std::int64_t>> rows;
    for (int shift = 0; shift <= 2; ++shift) rows.push_back(window(extModule(c.m, truncate(c.source, r + shift), c.target), 0, 4));
    if (!(rows[0] == rows[1] && rows[1] == rows[2]))
      return {false, c.name + ": " + show(rows[0]) + " " + show(rows[1]) + " " + show(rows[2])};
    d << c.name << " r=" << r << " " << show(rows[0]) << "; ";
  }
  return {true, d.str()};
}

Outcome vanishingProperty() {
  std::vector<std::pair<std::string, GradedModule>> data{
      {"quartic", examples::quarticCurve()}, {"elliptic", GradedModule::ringModule(examples::ellipticRing())}};
  int checks = 0;
  for (const auto& [name, n] : data) {
    const int dim = n.ring().numVars() - 1;
    for (int m = 1; m <= dim; ++m) {
      const ExtInt v0 = vanishingBound(m, n);
      const int start = v0.isFinite() ? v0.value() : -3;
      for (int v = start; v <= start + 3; ++v) {
        if (sheafCohomology(m, twist(n, v)).dimension() != 0)
          return {false, name + ": H^" + std::to_string(m) + "(N(" + std::to_string(v) + ")) != 0"};
        ++checks;
      }
    }
  }
  return {true, std::to_string(checks) + " twists checked"};
}

Outcome extAboveDimensionVanishes() {
  std::mt19937 rng(99);
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    GradedModule m = randomModule(s, rng);
    GradedModule n = randomModule(s, rng);
    for (int k : {3, 4})
      if (globalExt(k, m, n).dimension() != 0) return {false, "nonzero Ext^" + std::to_string(k) + " in trial " + std::to_string(trial)};
  }
  return {true, "20 pairs, m = 3, 4"};
}

Outcome lineBundles() {
  Ring s = Ring::polynomial(32003, {"x", "y", "z"});
  GradedModule o = GradedModule::ringModule(s);
  auto count = [](int d) { return d < 0 ? std::size_t{0} : monomialsOfDegree(3, d).size(); };
  for (int v = -5; v <= 3; ++v) {
    GradedModule ov = twist(o, v);
    const std::size_t want[] = {count(v), 0, count(-v - 3)};
    for (int m = 0; m <= 2; ++m)
      if (sheafCohomology(m, ov).dimension() != want[m])
        return {false, "h^" + std::to_string(m) + "(O(" + std::to_string(v) + "))"};
  }
  return {true, "v in [-5, 3], m = 0, 1, 2"};
}

}  // namespace

int main() {
  struct Group {
    std::string name;
    double budget;
    std::vector<Criterion> criteria;
  };
  std::vector<Group> groups{
      {"1", 10,
       {{"1a", "quartic Betti degrees", quarticBetti},
        {"1b", "quartic truncation bound", quarticBound},
        {"1c", "quartic globalExtSum vanishes", quarticGlobalExt},
        {"1d", "quartic sharpness witness", quarticSharpness}}},
      {"2", 900, {{"2", "Veronese cotangent bundle", veronese}}},
      {"3", 60, {{"3", "Del Pezzo duality", delPezzo}}},
      {"4", 30,
       {{"4a", "elliptic Ext^1(O,O)", ellipticExt},
        {"4b", "elliptic truncation", ellipticTruncation},
        {"4c", "elliptic extension from the reference theta", ellipticYoneda},
        {"4d", "split extension Hilbert additivity", ellipticSplit}}},
      {"5", 600,
       {{"5a", "Groebner S-pairs and membership", groebnerProperty},
        {"5b", "resolution alternating sum", resolutionProperty},
        {"5c", "bound stability", boundStability},
        {"5d", "vanishing bound oracle", vanishingProperty},
        {"5e", "Ext above dimension on P^2", extAboveDimensionVanishes},
        {"5f", "line bundles on P^2", lineBundles}}},
  };

  int failures = 0;
  int recorded = 0;
  int passes = 0;
  for (const Group& g : groups) {
    const auto t0 = Clock::now();
    std::vector<std::pair<const Criterion*, Outcome>> results;
    for (const Criterion& c : g.criteria) {
      const auto tc = Clock::now();
      Outcome o;
      try {
        o = c.run();
      } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
      }
      std::ostringstream line;
      line.precision(3);
      line << (o.pass ? "PASS " : "FAIL ") << c.id << "  " << c.title << ": " << o.detail << " (" << std::fixed
           << secondsSince(tc) << " s)";
      if (!o.pass && kRecordedDeviations.count(c.id)) line << " [known deviation: the reference degrees omit a cubic generator]";
      std::cout << line.str() << std::endl;
      if (o.pass) {
        ++passes;
      } else if (kRecordedDeviations.count(c.id)) {
        ++recorded;
      } else {
        ++failures;
      }
    }
    const double elapsed = secondsSince(t0);
    const bool inBudget = elapsed < g.budget;
    std::cout << (inBudget ? "PASS " : "FAIL ") << g.name << "-time  criterion " << g.name << " wall time " << elapsed
              << " s (budget " << g.budget << " s)" << std::endl;
    inBudget ? ++passes : ++failures;
  }
  std::cout << passes << " passed, " << failures + recorded << " failed (" << recorded << " recorded deviation)"
            << std::endl;
  return failures == 0 ? 0 : 1;
}
