#include "gext/free_module.hpp"

#include <algorithm>

namespace gext {

FreeModule FreeModule::twisted(int v) const {
  std::vector<int> d = mDegrees;
  for (int& x : d) x -= v;
  return {mRing, std::move(d)};
}

FreeModule FreeModule::directSum(const FreeModule& a, const FreeModule& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("direct sum of free modules over different rings");
  std::vector<int> d = a.degrees();
  d.insert(d.end(), b.degrees().begin(), b.degrees().end());
  return {a.ring(), std::move(d)};
}

Vec Vec::fromPoly(const Poly& f, std::uint32_t comp) {
  std::vector<VecTerm> t;
  t.reserve(f.size());
  for (const Term& x : f.terms()) t.push_back({x.mono, x.coef, comp});
  return Vec(std::move(t));
}

Vec Vec::basis(std::uint32_t comp, int numVars) {
  return Vec({VecTerm{Monomial(numVars), 1, comp}});
}

Poly Vec::entry(std::uint32_t comp) const {
  std::vector<Term> t;
  for (const VecTerm& x : mTerms)
    if (x.comp == comp) t.push_back({x.mono, x.coef});
  return Poly(std::move(t));
}

std::optional<int> Vec::homogeneousDegree(const std::vector<int>& twists) const {
  if (mTerms.empty()) return std::nullopt;
  int d = mTerms[0].mono.degree() + twists[mTerms[0].comp];
  for (const VecTerm& x : mTerms)
    if (x.mono.degree() + twists[x.comp] != d) return std::nullopt;
  return d;
}

namespace vec {

Vec canonicalize(const PrimeField& k, std::vector<VecTerm> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const VecTerm& a, const VecTerm& b) { return termCompare(a, b) > 0; });
  std::vector<VecTerm> out;
  out.reserve(terms.size());
  for (const VecTerm& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coef = k.add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(t);
    }
  }
  return Vec(std::move(out));
}

Vec addMul(const PrimeField& k, const Vec& a, Coef c, const Monomial& m, const Vec& b) {
  if (c == 0 || b.isZero()) return a;
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::vector<VecTerm> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  bool unit = m.isOne();
  VecTerm yt;
  auto loadY = [&](std::size_t idx) {
    yt = y[idx];
    if (!unit) yt.mono = y[idx].mono * m;
    yt.coef = k.mul(y[idx].coef, c);
  };
  if (j < y.size()) loadY(j);
  while (i < x.size() && j < y.size()) {
    int cmp = termCompare(x[i], yt);
    if (cmp > 0) {
      out.push_back(x[i++]);
    } else if (cmp < 0) {
      out.push_back(yt);
      if (++j < y.size()) loadY(j);
    } else {
      Coef s = k.add(x[i].coef, yt.coef);
      if (s != 0) out.push_back({x[i].mono, s, x[i].comp});
      ++i;
      if (++j < y.size()) loadY(j);
    }
  }
  while (i < x.size()) out.push_back(x[i++]);
  while (j < y.size()) {
    out.push_back(yt);
    if (++j < y.size()) loadY(j);
  }
  return Vec(std::move(out));
}

Vec add(const PrimeField& k, const Vec& a, const Vec& b) {
  return addMul(k, a, 1, Monomial(b.isZero() ? 0 : b.lead().mono.numVars()), b);
}

Vec sub(const PrimeField& k, const Vec& a, const Vec& b) {
  return addMul(k, a, k.neg(1), Monomial(b.isZero() ? 0 : b.lead().mono.numVars()), b);
}

Vec scale(const PrimeField& k, const Vec& a, Coef c) {
  if (c == 0) return {};
  std::vector<VecTerm> t = a.terms();
  for (VecTerm& x : t) x.coef = k.mul(x.coef, c);
  return Vec(std::move(t));
}

Vec mulTerm(const PrimeField& k, const Vec& a, Coef c, const Monomial& m) {
  if (c == 0) return {};
  std::vector<VecTerm> t = a.terms();
  for (VecTerm& x : t) {
    x.coef = k.mul(x.coef, c);
    x.mono = x.mono * m;
  }
  return Vec(std::move(t));
}

Vec mulPoly(const PrimeField& k, const Poly& f, const Vec& a) {
  if (f.isZero() || a.isZero()) return {};
  if (f.size() == 1) return mulTerm(k, a, f.lead().coef, f.lead().mono);
  std::vector<VecTerm> t;
  t.reserve(f.size() * a.size());
  for (const Term& s : f.terms())
    for (const VecTerm& x : a.terms()) t.push_back({x.mono * s.mono, k.mul(x.coef, s.coef), x.comp});
  return canonicalize(k, std::move(t));
}

Vec remap(const PrimeField& k, const Vec& a, std::span<const int> newIndex) {
  std::vector<VecTerm> t;
  t.reserve(a.size());
  for (const VecTerm& x : a.terms()) {
    int c = newIndex[x.comp];
    if (c >= 0) t.push_back({x.mono, x.coef, static_cast<std::uint32_t>(c)});
  }
  return canonicalize(k, std::move(t));
}

Vec shift(const Vec& a, std::uint32_t offset) {
  std::vector<VecTerm> t = a.terms();
  for (VecTerm& x : t) x.comp += offset;
  return Vec(std::move(t));
}

}  // namespace vec

GradedMatrix::GradedMatrix(FreeModule source, FreeModule target, std::vector<Vec> columns)
    : mSource(std::move(source)), mTarget(std::move(target)), mColumns(std::move(columns)) {
  if (!(mSource.ring() == mTarget.ring())) throw std::invalid_argument("matrix between free modules over different rings");
  if (static_cast<int>(mColumns.size()) != mSource.rank())
    throw std::invalid_argument("column count does not match source rank");
  for (std::size_t j = 0; j < mColumns.size(); ++j) {
    for (const VecTerm& t : mColumns[j].terms()) {
      if (static_cast<int>(t.comp) >= mTarget.rank()) throw std::invalid_argument("matrix entry outside target");
      if (t.mono.degree() + mTarget.degree(t.comp) != mSource.degree(j))
        throw InhomogeneousError("matrix column " + std::to_string(j) + " is not homogeneous of degree " +
                                     std::to_string(mSource.degree(j)),
                                 j);
    }
  }
}

GradedMatrix GradedMatrix::fromRows(const FreeModule& target, const std::vector<std::vector<Poly>>& rows,
                                    std::optional<std::vector<int>> sourceDegrees) {
  if (static_cast<int>(rows.size()) != target.rank())
    throw std::invalid_argument("row count does not match the number of generators");
  std::size_t ncols = rows.empty() ? (sourceDegrees ? sourceDegrees->size() : 0) : rows[0].size();
  for (const auto& r : rows)
    if (r.size() != ncols) throw std::invalid_argument("ragged matrix rows");
  std::vector<int> degs(ncols, 0);
  std::vector<Vec> cols(ncols);
  const PrimeField& k = target.ring().field();
  for (std::size_t j = 0; j < ncols; ++j) {
    std::vector<VecTerm> terms;
    std::optional<int> d;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const Poly& f = rows[i][j];
      if (f.isZero()) continue;
      auto hd = f.homogeneousDegree();
      if (!hd) throw InhomogeneousError("matrix entry (" + std::to_string(i) + "," + std::to_string(j) + ") is not homogeneous", j);
      int cd = *hd + target.degree(i);
      if (d && *d != cd) throw InhomogeneousError("matrix column " + std::to_string(j) + " is not homogeneous", j);
      d = cd;
      for (const Term& t : f.terms()) terms.push_back({t.mono, t.coef, static_cast<std::uint32_t>(i)});
    }
    if (sourceDegrees) {
      if (sourceDegrees->size() != ncols) throw std::invalid_argument("source degree count mismatch");
      degs[j] = (*sourceDegrees)[j];
    } else if (d) {
      degs[j] = *d;
    } else {
      throw InhomogeneousError("zero column " + std::to_string(j) + " needs an explicit degree", j);
    }
    cols[j] = vec::canonicalize(k, std::move(terms));
  }
  return GradedMatrix(FreeModule(target.ring(), std::move(degs)), target, std::move(cols));
}

GradedMatrix GradedMatrix::identity(const FreeModule& f) {
  std::vector<Vec> cols;
  for (int j = 0; j < f.rank(); ++j) cols.push_back(Vec::basis(static_cast<std::uint32_t>(j), f.ring().numVars()));
  return GradedMatrix(f, f, std::move(cols));
}

GradedMatrix GradedMatrix::zero(const FreeModule& source, const FreeModule& target) {
  return GradedMatrix(source, target, std::vector<Vec>(static_cast<std::size_t>(source.rank())));
}

GradedMatrix GradedMatrix::compose(const GradedMatrix& other) const {
  if (!(other.target().degrees() == mSource.degrees()))
    throw std::invalid_argument("matrix composition: incompatible free modules");
  const PrimeField& k = ring().field();
  std::vector<Vec> cols;
  cols.reserve(other.columns().size());
  for (const Vec& c : other.columns()) {
    std::vector<VecTerm> acc;
    for (const VecTerm& t : c.terms())
      for (const VecTerm& s : mColumns[t.comp].terms())
        acc.push_back({s.mono * t.mono, k.mul(s.coef, t.coef), s.comp});
    cols.push_back(vec::canonicalize(k, std::move(acc)));
  }
  return GradedMatrix(other.source(), mTarget, std::move(cols));
}

GradedMatrix GradedMatrix::negated() const {
  const PrimeField& k = ring().field();
  std::vector<Vec> cols;
  for (const Vec& c : mColumns) cols.push_back(vec::scale(k, c, k.neg(1)));
  return GradedMatrix(mSource, mTarget, std::move(cols));
}

GradedMatrix GradedMatrix::concatColumns(const GradedMatrix& other) const {
  if (!(other.target() == mTarget)) throw std::invalid_argument("concatenation needs a common target");
  std::vector<Vec> cols = mColumns;
  cols.insert(cols.end(), other.columns().begin(), other.columns().end());
  return GradedMatrix(FreeModule::directSum(mSource, other.source()), mTarget, std::move(cols));
}

GradedMatrix GradedMatrix::stackRows(const GradedMatrix& other) const {
  if (!(other.source().degrees() == mSource.degrees())) throw std::invalid_argument("stacking needs a common source");
  const PrimeField& k = ring().field();
  std::vector<Vec> cols;
  auto off = static_cast<std::uint32_t>(mTarget.rank());
  for (std::size_t j = 0; j < mColumns.size(); ++j) {
    std::vector<VecTerm> t = mColumns[j].terms();
    for (VecTerm x : other.column(j).terms()) {
      x.comp += off;
      t.push_back(x);
    }
    cols.push_back(vec::canonicalize(k, std::move(t)));
  }
  return GradedMatrix(mSource, FreeModule::directSum(mTarget, other.target()), std::move(cols));
}

bool GradedMatrix::hasUnitEntry() const {
  for (const Vec& c : mColumns)
    for (const VecTerm& t : c.terms())
      if (t.mono.isOne()) return true;
  return false;
}

bool GradedMatrix::isZero() const {
  return std::all_of(mColumns.begin(), mColumns.end(), [](const Vec& c) { return c.isZero(); });
}

}  // namespace gext
