#include "gext/groebner.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace gext {

namespace {

/// out = a[from..] + c * m * b[skip..]; b's skipped prefix is assumed to cancel.
void mergeTail(const PrimeField& k, const std::vector<VecTerm>& a, std::size_t from, const Vec& b, Coef c,
               const Monomial& m, std::vector<VecTerm>& out) {
  out.clear();
  const auto& y = b.terms();
  out.reserve(a.size() - from + y.size());
  std::size_t i = from, j = 1;
  VecTerm yt;
  auto load = [&](std::size_t idx) {
    yt.mono = y[idx].mono * m;
    yt.coef = k.mul(y[idx].coef, c);
    yt.comp = y[idx].comp;
  };
  if (j < y.size()) load(j);
  while (i < a.size() && j < y.size()) {
    int cmp = termCompare(a[i], yt);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back(yt);
      if (++j < y.size()) load(j);
    } else {
      Coef s = k.add(a[i].coef, yt.coef);
      if (s != 0) out.push_back({a[i].mono, s, a[i].comp});
      ++i;
      if (++j < y.size()) load(j);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  while (j < y.size()) {
    out.push_back(yt);
    if (++j < y.size()) load(j);
  }
}

/// Full reduction of f. `find(mono, comp)` returns a divisor index or -1.
/// `onStep(index, coef, mono)` is called for each step f -= ... so callers can
/// track representations or quotients.
template <class Find, class OnStep>
Vec reduceFull(const PrimeField& k, const Vec& f, const std::vector<Vec>& elems, Find&& find, OnStep&& onStep) {
  std::vector<VecTerm> out;
  std::vector<VecTerm> cur = f.terms();
  std::vector<VecTerm> buf;
  std::size_t pos = 0;
  while (pos < cur.size()) {
    const VecTerm t = cur[pos];
    int idx = find(t.mono, t.comp);
    if (idx < 0) {
      out.push_back(t);
      ++pos;
      continue;
    }
    const Vec& g = elems[static_cast<std::size_t>(idx)];
    Coef c = k.neg(t.coef);
    Monomial m = t.mono / g.lead().mono;
    mergeTail(k, cur, pos + 1, g, c, m, buf);
    cur.swap(buf);
    pos = 0;
    onStep(idx, c, m);
  }
  return Vec(std::move(out));
}

Vec makeMonic(const PrimeField& k, const Vec& v, Coef* inverseOut = nullptr) {
  Coef inv = k.inverse(v.lead().coef);
  if (inverseOut) *inverseOut = inv;
  return inv == 1 ? v : vec::scale(k, v, inv);
}

struct Pair {
  std::uint32_t i, j;
  Monomial lcm;
  std::uint32_t comp;
  int degree;
  std::uint64_t seq;
};

class Buchberger {
 public:
  explicit Buchberger(const SubmoduleRequest& req)
      : mReq(req), mField(req.ambient.ring().field()), mNumVars(req.ambient.ring().numVars()),
        mTwists(req.ambient.degrees()), mByComp(static_cast<std::size_t>(req.ambient.rank())) {}

  SubmoduleResult run() {
    const GroebnerBasis base = mReq.base ? *mReq.base : quotientBasisFor(mReq.ambient);
    for (const Vec& b : base.elements()) insertBase(b);

    const std::size_t ntracked = mReq.tracked.size();
    if (mReq.trackedDegrees.size() != ntracked)
      throw std::invalid_argument("tracked generator degrees missing");
    mMinimal.assign(ntracked, false);
    for (std::size_t i = 0; i < ntracked; ++i) {
      const Vec& g = mReq.tracked[i];
      for (const VecTerm& t : g.terms())
        if (static_cast<int>(t.comp) >= mReq.ambient.rank())
          throw std::invalid_argument("generator " + std::to_string(i) + " lies outside the ambient free module");
      auto d = g.homogeneousDegree(mTwists);
      if (!g.isZero() && (!d || *d != mReq.trackedDegrees[i]))
        throw InhomogeneousError("generator " + std::to_string(i) + " is not homogeneous of its stated degree", i);
    }
    std::vector<std::size_t> order(ntracked);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return mReq.trackedDegrees[a] < mReq.trackedDegrees[b];
    });

    std::size_t nextGen = 0;
    while (true) {
      std::optional<int> d;
      if (!mPairs.empty()) d = mPairs.begin()->first;
      if (nextGen < order.size()) {
        int gd = mReq.trackedDegrees[order[nextGen]];
        d = d ? std::min(*d, gd) : gd;
      }
      if (!d || (mReq.maxDegree && *d > *mReq.maxDegree)) break;

      auto it = mPairs.find(*d);
      if (it != mPairs.end()) {
        std::vector<Pair> batch = std::move(it->second);
        mPairs.erase(it);
        std::sort(batch.begin(), batch.end(), [](const Pair& a, const Pair& b) { return a.seq < b.seq; });
        for (const Pair& p : batch) processPair(p);
      }
      while (nextGen < order.size() && mReq.trackedDegrees[order[nextGen]] == *d) {
        processGenerator(order[nextGen]);
        ++nextGen;
      }
    }

    SubmoduleResult res;
    res.basis = GroebnerBasis(mReq.ambient, mElems, mReq.ambient.ring().isQuotient() || base.overQuotient());
    res.minimal = std::move(mMinimal);
    res.syzygies = std::move(mSyzygies);
    return res;
  }

 private:
  bool tracking() const { return mReq.wantSyzygies; }

  int find(const Monomial& m, std::uint32_t comp) const {
    for (const auto& [lead, idx] : mByComp[comp])
      if (lead.divides(m)) return static_cast<int>(idx);
    return -1;
  }

  Vec reduce(const Vec& f, Vec& rep) {
    return reduceFull(mField, f, mElems, [this](const Monomial& m, std::uint32_t c) { return find(m, c); },
                      [&](int idx, Coef c, const Monomial& m) {
                        if (tracking() && !mReps[static_cast<std::size_t>(idx)].isZero())
                          rep = vec::addMul(mField, rep, c, m, mReps[static_cast<std::size_t>(idx)]);
                      });
  }

  void insertBase(const Vec& b) {
    auto idx = static_cast<std::uint32_t>(mElems.size());
    mElems.push_back(b);
    mReps.emplace_back();
    mFromBase.push_back(true);
    mByComp[b.lead().comp].push_back({b.lead().mono, idx});
  }

  void processPair(const Pair& p) {
    const Vec& a = mElems[p.i];
    const Vec& b = mElems[p.j];
    Monomial ma = p.lcm / a.lead().mono;
    Monomial mb = p.lcm / b.lead().mono;
    Vec s = vec::addMul(mField, vec::mulTerm(mField, a, 1, ma), mField.neg(1), mb, b);
    Vec rep;
    if (tracking()) {
      rep = vec::addMul(mField, vec::mulTerm(mField, mReps[p.i], 1, ma), mField.neg(1), mb, mReps[p.j]);
    }
    Vec r = reduce(s, rep);
    if (!r.isZero()) {
      insert(r, rep);
    } else if (tracking() && !rep.isZero()) {
      mSyzygies.push_back(std::move(rep));
    }
  }

  void processGenerator(std::size_t i) {
    Vec rep;
    if (tracking()) rep = Vec::basis(static_cast<std::uint32_t>(i), mNumVars);
    Vec r = mReq.tracked[i].isZero() ? Vec() : reduce(mReq.tracked[i], rep);
    if (!r.isZero()) {
      mMinimal[i] = true;
      insert(r, rep);
    } else if (tracking()) {
      mSyzygies.push_back(std::move(rep));
    }
  }

  void insert(const Vec& v, const Vec& rep) {
    Coef inv = 1;
    Vec monic = makeMonic(mField, v, &inv);
    Vec monicRep = tracking() && inv != 1 ? vec::scale(mField, rep, inv) : rep;
    const Monomial lead = monic.lead().mono;
    const std::uint32_t comp = monic.lead().comp;
    const auto h = static_cast<std::uint32_t>(mElems.size());

    // Chain criterion on pending pairs.
    for (auto& [deg, bucket] : mPairs) {
      std::erase_if(bucket, [&](const Pair& p) {
        if (p.comp != comp || !lead.divides(p.lcm)) return false;
        const Monomial& li = mElems[p.i].lead().mono;
        const Monomial& lj = mElems[p.j].lead().mono;
        return !(li.lcm(lead) == p.lcm) && !(lj.lcm(lead) == p.lcm);
      });
    }
    std::erase_if(mPairs, [](const auto& kv) { return kv.second.empty(); });

    struct Candidate {
      std::uint32_t i;
      Monomial lcm;
      bool coprime;
      bool alive = true;
    };
    std::vector<Candidate> cands;
    for (const auto& [li, idx] : mByComp[comp]) cands.push_back({idx, li.lcm(lead), li.coprimeTo(lead)});
    for (auto& a : cands) {
      for (const auto& b : cands) {
        if (&a == &b) continue;
        if (b.lcm.divides(a.lcm) && !(b.lcm == a.lcm)) {
          a.alive = false;
          break;
        }
      }
    }
    for (std::size_t x = 0; x < cands.size(); ++x) {
      if (!cands[x].alive) continue;
      bool groupCoprime = cands[x].coprime;
      for (std::size_t y = x + 1; y < cands.size(); ++y) {
        if (cands[y].alive && cands[y].lcm == cands[x].lcm) {
          groupCoprime = groupCoprime || cands[y].coprime;
          cands[y].alive = false;
        }
      }
      // Coprime leads only certify a zero S-pair for ideals.
      if (groupCoprime && !tracking() && mReq.ambient.rank() == 1) continue;
      int deg = cands[x].lcm.degree() + mTwists[comp];
      mPairs[deg].push_back({cands[x].i, h, cands[x].lcm, comp, deg, mSeq++});
    }

    mElems.push_back(std::move(monic));
    mReps.push_back(std::move(monicRep));
    mFromBase.push_back(false);
    mByComp[comp].push_back({lead, h});
  }

  const SubmoduleRequest& mReq;
  const PrimeField& mField;
  int mNumVars;
  const std::vector<int>& mTwists;
  std::vector<Vec> mElems;
  std::vector<Vec> mReps;
  std::vector<bool> mFromBase;
  std::vector<std::vector<std::pair<Monomial, std::uint32_t>>> mByComp;
  std::map<int, std::vector<Pair>> mPairs;
  std::uint64_t mSeq = 0;
  std::vector<bool> mMinimal;
  std::vector<Vec> mSyzygies;
};

}  // namespace

GroebnerBasis::GroebnerBasis(FreeModule ambient, std::vector<Vec> elements, bool overQuotient)
    : mAmbient(std::move(ambient)), mElements(std::move(elements)),
      mByComponent(static_cast<std::size_t>(mAmbient.rank())), mOverQuotient(overQuotient) {
  for (std::size_t i = 0; i < mElements.size(); ++i) {
    const VecTerm& l = mElements[i].lead();
    mByComponent[l.comp].push_back({l.mono, static_cast<std::uint32_t>(i)});
  }
}

int GroebnerBasis::findDivisor(const Monomial& m, std::uint32_t comp) const {
  if (comp >= mByComponent.size()) return -1;
  for (const Lead& l : mByComponent[comp])
    if (l.mono.divides(m)) return static_cast<int>(l.index);
  return -1;
}

Vec GroebnerBasis::normalForm(const Vec& v) const {
  if (v.isZero() || mElements.empty()) return v;
  return reduceFull(mAmbient.ring().field(), v, mElements,
                    [this](const Monomial& m, std::uint32_t c) { return findDivisor(m, c); },
                    [](int, Coef, const Monomial&) {});
}

GroebnerBasis::Division GroebnerBasis::divide(const Vec& v) const {
  const Ring& ring = mAmbient.ring().ambient();
  const PrimeField& k = ring.field();
  std::vector<std::vector<Term>> q(mElements.size());
  Division out;
  out.remainder = reduceFull(k, v, mElements, [this](const Monomial& m, std::uint32_t c) { return findDivisor(m, c); },
                             [&](int idx, Coef c, const Monomial& m) {
                               q[static_cast<std::size_t>(idx)].push_back({m, k.neg(c)});
                             });
  for (auto& terms : q) out.quotients.push_back(ring.fromTerms(std::move(terms)));
  return out;
}

std::vector<std::vector<Monomial>> GroebnerBasis::leadMonomials() const {
  std::vector<std::vector<Monomial>> out(mByComponent.size());
  for (std::size_t c = 0; c < mByComponent.size(); ++c)
    for (const Lead& l : mByComponent[c]) out[c].push_back(l.mono);
  return out;
}

GroebnerBasis quotientBasisFor(const FreeModule& ambient) {
  std::vector<Vec> elems;
  const Ring& ring = ambient.ring();
  if (ring.isQuotient()) {
    for (int j = 0; j < ambient.rank(); ++j)
      for (const Poly& g : ring.quotientBasis()) elems.push_back(Vec::fromPoly(g, static_cast<std::uint32_t>(j)));
  }
  return GroebnerBasis(ambient, std::move(elems), ring.isQuotient());
}

GroebnerBasis groebnerBasis(const FreeModule& ambient, const std::vector<Vec>& gens) {
  SubmoduleRequest req;
  req.ambient = ambient;
  req.tracked = gens;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto d = gens[i].homogeneousDegree(ambient.degrees());
    if (!gens[i].isZero() && !d) throw InhomogeneousError("generator " + std::to_string(i) + " is not homogeneous", i);
    req.trackedDegrees.push_back(d.value_or(0));
  }
  return computeSubmodule(req).basis;
}

Vec normalForm(const Vec& v, const GroebnerBasis& gb) { return gb.normalForm(v); }

SubmoduleResult computeSubmodule(const SubmoduleRequest& request) { return Buchberger(request).run(); }

GradedMatrix syzygies(const GradedMatrix& gens) {
  SubmoduleRequest req;
  req.ambient = gens.target();
  req.tracked = gens.columns();
  req.trackedDegrees = gens.source().degrees();
  req.wantSyzygies = true;
  SubmoduleResult res = computeSubmodule(req);
  std::vector<int> degs;
  for (const Vec& z : res.syzygies) degs.push_back(*z.homogeneousDegree(gens.source().degrees()));
  const Ring& ring = gens.ring();
  std::vector<Vec> cols;
  for (const Vec& z : res.syzygies) cols.push_back(vec::reduceModQuotient(ring, z));
  return GradedMatrix(FreeModule(ring, std::move(degs)), gens.source(), std::move(cols));
}

namespace vec {
Vec reduceModQuotient(const Ring& ring, const Vec& a) {
  if (!ring.isQuotient() || a.isZero()) return a;
  const auto& basis = ring.quotientBasis();
  std::vector<Vec> elems;
  for (const Poly& g : basis) elems.push_back(Vec::fromPoly(g, 0));
  auto find = [&](const Monomial& m, std::uint32_t) {
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (basis[i].lead().mono.divides(m)) return static_cast<int>(i);
    return -1;
  };
  std::map<std::uint32_t, std::vector<VecTerm>> byComp;
  for (const VecTerm& t : a.terms()) byComp[t.comp].push_back({t.mono, t.coef, 0});
  std::vector<VecTerm> out;
  for (auto& [comp, terms] : byComp) {
    Vec r = reduceFull(ring.field(), Vec(std::move(terms)), elems, find, [](int, Coef, const Monomial&) {});
    for (VecTerm t : r.terms()) {
      t.comp = comp;
      out.push_back(t);
    }
  }
  return canonicalize(ring.field(), std::move(out));
}
}  // namespace vec

}  // namespace gext
