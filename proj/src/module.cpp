#include "gext/module.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gext {

struct GradedModule::Cache {
  std::once_flag once;
  GroebnerBasis basis;
};

namespace {

std::vector<int> degreesOf(const std::vector<Vec>& vs, const FreeModule& ambient, int shift = 0) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i) {
    auto d = vs[i].homogeneousDegree(ambient.degrees());
    if (!d) throw InhomogeneousError("element " + std::to_string(i) + " is zero or not homogeneous", i);
    out.push_back(*d + shift);
  }
  return out;
}

std::vector<Vec> dropZeros(std::vector<Vec> vs) {
  std::erase_if(vs, [](const Vec& v) { return v.isZero(); });
  return vs;
}

/// Keeps the columns that are minimal generators modulo I*F.
std::vector<Vec> minimalRelations(const FreeModule& cover, std::vector<Vec> rels) {
  rels = dropZeros(std::move(rels));
  if (rels.empty()) return rels;
  SubmoduleRequest req;
  req.ambient = cover;
  req.trackedDegrees = degreesOf(rels, cover);
  req.tracked = std::move(rels);
  req.wantMinimal = true;
  SubmoduleResult res = computeSubmodule(req);
  std::vector<Vec> kept;
  for (std::size_t i = 0; i < req.tracked.size(); ++i)
    if (res.minimal[i]) kept.push_back(vec::reduceModQuotient(cover.ring(), req.tracked[i]));
  return kept;
}

GradedModule presentationFrom(const FreeModule& cover, std::vector<Vec> rels) {
  std::vector<int> degs = degreesOf(rels, cover);
  return GradedModule(GradedMatrix(FreeModule(cover.ring(), std::move(degs)), cover, std::move(rels)));
}

}  // namespace

GradedModule::GradedModule(GradedMatrix presentation)
    : mPresentation(std::move(presentation)), mCache(std::make_shared<Cache>()) {}

GradedModule GradedModule::free(const FreeModule& f) {
  return GradedModule(GradedMatrix(FreeModule(f.ring(), {}), f, {}));
}

GradedModule GradedModule::zero(const Ring& ring) { return free(FreeModule(ring, {})); }

GradedModule GradedModule::ringModule(const Ring& ring) { return free(FreeModule(ring, {0})); }

const GroebnerBasis& GradedModule::relationBasis() const {
  std::call_once(mCache->once, [this] {
    SubmoduleRequest req;
    req.ambient = cover();
    req.tracked = mPresentation.columns();
    req.trackedDegrees = mPresentation.source().degrees();
    mCache->basis = computeSubmodule(req).basis;
  });
  return mCache->basis;
}

HilbertSeries GradedModule::hilbertSeries() const {
  HilbertSeries h;
  h.numVars = ring().numVars();
  const auto leads = relationBasis().leadMonomials();
  for (int j = 0; j < numGenerators(); ++j)
    h.numerator = h.numerator + monomialIdealNumerator(leads[static_cast<std::size_t>(j)]).shifted(cover().degree(static_cast<std::size_t>(j)));
  return h;
}

bool GradedModule::isZero() const {
  const GroebnerBasis& gb = relationBasis();
  const Monomial one = ring().unitMonomial();
  for (int j = 0; j < numGenerators(); ++j)
    if (gb.findDivisor(one, static_cast<std::uint32_t>(j)) < 0) return false;
  return true;
}

std::string GradedModule::toString() const {
  const int rows = numGenerators();
  const int cols = numRelations();
  if (rows == 0) return "0";
  std::vector<std::vector<std::string>> cells(static_cast<std::size_t>(rows));
  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::string s = ring().format(mPresentation.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
      width[static_cast<std::size_t>(j)] = std::max(width[static_cast<std::size_t>(j)], s.size());
      cells[static_cast<std::size_t>(i)].push_back(std::move(s));
    }
  }
  std::vector<std::string> labels;
  std::size_t labelWidth = 0;
  for (int d : generatorDegrees()) {
    labels.push_back("{" + std::to_string(d) + "}");
    labelWidth = std::max(labelWidth, labels.back().size());
  }
  const std::string head = cols == 0 ? "free " : "cokernel ";
  std::ostringstream out;
  for (int i = 0; i < rows; ++i) {
    out << (i == 0 ? head : std::string(head.size(), ' '));
    out << labels[static_cast<std::size_t>(i)] << std::string(labelWidth - labels[static_cast<std::size_t>(i)].size(), ' ') << " |";
    for (int j = 0; j < cols; ++j) {
      const std::string& s = cells[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      out << ' ' << std::string(width[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
    }
    out << " |";
    if (i + 1 < rows) out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------

ModuleMap ModuleMap::unchecked(GradedModule source, GradedModule target, std::vector<Vec> images, int degree) {
  ModuleMap f;
  f.mSource = std::move(source);
  f.mTarget = std::move(target);
  f.mImages = std::move(images);
  f.mDegree = degree;
  return f;
}

ModuleMap::ModuleMap(GradedModule source, GradedModule target, std::vector<Vec> images, int degree)
    : mSource(std::move(source)), mTarget(std::move(target)), mImages(std::move(images)), mDegree(degree) {
  if (!(mSource.ring() == mTarget.ring())) throw std::invalid_argument("map between modules over different rings");
  if (static_cast<int>(mImages.size()) != mSource.numGenerators())
    throw std::invalid_argument("map needs one image per source generator");
  for (std::size_t j = 0; j < mImages.size(); ++j) {
    for (const VecTerm& t : mImages[j].terms())
      if (static_cast<int>(t.comp) >= mTarget.numGenerators())
        throw std::invalid_argument("image " + std::to_string(j) + " lies outside the target cover");
    auto d = mImages[j].homogeneousDegree(mTarget.generatorDegrees());
    if (!mImages[j].isZero() && (!d || *d != mSource.generatorDegrees()[j] + mDegree))
      throw InhomogeneousError("image " + std::to_string(j) + " has the wrong degree", j);
  }
  for (std::size_t c = 0; c < static_cast<std::size_t>(mSource.numRelations()); ++c) {
    if (!mTarget.reduce(apply(mSource.presentation().column(c))).isZero())
      throw IllDefinedMap("relation " + std::to_string(c) + " of the source does not map to zero");
  }
}

ModuleMap ModuleMap::identity(const GradedModule& m) {
  std::vector<Vec> imgs;
  for (int j = 0; j < m.numGenerators(); ++j) imgs.push_back(Vec::basis(static_cast<std::uint32_t>(j), m.ring().numVars()));
  return unchecked(m, m, std::move(imgs), 0);
}

GradedMatrix ModuleMap::matrix() const {
  return GradedMatrix(mSource.cover().twisted(-mDegree), mTarget.cover(), mImages);
}

Vec ModuleMap::apply(const Vec& v) const {
  const PrimeField& k = mTarget.ring().field();
  Vec out;
  for (const VecTerm& t : v.terms()) out = vec::addMul(k, out, t.coef, t.mono, mImages[t.comp]);
  return vec::reduceModQuotient(mTarget.ring(), out);
}

ModuleMap ModuleMap::compose(const ModuleMap& other) const {
  std::vector<Vec> imgs;
  imgs.reserve(other.mImages.size());
  for (const Vec& v : other.mImages) imgs.push_back(apply(v));
  return unchecked(other.mSource, mTarget, std::move(imgs), mDegree + other.mDegree);
}

bool ModuleMap::isZero() const {
  return std::all_of(mImages.begin(), mImages.end(), [this](const Vec& v) { return mTarget.reduce(v).isZero(); });
}

// ---------------------------------------------------------------------------

GradedModule twist(const GradedModule& m, int v) {
  const GradedMatrix& p = m.presentation();
  return GradedModule(GradedMatrix(p.source().twisted(v), p.target().twisted(v), p.columns()));
}

PruneResult pruneWithMaps(const GradedModule& m) {
  const Ring& ring = m.ring();
  const PrimeField& k = ring.field();
  const int n = m.numGenerators();
  const int nv = ring.numVars();
  std::vector<Vec> cols = dropZeros(m.presentation().columns());
  for (Vec& c : cols) c = vec::reduceModQuotient(ring, c);
  cols = dropZeros(std::move(cols));
  std::vector<Vec> expr;  // original generator j in terms of surviving ones
  for (int j = 0; j < n; ++j) expr.push_back(Vec::basis(static_cast<std::uint32_t>(j), nv));
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  while (true) {
    std::size_t col = cols.size();
    const VecTerm* unit = nullptr;
    for (std::size_t c = 0; c < cols.size() && unit == nullptr; ++c) {
      for (const VecTerm& t : cols[c].terms()) {
        if (t.mono.isOne()) {
          unit = &t;
          col = c;
          break;
        }
      }
    }
    if (unit == nullptr) break;
    const std::uint32_t row = unit->comp;
    const Coef inv = k.inverse(unit->coef);
    const Vec pivot = cols[col];
    auto eliminate = [&](Vec& v) {
      Poly f = v.entry(row);
      if (f.isZero()) return;
      v = vec::reduceModQuotient(ring, vec::sub(k, v, vec::mulPoly(k, ring.scale(f, inv), pivot)));
    };
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(col));
    for (Vec& c : cols) eliminate(c);
    for (Vec& e : expr) eliminate(e);
    cols = dropZeros(std::move(cols));
    alive[row] = false;
  }

  std::vector<int> newIndex(static_cast<std::size_t>(n), -1);
  std::vector<int> kept;
  std::vector<int> degs;
  for (int j = 0; j < n; ++j) {
    if (!alive[static_cast<std::size_t>(j)]) continue;
    newIndex[static_cast<std::size_t>(j)] = static_cast<int>(kept.size());
    kept.push_back(j);
    degs.push_back(m.generatorDegrees()[static_cast<std::size_t>(j)]);
  }
  FreeModule cover(ring, std::move(degs));
  std::vector<Vec> rels;
  for (const Vec& c : cols) rels.push_back(vec::remap(k, c, newIndex));
  rels = minimalRelations(cover, std::move(rels));

  PruneResult out;
  out.module = presentationFrom(cover, std::move(rels));
  std::vector<Vec> back;
  for (int j : kept) back.push_back(Vec::basis(static_cast<std::uint32_t>(j), nv));
  out.toOriginal = ModuleMap::unchecked(out.module, m, std::move(back));
  std::vector<Vec> forward;
  for (const Vec& e : expr) forward.push_back(vec::remap(k, e, newIndex));
  out.fromOriginal = ModuleMap::unchecked(m, out.module, std::move(forward));
  return out;
}

GradedModule prune(const GradedModule& m) { return pruneWithMaps(m).module; }

GradedModule truncate(const GradedModule& m, int r) {
  const auto& degs = m.generatorDegrees();
  if (degs.empty() || r <= *std::min_element(degs.begin(), degs.end())) return m;
  const Ring& ring = m.ring();
  const int nv = ring.numVars();
  const GroebnerBasis& gb = m.relationBasis();

  std::vector<Vec> gens;
  std::vector<int> genDegs;
  for (std::size_t j = 0; j < degs.size(); ++j) {
    const auto comp = static_cast<std::uint32_t>(j);
    if (degs[j] > r) {
      gens.push_back(Vec::basis(comp, nv));
      genDegs.push_back(degs[j]);
      continue;
    }
    for (const Monomial& mono : monomialsOfDegree(nv, r - degs[j])) {
      if (gb.findDivisor(mono, comp) >= 0) continue;
      gens.push_back(Vec({VecTerm{mono, 1, comp}}));
      genDegs.push_back(r);
    }
  }
  FreeModule cover(ring, genDegs);
  if (gens.empty()) return GradedModule::zero(ring);

  SubmoduleRequest req;
  req.ambient = m.cover();
  req.base = gb;
  req.tracked = gens;
  req.trackedDegrees = genDegs;
  req.wantSyzygies = true;
  SubmoduleResult res = computeSubmodule(req);
  std::vector<Vec> rels;
  for (const Vec& z : res.syzygies) rels.push_back(vec::reduceModQuotient(ring, z));
  rels = dropZeros(std::move(rels));
  return prune(presentationFrom(cover, std::move(rels)));
}

GradedModule directSum(const GradedModule& a, const GradedModule& b) {
  if (!(a.ring() == b.ring())) throw std::invalid_argument("direct sum of modules over different rings");
  const GradedMatrix& pa = a.presentation();
  const GradedMatrix& pb = b.presentation();
  std::vector<Vec> cols = pa.columns();
  const auto off = static_cast<std::uint32_t>(a.numGenerators());
  for (const Vec& c : pb.columns()) cols.push_back(vec::shift(c, off));
  return GradedModule(GradedMatrix(FreeModule::directSum(pa.source(), pb.source()),
                                   FreeModule::directSum(pa.target(), pb.target()), std::move(cols)));
}

GradedModule restrictScalars(const GradedModule& m) {
  const Ring& ring = m.ring();
  if (!ring.isQuotient()) return m;
  const Ring s = ring.ambient();
  FreeModule cover = m.cover().overRing(s);
  std::vector<Vec> rels = m.presentation().columns();
  for (int j = 0; j < cover.rank(); ++j)
    for (const Poly& f : ring.quotientIdeal()) rels.push_back(Vec::fromPoly(f, static_cast<std::uint32_t>(j)));
  return presentationFrom(cover, std::move(rels));
}

Submodule imageInModule(const std::vector<Vec>& gens, const GradedModule& target) {
  const Ring& ring = target.ring();
  const GroebnerBasis& gb = target.relationBasis();
  std::vector<Vec> reduced;
  for (const Vec& g : gens) {
    Vec r = gb.normalForm(g);
    if (!r.isZero()) reduced.push_back(std::move(r));
  }
  if (reduced.empty()) {
    GradedModule z = GradedModule::zero(ring);
    return {z, ModuleMap::unchecked(z, target, {})};
  }
  std::vector<int> degs = degreesOf(reduced, target.cover());

  SubmoduleRequest minReq;
  minReq.ambient = target.cover();
  minReq.base = gb;
  minReq.tracked = reduced;
  minReq.trackedDegrees = degs;
  minReq.wantMinimal = true;
  SubmoduleResult minRes = computeSubmodule(minReq);
  std::vector<Vec> kept;
  std::vector<int> keptDegs;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    if (!minRes.minimal[i]) continue;
    kept.push_back(reduced[i]);
    keptDegs.push_back(degs[i]);
  }

  SubmoduleRequest syzReq;
  syzReq.ambient = target.cover();
  syzReq.base = gb;
  syzReq.tracked = kept;
  syzReq.trackedDegrees = keptDegs;
  syzReq.wantSyzygies = true;
  SubmoduleResult syzRes = computeSubmodule(syzReq);
  FreeModule cover(ring, keptDegs);
  std::vector<Vec> rels;
  for (const Vec& z : syzRes.syzygies) rels.push_back(vec::reduceModQuotient(ring, z));
  rels = minimalRelations(cover, std::move(rels));
  GradedModule sub = presentationFrom(cover, std::move(rels));
  return {sub, ModuleMap::unchecked(sub, target, std::move(kept))};
}

Submodule imageOf(const ModuleMap& f) {
  std::vector<Vec> imgs = f.images();
  Submodule s = imageInModule(imgs, f.target());
  return s;
}

Submodule kernelOf(const ModuleMap& f) {
  const GradedModule& src = f.source();
  const Ring& ring = src.ring();
  if (src.numGenerators() == 0) return {src, ModuleMap::identity(src)};
  SubmoduleRequest req;
  req.ambient = f.target().cover();
  req.base = f.target().relationBasis();
  req.tracked = f.images();
  req.trackedDegrees = src.generatorDegrees();
  for (int& d : req.trackedDegrees) d += f.degree();
  req.wantSyzygies = true;
  SubmoduleResult res = computeSubmodule(req);
  std::vector<Vec> gens;
  for (const Vec& z : res.syzygies) {
    Vec r = vec::reduceModQuotient(ring, z);
    if (!r.isZero()) gens.push_back(std::move(r));
  }
  return imageInModule(gens, src);
}

bool submoduleEquals(const Submodule& a, const Submodule& b) {
  const GradedModule& amb = a.inclusion.target();
  if (!(amb.presentation() == b.inclusion.target().presentation()))
    throw std::invalid_argument("submodules of different modules");
  auto contains = [&](const std::vector<Vec>& big, const std::vector<Vec>& small) {
    std::vector<Vec> gens = dropZeros(big);
    SubmoduleRequest req;
    req.ambient = amb.cover();
    req.base = amb.relationBasis();
    req.trackedDegrees = degreesOf(gens, amb.cover());
    req.tracked = std::move(gens);
    GroebnerBasis gb = computeSubmodule(req).basis;
    return std::all_of(small.begin(), small.end(), [&](const Vec& v) { return gb.contains(v); });
  };
  std::vector<Vec> ia;
  std::vector<Vec> ib;
  for (const Vec& v : a.inclusion.images()) ia.push_back(amb.reduce(v));
  for (const Vec& v : b.inclusion.images()) ib.push_back(amb.reduce(v));
  return contains(ia, ib) && contains(ib, ia);
}

std::int64_t hilbertFunction(const GradedModule& m, int d) { return m.hilbertSeries().valueAt(d); }

GradedComponent gradedComponent(const GradedModule& m, int d) {
  GradedComponent out;
  out.degree = d;
  const GroebnerBasis& gb = m.relationBasis();
  const int nv = m.ring().numVars();
  for (int j = 0; j < m.numGenerators(); ++j) {
    const int e = d - m.generatorDegrees()[static_cast<std::size_t>(j)];
    if (e < 0) continue;
    for (const Monomial& mono : monomialsOfDegree(nv, e))
      if (gb.findDivisor(mono, static_cast<std::uint32_t>(j)) < 0)
        out.basis.push_back({mono, 1, static_cast<std::uint32_t>(j)});
  }
  return out;
}

ExtInt krullDim(const GradedModule& m) { return m.hilbertSeries().dimension(); }

}  // namespace gext
