#include "gext/resolution.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace gext {

namespace {

/// Minimal generators of the kernel of `d` over its ring.
std::vector<Vec> kernelGenerators(const GradedMatrix& d) {
  const Ring& ring = d.ring();
  SubmoduleRequest syz;
  syz.ambient = d.target();
  syz.tracked = d.columns();
  syz.trackedDegrees = d.source().degrees();
  syz.wantSyzygies = true;
  std::vector<Vec> gens;
  for (const Vec& z : computeSubmodule(syz).syzygies) {
    Vec r = vec::reduceModQuotient(ring, z);
    if (!r.isZero()) gens.push_back(std::move(r));
  }
  if (gens.empty()) return gens;

  SubmoduleRequest minimal;
  minimal.ambient = d.source();
  for (const Vec& g : gens) minimal.trackedDegrees.push_back(*g.homogeneousDegree(d.source().degrees()));
  minimal.tracked = std::move(gens);
  minimal.wantMinimal = true;
  SubmoduleResult res = computeSubmodule(minimal);
  std::vector<Vec> out;
  for (std::size_t i = 0; i < minimal.tracked.size(); ++i)
    if (res.minimal[i]) out.push_back(minimal.tracked[i]);
  return out;
}

}  // namespace

FreeResolution freeResolution(const GradedModule& m, std::optional<int> lengthCap) {
  if (m.ring().isQuotient() && !lengthCap) throw MissingLengthCap();
  if (lengthCap && *lengthCap < 0) throw std::invalid_argument("negative length cap");
  FreeResolution res;
  res.module = prune(m);
  res.frees.push_back(res.module.cover());
  const Ring& ring = m.ring();

  GradedMatrix d = res.module.presentation();
  while (d.numCols() > 0) {
    if (lengthCap && static_cast<int>(res.differentials.size()) >= *lengthCap) {
      res.truncatedAtLength = *lengthCap;
      break;
    }
    res.frees.push_back(d.source());
    res.differentials.push_back(d);
    std::vector<Vec> next = kernelGenerators(d);
    std::vector<int> degs;
    for (const Vec& g : next) degs.push_back(*g.homogeneousDegree(d.source().degrees()));
    d = GradedMatrix(FreeModule(ring, std::move(degs)), d.source(), std::move(next));
  }
  return res;
}

BettiTable::BettiTable(const FreeResolution& res) {
  for (std::size_t i = 0; i < res.frees.size(); ++i)
    for (int deg : res.frees[i].degrees()) ++mEntries[{static_cast<int>(i), deg}];
}

BettiTable BettiTable::fromEntries(const std::map<std::pair<int, int>, int>& entries) {
  BettiTable t;
  for (const auto& [key, count] : entries)
    if (count != 0) t.mEntries[key] = count;
  return t;
}

BettiTable bettiStats(const FreeResolution& res) { return BettiTable(res); }

int BettiTable::entry(int index, int degree) const {
  auto it = mEntries.find({index, degree});
  return it == mEntries.end() ? 0 : it->second;
}

int BettiTable::rank(int index) const {
  int total = 0;
  for (const auto& [key, count] : mEntries)
    if (key.first == index) total += count;
  return total;
}

ExtInt BettiTable::maxDegree(int index) const {
  ExtInt best = ExtInt::negInf();
  for (const auto& [key, count] : mEntries)
    if (key.first == index) best = max(best, ExtInt(key.second));
  return best;
}

ExtInt BettiTable::minDegree(int index) const {
  ExtInt best = ExtInt::posInf();
  for (const auto& [key, count] : mEntries)
    if (key.first == index) best = min(best, ExtInt(key.second));
  return best;
}

ExtInt BettiTable::projectiveDimension() const {
  ExtInt best = ExtInt::negInf();
  for (const auto& [key, count] : mEntries) best = max(best, ExtInt(key.first));
  return best;
}

std::string BettiTable::toString() const {
  if (mEntries.empty()) return "0";
  const int pd = projectiveDimension().value();
  int lo = 0;
  int hi = 0;
  bool first = true;
  for (const auto& [key, count] : mEntries) {
    const int row = key.second - key.first;
    lo = first ? row : std::min(lo, row);
    hi = first ? row : std::max(hi, row);
    first = false;
  }
  std::vector<std::string> labels{"", "total:"};
  for (int r = lo; r <= hi; ++r) labels.push_back(std::to_string(r) + ":");
  std::size_t labelWidth = 0;
  for (const auto& l : labels) labelWidth = std::max(labelWidth, l.size());

  std::vector<std::vector<std::string>> columns;
  std::vector<std::size_t> widths;
  for (int i = 0; i <= pd; ++i) {
    std::vector<std::string> col{std::to_string(i), std::to_string(rank(i))};
    for (int r = lo; r <= hi; ++r) {
      const int b = entry(i, r + i);
      col.push_back(b == 0 ? "." : std::to_string(b));
    }
    std::size_t w = 0;
    for (const auto& s : col) w = std::max(w, s.size());
    widths.push_back(w);
    columns.push_back(std::move(col));
  }
  std::ostringstream out;
  for (std::size_t line = 0; line < labels.size(); ++line) {
    out << std::setw(static_cast<int>(labelWidth)) << labels[line];
    for (std::size_t i = 0; i < columns.size(); ++i) out << ' ' << std::setw(static_cast<int>(widths[i])) << columns[i][line];
    if (line + 1 < labels.size()) out << '\n';
  }
  return out.str();
}

}  // namespace gext
