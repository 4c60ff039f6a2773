#include "gext/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace gext {

LaurentPoly LaurentPoly::monomial(int exponent, std::int64_t coef) {
  LaurentPoly p;
  p.add(exponent, coef);
  return p;
}

void LaurentPoly::add(int e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = mCoefs.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) mCoefs.erase(it);
  }
}

std::int64_t LaurentPoly::coefficient(int exponent) const {
  auto it = mCoefs.find(exponent);
  return it == mCoefs.end() ? 0 : it->second;
}

std::int64_t LaurentPoly::valueAtOne() const {
  std::int64_t s = 0;
  for (const auto& [e, c] : mCoefs) s += c;
  return s;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.mCoefs) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.mCoefs) r.add(e, -c);
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : mCoefs)
    for (const auto& [e2, c2] : o.mCoefs) r.add(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int by) const {
  LaurentPoly r;
  for (const auto& [e, c] : mCoefs) r.mCoefs.emplace(e + by, c);
  return r;
}

LaurentPoly LaurentPoly::dividedByOneMinusT() const {
  if (valueAtOne() != 0) throw std::invalid_argument("not divisible by 1 - t");
  // q = p / (1 - t) = sum over e of (prefix sum of coefficients up to e) t^e
  LaurentPoly q;
  if (mCoefs.empty()) return q;
  const int lo = mCoefs.begin()->first;
  const int hi = mCoefs.rbegin()->first;
  std::int64_t acc = 0;
  for (int e = lo; e < hi; ++e) {
    acc += coefficient(e);
    q.add(e, acc);
  }
  return q;
}

std::string LaurentPoly::toString() const {
  if (mCoefs.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : mCoefs) {
    std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag << "*";
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t HilbertSeries::valueAt(int d) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : numerator.coefficients()) {
    if (e > d) break;
    if (numVars == 0) {
      if (e == d) total += c;
    } else {
      total += c * binomial(d - e + numVars - 1, numVars - 1);
    }
  }
  return total;
}

ExtInt HilbertSeries::dimension() const {
  if (numerator.isZero()) return ExtInt::negInf();
  LaurentPoly p = numerator;
  int d = numVars;
  while (p.valueAtOne() == 0) {
    p = p.dividedByOneMinusT();
    --d;
  }
  return d;
}

namespace {

using Dense = std::vector<std::int64_t>;

void addShifted(Dense& into, const Dense& from, int shift, std::int64_t sign) {
  if (into.size() < from.size() + static_cast<std::size_t>(shift)) into.resize(from.size() + shift, 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i + shift] += sign * from[i];
}

Dense multiply(const Dense& a, const Dense& b) {
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void minimize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  gens = std::move(kept);
}

bool isPurePower(const Monomial& m) { return std::popcount(m.supportMask()) <= 1; }

Dense numerator(std::vector<Monomial> gens) {
  minimize(gens);
  if (gens.empty()) return {1};
  if (gens.front().isOne()) return {0};

  bool coprime = true;
  std::uint32_t seen = 0;
  for (const Monomial& g : gens) {
    if ((seen & g.supportMask()) != 0) {
      coprime = false;
      break;
    }
    seen |= g.supportMask();
  }
  if (coprime) {
    Dense r{1};
    for (const Monomial& g : gens) {
      Dense f(g.degree() + 1, 0);
      f[0] = 1;
      f[g.degree()] -= 1;
      r = multiply(r, f);
    }
    return r;
  }

  // Pivot on x^a where x has the largest exponent a in some mixed generator:
  // K(J) = K(J + x^a) + t^a K(J : x^a).
  const Monomial* mixed = nullptr;
  for (const Monomial& g : gens)
    if (!isPurePower(g) && (mixed == nullptr || g.degree() > mixed->degree())) mixed = &g;
  int var = 0;
  for (int i = 0; i < mixed->numVars(); ++i)
    if ((*mixed)[i] > (*mixed)[var]) var = i;
  const int a = (*mixed)[var];
  std::vector<int> pexp(mixed->numVars(), 0);
  pexp[var] = a;
  const Monomial pivot = Monomial::fromExponents(pexp);

  std::vector<Monomial> plus = gens;
  plus.push_back(pivot);
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const Monomial& g : gens) colon.push_back(g.lcm(pivot) / pivot);

  Dense result = numerator(std::move(plus));
  addShifted(result, numerator(std::move(colon)), a, 1);
  while (result.size() > 1 && result.back() == 0) result.pop_back();
  return result;
}

}  // namespace

LaurentPoly monomialIdealNumerator(std::vector<Monomial> gens) {
  const Dense d = numerator(std::move(gens));
  LaurentPoly r;
  for (std::size_t e = 0; e < d.size(); ++e)
    if (d[e] != 0) r = r + LaurentPoly::monomial(static_cast<int>(e), d[e]);
  return r;
}

}  // namespace gext
