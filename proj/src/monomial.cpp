#include "gext/monomial.hpp"

#include <algorithm>
#include <string>

namespace gext {

Monomial::Monomial(int numVars) {
  if (numVars < 0 || numVars > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) +
                                " variables are supported");
  mVars = static_cast<std::uint8_t>(numVars);
}

Monomial Monomial::variable(int index, int numVars) {
  Monomial m(numVars);
  if (index < 0 || index >= numVars) throw std::out_of_range("variable index out of range");
  m.mExp[static_cast<std::size_t>(index)] = 1;
  m.refresh();
  return m;
}

Monomial Monomial::fromExponents(std::span<const int> exps) {
  Monomial m(static_cast<int>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw std::invalid_argument("negative exponent");
    if (exps[i] > 0xFFFF) throw ExponentOverflow();
    m.mExp[i] = static_cast<Exponent>(exps[i]);
  }
  m.refresh();
  return m;
}

void Monomial::refresh() {
  mDegree = 0;
  mMask = 0;
  for (int i = 0; i < kMaxVariables; ++i) {
    mDegree += mExp[i];
    if (mExp[i] != 0) mMask |= (1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  r.mVars = std::max(mVars, other.mVars);
  for (int i = 0; i < kMaxVariables; ++i) {
    unsigned s = static_cast<unsigned>(mExp[i]) + other.mExp[i];
    if (s > 0xFFFF) throw ExponentOverflow();
    r.mExp[i] = static_cast<Exponent>(s);
  }
  r.mDegree = mDegree + other.mDegree;
  r.mMask = mMask | other.mMask;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r = *this;
  for (int i = 0; i < kMaxVariables; ++i) r.mExp[i] = static_cast<Exponent>(mExp[i] - divisor.mExp[i]);
  r.refresh();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r = *this;
  r.mVars = std::max(mVars, other.mVars);
  for (int i = 0; i < kMaxVariables; ++i) r.mExp[i] = std::max(mExp[i], other.mExp[i]);
  r.refresh();
  return r;
}

std::vector<int> Monomial::exponents() const {
  return std::vector<int>(mExp.begin(), mExp.begin() + mVars);
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (int i = 0; i < mVars; ++i) {
    h ^= mExp[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering monomialCompare(const Monomial& a, const Monomial& b) {
  if (a.numVars() != b.numVars())
    throw std::invalid_argument("monomials over different variable sets");
  int c = grevlexCompare(a, b);
  return c > 0 ? std::strong_ordering::greater
               : c < 0 ? std::strong_ordering::less : std::strong_ordering::equal;
}

namespace {
void enumerate(int numVars, int var, int remaining, std::vector<int>& exps,
               std::vector<Monomial>& out) {
  if (var == numVars - 1) {
    exps[static_cast<std::size_t>(var)] = remaining;
    out.push_back(Monomial::fromExponents(exps));
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[static_cast<std::size_t>(var)] = e;
    enumerate(numVars, var + 1, remaining - e, exps, out);
  }
}
}  // namespace

std::vector<Monomial> monomialsOfDegree(int numVars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (numVars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> exps(static_cast<std::size_t>(numVars), 0);
  enumerate(numVars, 0, degree, exps, out);
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return grevlexCompare(a, b) > 0; });
  return out;
}

}  // namespace gext
