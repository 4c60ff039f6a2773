#include "gext/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "gext/free_module.hpp"
#include "gext/groebner.hpp"

namespace gext {

std::optional<int> Poly::homogeneousDegree() const {
  if (mTerms.empty()) return std::nullopt;
  int d = mTerms[0].mono.degree();
  for (const Term& t : mTerms)
    if (t.mono.degree() != d) return std::nullopt;
  return d;
}

struct Ring::Impl {
  PrimeField field;
  std::vector<std::string> names;
  std::vector<Poly> ideal;
  std::vector<Poly> idealBasis;
  std::shared_ptr<const Impl> ambient;  // null for a polynomial ring
};

Ring Ring::polynomial(std::uint32_t p, std::vector<std::string> varNames) {
  if (varNames.empty()) throw std::invalid_argument("a ring needs at least one variable");
  if (static_cast<int>(varNames.size()) > kMaxVariables)
    throw std::invalid_argument("at most " + std::to_string(kMaxVariables) + " variables are supported");
  for (std::size_t i = 0; i < varNames.size(); ++i)
    for (std::size_t j = i + 1; j < varNames.size(); ++j)
      if (varNames[i] == varNames[j]) throw std::invalid_argument("duplicate variable name " + varNames[i]);
  auto impl = std::make_shared<Impl>(Impl{PrimeField(p), std::move(varNames), {}, {}, nullptr});
  return Ring(std::move(impl));
}

Ring Ring::quotient(const std::vector<Poly>& ideal) const {
  if (isQuotient()) throw std::invalid_argument("quotients of quotient rings are not supported; pass all generators at once");
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    auto d = ideal[i].homogeneousDegree();
    if (!ideal[i].isZero() && (!d || *d <= 0))
      throw InhomogeneousError("quotient generator " + std::to_string(i) + " is not homogeneous of positive degree", i);
  }
  std::vector<Poly> gens;
  for (const Poly& f : ideal)
    if (!f.isZero()) gens.push_back(f);
  if (gens.empty()) return *this;
  std::vector<Vec> vecs;
  for (const Poly& f : gens) vecs.push_back(Vec::fromPoly(f, 0));
  GroebnerBasis gb = groebnerBasis(FreeModule(*this, {0}), vecs);
  std::vector<Poly> basis;
  for (const Vec& v : gb.elements()) basis.push_back(v.entry(0));
  auto impl = std::make_shared<Impl>(Impl{mImpl->field, mImpl->names, gens, std::move(basis), mImpl});
  return Ring(std::move(impl));
}

const PrimeField& Ring::field() const { return mImpl->field; }
int Ring::numVars() const { return static_cast<int>(mImpl->names.size()); }
const std::vector<std::string>& Ring::varNames() const { return mImpl->names; }

int Ring::varIndex(std::string_view name) const {
  for (std::size_t i = 0; i < mImpl->names.size(); ++i)
    if (mImpl->names[i] == name) return static_cast<int>(i);
  return -1;
}

bool Ring::isQuotient() const { return mImpl->ambient != nullptr; }
const std::vector<Poly>& Ring::quotientIdeal() const { return mImpl->ideal; }
const std::vector<Poly>& Ring::quotientBasis() const { return mImpl->idealBasis; }
Ring Ring::ambient() const { return mImpl->ambient ? Ring(mImpl->ambient) : *this; }

bool operator==(const Ring& a, const Ring& b) {
  if (a.mImpl == b.mImpl) return true;
  if (!a.mImpl || !b.mImpl) return false;
  return a.mImpl->field == b.mImpl->field && a.mImpl->names == b.mImpl->names &&
         a.mImpl->idealBasis == b.mImpl->idealBasis;
}

Poly Ring::one() const { return constant(1); }

Poly Ring::constant(std::int64_t c) const {
  Coef x = field().fromInteger(c);
  if (x == 0) return {};
  return Poly({Term{Monomial(numVars()), x}});
}

Poly Ring::variable(int index) const { return Poly({Term{Monomial::variable(index, numVars()), 1}}); }

Poly Ring::monomial(Coef c, const Monomial& m) const {
  if (c == 0) return {};
  return Poly({Term{m, c}});
}

Poly Ring::fromTerms(std::vector<Term> terms) const {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlexCompare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  for (const Term& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coef = field().add(out.back().coef, t.coef);
      if (out.back().coef == 0) out.pop_back();
    } else if (t.coef != 0) {
      out.push_back(t);
    }
  }
  return Poly(std::move(out));
}

namespace {
Poly merge(const PrimeField& k, const Poly& f, const Poly& g, Coef gScale) {
  const auto& x = f.terms();
  const auto& y = g.terms();
  std::vector<Term> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = grevlexCompare(x[i].mono, y[j].mono);
    if (c > 0) {
      out.push_back(x[i++]);
    } else if (c < 0) {
      out.push_back({y[j].mono, k.mul(y[j].coef, gScale)});
      ++j;
    } else {
      Coef s = k.add(x[i].coef, k.mul(y[j].coef, gScale));
      if (s != 0) out.push_back({x[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < x.size(); ++i) out.push_back(x[i]);
  for (; j < y.size(); ++j) out.push_back({y[j].mono, k.mul(y[j].coef, gScale)});
  return Poly(std::move(out));
}
}  // namespace

Poly Ring::add(const Poly& f, const Poly& g) const { return merge(field(), f, g, 1); }
Poly Ring::sub(const Poly& f, const Poly& g) const { return merge(field(), f, g, field().neg(1)); }
Poly Ring::neg(const Poly& f) const { return scale(f, field().neg(1)); }

Poly Ring::scale(const Poly& f, Coef c) const {
  if (c == 0) return {};
  std::vector<Term> t = f.terms();
  for (Term& x : t) x.coef = field().mul(x.coef, c);
  return Poly(std::move(t));
}

Poly Ring::mulTerm(const Poly& f, Coef c, const Monomial& m) const {
  if (c == 0) return {};
  std::vector<Term> t = f.terms();
  for (Term& x : t) {
    x.coef = field().mul(x.coef, c);
    x.mono = x.mono * m;
  }
  return Poly(std::move(t));
}

Poly Ring::mul(const Poly& f, const Poly& g) const {
  if (f.isZero() || g.isZero()) return {};
  std::vector<Term> t;
  t.reserve(f.size() * g.size());
  for (const Term& a : f.terms())
    for (const Term& b : g.terms()) t.push_back({a.mono * b.mono, field().mul(a.coef, b.coef)});
  return fromTerms(std::move(t));
}

Poly Ring::derivative(const Poly& f, int var) const {
  std::vector<Term> t;
  Monomial x = Monomial::variable(var, numVars());
  for (const Term& a : f.terms()) {
    int e = a.mono[var];
    if (e == 0) continue;
    t.push_back({a.mono / x, field().mul(a.coef, field().fromInteger(e))});
  }
  return fromTerms(std::move(t));
}

Poly Ring::reduce(const Poly& f) const {
  if (!isQuotient()) return f;
  return vec::reduceModQuotient(*this, Vec::fromPoly(f, 0)).entry(0);
}

namespace {

class PolyParser {
 public:
  PolyParser(const Ring& ring, std::string_view text) : mRing(ring), mText(text) {}

  Poly parse() {
    std::vector<Term> terms;
    skipSpace();
    if (atEnd()) throw ParseError("empty polynomial", mPos);
    bool first = true;
    while (!atEnd()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++mPos;
        skipSpace();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", mPos);
      }
      first = false;
      Term t = parseTerm();
      if (negative) t.coef = mRing.field().neg(t.coef);
      terms.push_back(t);
      skipSpace();
    }
    return mRing.fromTerms(std::move(terms));
  }

 private:
  Term parseTerm() {
    const PrimeField& k = mRing.field();
    Coef coef = 1;
    std::vector<int> exps(static_cast<std::size_t>(mRing.numVars()), 0);
    bool expectFactor = true;
    while (expectFactor) {
      skipSpace();
      if (atEnd()) throw ParseError("expected a factor", mPos);
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coef = k.mul(coef, k.fromInteger(parseInteger()));
      } else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
        std::size_t start = mPos;
        while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' || peek() == '\''))
          ++mPos;
        std::string name(mText.substr(start, mPos - start));
        int v = mRing.varIndex(name);
        if (v < 0) throw ParseError("unknown variable '" + name + "'", start);
        int power = 1;
        skipSpace();
        if (!atEnd() && peek() == '^') {
          ++mPos;
          skipSpace();
          if (atEnd() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an exponent", mPos);
          std::int64_t e = parseInteger();
          if (e > 0xFFFF) throw ParseError("exponent too large", mPos);
          power = static_cast<int>(e);
        }
        exps[static_cast<std::size_t>(v)] += power;
        if (exps[static_cast<std::size_t>(v)] > 0xFFFF) throw ParseError("exponent too large", mPos);
      } else {
        throw ParseError(std::string("unexpected character '") + peek() + "'", mPos);
      }
      skipSpace();
      expectFactor = !atEnd() && peek() == '*';
      if (expectFactor) ++mPos;
    }
    return {Monomial::fromExponents(exps), coef};
  }

  std::int64_t parseInteger() {
    std::int64_t v = 0;
    std::size_t start = mPos;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 40)) throw ParseError("integer literal too large", start);
      ++mPos;
    }
    return v;
  }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(peek()))) ++mPos;
  }
  bool atEnd() const { return mPos >= mText.size(); }
  char peek() const { return mText[mPos]; }

  const Ring& mRing;
  std::string_view mText;
  std::size_t mPos = 0;
};

}  // namespace

Poly Ring::parse(std::string_view text) const { return PolyParser(*this, text).parse(); }

std::string Ring::formatMonomial(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < numVars(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += mImpl->names[static_cast<std::size_t>(i)];
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Ring::format(const Poly& f) const {
  if (f.isZero()) return "0";
  std::string s;
  bool first = true;
  for (const Term& t : f.terms()) {
    std::int64_t c = field().toSigned(t.coef);
    if (c < 0) {
      s += "-";
      c = -c;
    } else if (!first) {
      s += "+";
    }
    first = false;
    if (t.mono.isOne()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += formatMonomial(t.mono);
    }
  }
  return s;
}

std::string Ring::description() const {
  std::ostringstream os;
  os << "ZZ/" << field().characteristic() << "[";
  for (std::size_t i = 0; i < mImpl->names.size(); ++i) os << (i ? "," : "") << mImpl->names[i];
  os << "]";
  if (isQuotient()) {
    os << "/(";
    for (std::size_t i = 0; i < mImpl->ideal.size(); ++i) os << (i ? ", " : "") << format(mImpl->ideal[i]);
    os << ")";
  }
  return os.str();
}

}  // namespace gext
