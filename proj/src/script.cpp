#include "gext/script.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>

#include "gext/homext.hpp"
#include "gext/sheafext.hpp"

namespace gext::script {

namespace {

std::string locate(Location w) { return "line " + std::to_string(w.line) + ", column " + std::to_string(w.column); }

/// Location of byte `offset` inside `item`.
Location offsetInto(const Item& item, std::size_t offset) {
  Location w = item.where;
  for (std::size_t i = 0; i < offset && i < item.text.size(); ++i) {
    if (item.text[i] == '\n') {
      ++w.line;
      w.column = 1;
    } else {
      ++w.column;
    }
  }
  return w;
}

bool isIdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool isIdentChar(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// ---------------------------------------------------------------------------
// parsing

/// What an expression evaluates to, as far as the parser can tell.
enum class Type { Int, List, Matrix, Ring, Ideal, Module, Map, Dimension, Betti, Extension, Scalar };

std::string typeName(Type t) {
  switch (t) {
    case Type::Int: return "an integer";
    case Type::List: return "a list";
    case Type::Matrix: return "a matrix";
    case Type::Ring: return "a ring";
    case Type::Ideal: return "an ideal";
    case Type::Module: return "a module";
    case Type::Map: return "a map";
    case Type::Dimension:
    case Type::Betti:
    case Type::Extension:
    case Type::Scalar: return "a command result";
  }
  return "a value";
}

struct Typed {
  Type type = Type::Int;
  std::string ring;  // bound ring name for rings, ideals, modules and maps
};

class Parser {
 public:
  Parser(std::string_view text, std::uint32_t defaultPrime) : mText(text), mDefaultPrime(defaultPrime) {}

  Script parse() {
    Script s;
    skipSpace();
    while (!atEnd()) {
      s.statements.push_back(statement());
      skipSpace();
    }
    return s;
  }

 private:
  struct RingInfo {
    Ring probe;  // polynomial ring with the same variables, for parsing
    bool quotient = false;
  };

  // --- characters

  bool atEnd() const { return mPos >= mText.size(); }
  char peek() const { return atEnd() ? '\0' : mText[mPos]; }
  Location here() const { return {mLine, mColumn}; }

  void advance() {
    if (mText[mPos] == '\n') {
      ++mLine;
      mColumn = 1;
    } else {
      ++mColumn;
    }
    ++mPos;
  }

  void skipSpace() {
    while (!atEnd()) {
      const char c = peek();
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '#' || (c == '-' && mPos + 1 < mText.size() && mText[mPos + 1] == '-')) {
        while (!atEnd() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(Location w, const std::string& msg) const { throw ScriptParseError(w, msg); }

  bool accept(char c) {
    skipSpace();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    skipSpace();
    if (atEnd()) fail(here(), std::string("expected '") + c + "' but the script ended");
    if (peek() != c) fail(here(), std::string("expected '") + c + "' but found '" + peek() + "'");
    advance();
  }

  std::string identifier() {
    skipSpace();
    if (!isIdentStart(peek())) fail(here(), atEnd() ? "expected an identifier but the script ended" : "expected an identifier");
    std::string out;
    while (!atEnd() && isIdentChar(peek())) {
      out += peek();
      advance();
    }
    return out;
  }

  std::int64_t integer() {
    skipSpace();
    const Location w = here();
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail(w, "expected an integer");
    std::int64_t v = 0;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > (std::int64_t{1} << 40)) fail(w, "integer literal too large");
      advance();
    }
    return negative ? -v : v;
  }

  /// Text up to the next ',' ']' or ')' outside parentheses, trimmed.
  Item rawItem() {
    skipSpace();
    Item item{"", here()};
    int depth = 0;
    while (!atEnd()) {
      const char c = peek();
      if (depth == 0 && (c == ',' || c == ']' || c == ')')) break;
      if (c == ';' || c == '[') break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      item.text += c;
      advance();
    }
    while (!item.text.empty() && std::isspace(static_cast<unsigned char>(item.text.back()))) item.text.pop_back();
    if (item.text.empty()) fail(item.where, "expected a list entry");
    return item;
  }

  std::vector<Item> rawList(char close) {
    std::vector<Item> items;
    if (accept(close)) return items;
    do {
      items.push_back(rawItem());
    } while (accept(','));
    expect(close);
    return items;
  }

  // --- statements

  Statement statement() {
    skipSpace();
    Statement s;
    s.where = here();
    const std::string keyword = identifier();
    if (keyword == "compute") {
      s.kind = Statement::Kind::Compute;
      s.expr = expr();
      const Typed t = check(s.expr);
      if (t.type == Type::Ring || t.type == Type::Ideal || t.type == Type::Map || t.type == Type::Int ||
          t.type == Type::List || t.type == Type::Matrix)
        fail(s.expr.where, "cannot compute " + typeName(t.type));
      expect(';');
      return s;
    }
    static const std::map<std::string, Statement::Kind> kinds{{"ring", Statement::Kind::Ring},
                                                              {"ideal", Statement::Kind::Ideal},
                                                              {"module", Statement::Kind::Module},
                                                              {"map", Statement::Kind::Map}};
    auto it = kinds.find(keyword);
    if (it == kinds.end()) fail(s.where, "unknown statement '" + keyword + "'");
    s.kind = it->second;
    skipSpace();
    const Location nameAt = here();
    s.name = identifier();
    if (s.name == "ZZ" || s.name == "kk") fail(nameAt, "'" + s.name + "' is reserved");
    if (mBound.count(s.name)) fail(nameAt, "'" + s.name + "' is already bound");
    expect('=');

    if (s.kind == Statement::Kind::Ring) {
      s.ring = ringSpec(s.name);
      mBound[s.name] = {Type::Ring, s.name};
    } else {
      s.expr = expr();
      const Typed t = check(s.expr);
      const Type want = s.kind == Statement::Kind::Ideal ? Type::Ideal : s.kind == Statement::Kind::Module ? Type::Module : Type::Map;
      if (t.type != want) fail(s.expr.where, "expected " + typeName(want) + ", got " + typeName(t.type));
      mBound[s.name] = t;
    }
    expect(';');
    return s;
  }

  RingSpec ringSpec(const std::string& name) {
    RingSpec spec;
    skipSpace();
    const Location at = here();
    const std::string head = identifier();
    RingInfo info;
    if (head == "ZZ" || head == "kk") {
      std::uint32_t p = mDefaultPrime;
      if (head == "ZZ") {
        expect('/');
        skipSpace();
        const Location pAt = here();
        const std::int64_t v = integer();
        if (v < 2 || v >= (std::int64_t{1} << 31) || !PrimeField::isPrime(static_cast<std::uint64_t>(v)))
          fail(pAt, std::to_string(v) + " is not a prime below 2^31");
        p = static_cast<std::uint32_t>(v);
      }
      spec.prime = p;
      expect('[');
      std::set<std::string> seen;
      do {
        skipSpace();
        const Location vAt = here();
        std::string v = identifier();
        if (!seen.insert(v).second) fail(vAt, "duplicate variable '" + v + "'");
        spec.variables.push_back(std::move(v));
      } while (accept(','));
      expect(']');
      try {
        info.probe = Ring::polynomial(p, spec.variables);
      } catch (const std::invalid_argument& e) {
        fail(at, e.what());
      }
    } else {
      auto it = mRings.find(head);
      if (it == mRings.end()) fail(at, mBound.count(head) ? "'" + head + "' is not a ring" : "unbound identifier '" + head + "'");
      if (it->second.quotient) fail(at, "'" + head + "' is already a quotient ring");
      spec.base = head;
      info.probe = it->second.probe;
    }

    skipSpace();
    if (accept('/')) {
      skipSpace();
      const Location qAt = here();
      if (accept('(')) {
        spec.ideal = rawList(')');
        for (const Item& item : spec.ideal) checkPoly(item, info.probe);
      } else {
        spec.idealName = identifier();
        auto b = mBound.find(spec.idealName);
        if (b == mBound.end()) fail(qAt, "unbound identifier '" + spec.idealName + "'");
        if (b->second.type != Type::Ideal) fail(qAt, "'" + spec.idealName + "' is not an ideal");
        if (spec.base.empty() || b->second.ring != spec.base)
          fail(qAt, "ideal '" + spec.idealName + "' does not live in the ring being divided");
      }
      info.quotient = true;
    } else if (!spec.base.empty()) {
      fail(here(), "expected '/' after the ring '" + spec.base + "'");
    }
    mRings[name] = info;
    return spec;
  }

  // --- expressions

  Expr expr() {
    skipSpace();
    Expr e;
    e.where = here();
    const char c = peek();
    if (c == '[') {
      advance();
      skipSpace();
      if (peek() == '[') {
        e.kind = Expr::Kind::Matrix;
        do {
          expect('[');
          e.rows.push_back(rawList(']'));
        } while (accept(','));
        expect(']');
      } else {
        e.kind = Expr::Kind::List;
        e.items = rawList(']');
      }
      return e;
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      e.kind = Expr::Kind::Integer;
      e.value = integer();
      return e;
    }
    if (!isIdentStart(c)) fail(e.where, atEnd() ? "expected an expression but the script ended" : "expected an expression");
    e.name = identifier();
    if (!accept('(')) {
      e.kind = Expr::Kind::Identifier;
      return e;
    }
    e.kind = Expr::Kind::Call;
    if (accept(')')) return e;
    do {
      skipSpace();
      const std::size_t save = mPos;
      const int saveLine = mLine;
      const int saveColumn = mColumn;
      if (isIdentStart(peek())) {
        std::string key = identifier();
        if (accept('=')) {
          e.keywords.emplace_back(std::move(key), expr());
          continue;
        }
        mPos = save;
        mLine = saveLine;
        mColumn = saveColumn;
      }
      if (!e.keywords.empty()) fail(here(), "positional argument after a keyword argument");
      e.args.push_back(expr());
    } while (accept(','));
    expect(')');
    return e;
  }

  void checkPoly(const Item& item, const Ring& probe) const {
    try {
      (void)probe.parse(item.text);
    } catch (const ParseError& err) {
      fail(offsetInto(item, err.position()), err.what());
    }
  }

  std::int64_t checkInt(const Item& item) const {
    const std::string& t = item.text;
    std::size_t i = t[0] == '-' ? 1 : 0;
    if (i == t.size() || !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        t.size() > 12)
      fail(item.where, "expected an integer, got '" + t + "'");
    return std::stoll(t);
  }

  const RingInfo& ringInfo(const std::string& name) const { return mRings.at(name); }

  Typed check(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Integer: return {Type::Int, ""};
      case Expr::Kind::List: return {Type::List, ""};
      case Expr::Kind::Matrix: {
        for (const auto& row : e.rows)
          if (row.size() != e.rows.front().size()) fail(e.where, "matrix rows have different lengths");
        return {Type::Matrix, ""};
      }
      case Expr::Kind::Identifier: {
        auto it = mBound.find(e.name);
        if (it == mBound.end()) fail(e.where, "unbound identifier '" + e.name + "'");
        return it->second;
      }
      case Expr::Kind::Call: return checkCall(e);
    }
    return {};
  }

  Typed checkCall(const Expr& e) {
    std::vector<Typed> args;
    for (const Expr& a : e.args) args.push_back(check(a));
    std::set<std::string> allowed;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi) {
        const std::string count = lo == hi ? std::to_string(lo) : std::to_string(lo) + " to " + std::to_string(hi);
        fail(e.where, e.name + " takes " + count + " argument" + (hi == 1 ? "" : "s") + ", got " + std::to_string(args.size()));
      }
    };
    auto want = [&](std::size_t i, Type t) -> const Typed& {
      if (args[i].type != t)
        fail(e.args[i].where, e.name + ": argument " + std::to_string(i + 1) + " must be " + typeName(t) + ", got " + typeName(args[i].type));
      return args[i];
    };
    auto sameRing = [&](std::size_t i, std::size_t j) {
      if (args[i].ring != args[j].ring)
        fail(e.args[j].where, e.name + ": arguments live over different rings ('" + args[i].ring + "' and '" + args[j].ring + "')");
    };
    auto keywords = [&](std::initializer_list<const char*> names) {
      for (const auto& [key, value] : e.keywords) {
        if (std::find_if(names.begin(), names.end(), [&](const char* n) { return key == n; }) == names.end())
          fail(value.where, e.name + ": unknown keyword '" + key + "'");
      }
    };
    auto keyword = [&](const std::string& key) -> const Expr* {
      for (const auto& [k, v] : e.keywords)
        if (k == key) return &v;
      return nullptr;
    };
    auto intList = [&](const Expr& x) {
      if (x.kind != Expr::Kind::List) fail(x.where, e.name + ": expected a list of integers");
      std::vector<std::int64_t> out;
      for (const Item& item : x.items) out.push_back(checkInt(item));
      return out;
    };
    auto polyMatrix = [&](const Expr& x, const std::string& ring) {
      if (x.kind == Expr::Kind::List && x.items.empty()) return std::size_t{0};
      if (x.kind != Expr::Kind::Matrix) fail(x.where, e.name + ": expected a matrix [[...], ...]");
      for (const auto& row : x.rows)
        for (const Item& item : row) checkPoly(item, ringInfo(ring).probe);
      return x.rows.size();
    };
    const std::string& f = e.name;
    if (f == "ideal") {
      arity(2, 2);
      keywords({});
      const std::string ring = want(0, Type::Ring).ring;
      if (e.args[1].kind != Expr::Kind::List) fail(e.args[1].where, "ideal: expected a list of polynomials");
      for (const Item& item : e.args[1].items) checkPoly(item, ringInfo(ring).probe);
      return {Type::Ideal, ring};
    }
    if (f == "coker") {
      if (args.size() == 1 && args[0].type == Type::Map) {
        keywords({});
        return {Type::Module, args[0].ring};
      }
      arity(2, 2);
      keywords({"degrees"});
      const std::string ring = want(0, Type::Ring).ring;
      const std::size_t rows = polyMatrix(e.args[1], ring);
      const Expr* degrees = keyword("degrees");
      if (degrees == nullptr) fail(e.where, "coker: generator degrees are required (degrees=[...])");
      const std::size_t n = intList(*degrees).size();
      if (rows != 0 && rows != n)
        fail(degrees->where, "coker: " + std::to_string(rows) + " matrix rows but " + std::to_string(n) + " degrees");
      return {Type::Module, ring};
    }
    if (f == "free") {
      arity(1, 2);
      keywords({});
      const std::string ring = want(0, Type::Ring).ring;
      if (args.size() == 2) intList(e.args[1]);
      return {Type::Module, ring};
    }
    if (f == "quotient") {
      arity(1, 1);
      keywords({});
      return {Type::Module, want(0, Type::Ideal).ring};
    }
    if (f == "cotangent") {
      arity(1, 1);
      keywords({});
      return {Type::Module, want(0, Type::Ring).ring};
    }
    if (f == "map") {
      arity(3, 3);
      keywords({"degree"});
      const std::string ring = want(0, Type::Module).ring;
      want(1, Type::Module);
      sameRing(0, 1);
      polyMatrix(e.args[2], ring);
      if (const Expr* d = keyword("degree"); d && d->kind != Expr::Kind::Integer) fail(d->where, "map: degree must be an integer");
      return {Type::Map, ring};
    }
    keywords({});

    struct Signature {
      std::vector<Type> params;
      std::size_t optional = 0;  // trailing optional parameters
      Type result;
    };
    static const std::map<std::string, Signature> table{
        {"truncate", {{Type::Int, Type::Module}, 0, Type::Module}},
        {"twist", {{Type::Module, Type::Int}, 0, Type::Module}},
        {"prune", {{Type::Module}, 0, Type::Module}},
        {"hom", {{Type::Module, Type::Module}, 0, Type::Module}},
        {"dual", {{Type::Module}, 0, Type::Module}},
        {"ext", {{Type::Int, Type::Module, Type::Module}, 0, Type::Module}},
        {"directSum", {{Type::Module, Type::Module}, 0, Type::Module}},
        {"kernel", {{Type::Map}, 0, Type::Module}},
        {"image", {{Type::Map}, 0, Type::Module}},
        {"globalExtSum", {{Type::Int, Type::Int, Type::Module, Type::Module}, 0, Type::Module}},
        {"sheafCohomologySum", {{Type::Int, Type::Int, Type::Module}, 0, Type::Module}},
        {"resolution", {{Type::Module, Type::Int}, 1, Type::Betti}},
        {"betti", {{Type::Module, Type::Int}, 1, Type::Betti}},
        {"globalExt", {{Type::Int, Type::Module, Type::Module}, 0, Type::Dimension}},
        {"sheafCohomology", {{Type::Int, Type::Module}, 0, Type::Dimension}},
        {"yonedaExt", {{Type::Module, Type::Module, Type::List}, 0, Type::Extension}},
        {"hilbert", {{Type::Module, Type::Int, Type::Int}, 0, Type::Scalar}},
        {"dim", {{Type::Module}, 0, Type::Scalar}},
        {"truncationBound", {{Type::Int, Type::Int, Type::Module}, 0, Type::Scalar}},
    };
    auto it = table.find(f);
    if (it == table.end()) fail(e.where, "unknown function '" + f + "'");
    const Signature& sig = it->second;
    arity(sig.params.size() - sig.optional, sig.params.size());
    std::string ring;
    std::optional<std::size_t> first;
    for (std::size_t i = 0; i < args.size(); ++i) {
      want(i, sig.params[i]);
      if (sig.params[i] == Type::Module || sig.params[i] == Type::Map) {
        if (first) sameRing(*first, i);
        else first = i;
        ring = args[i].ring;
      }
      if (sig.params[i] == Type::List) intList(e.args[i]);
    }
    return {sig.result, ring};
  }

  std::string_view mText;
  std::size_t mPos = 0;
  int mLine = 1;
  int mColumn = 1;
  std::uint32_t mDefaultPrime;
  std::map<std::string, Typed> mBound;
  std::map<std::string, RingInfo> mRings;
};

// ---------------------------------------------------------------------------
// evaluation

struct Ideal {
  Ring ring;
  std::vector<Poly> gens;
};

class Runner {
 public:
  std::vector<ResultRecord> run(const Script& script) {
    std::vector<ResultRecord> out;
    for (std::size_t i = 0; i < script.statements.size(); ++i) {
      const Statement& s = script.statements[i];
      try {
        execute(s, out);
      } catch (const ScriptRunError&) {
        throw;
      } catch (const std::exception& e) {
        throw ScriptRunError(i, s.where, e.what());
      }
    }
    return out;
  }

 private:
  void execute(const Statement& s, std::vector<ResultRecord>& out) {
    switch (s.kind) {
      case Statement::Kind::Ring: mRings[s.name] = buildRing(s.ring); break;
      case Statement::Kind::Ideal: mIdeals[s.name] = ideal(s.expr); break;
      case Statement::Kind::Module: mModules[s.name] = module(s.expr); break;
      case Statement::Kind::Map: mMaps[s.name] = map(s.expr); break;
      case Statement::Kind::Compute: out.push_back(command(s.expr)); break;
    }
  }

  Ring buildRing(const RingSpec& spec) {
    Ring base = spec.base.empty() ? Ring::polynomial(*spec.prime, spec.variables)
                                  : mRings.at(spec.base);
    if (!spec.idealName.empty()) return base.quotient(mIdeals.at(spec.idealName).gens);
    if (spec.ideal.empty()) return base;
    std::vector<Poly> gens;
    for (const Item& item : spec.ideal) gens.push_back(base.parse(item.text));
    return base.quotient(gens);
  }

  const Ring& ring(const Expr& e) { return mRings.at(e.name); }

  Ideal ideal(const Expr& e) {
    if (e.kind == Expr::Kind::Identifier) return mIdeals.at(e.name);
    Ideal out{ring(e.args[0]), {}};
    for (const Item& item : e.args[1].items) out.gens.push_back(out.ring.reduce(out.ring.parse(item.text)));
    return out;
  }

  static int smallInt(const Expr& e) {
    if (e.value < -1000000 || e.value > 1000000) throw std::invalid_argument("integer argument out of range");
    return static_cast<int>(e.value);
  }

  static std::vector<int> intList(const Expr& e) {
    std::vector<int> out;
    for (const Item& item : e.items) {
      const std::int64_t v = std::stoll(item.text);
      if (v < -1000000 || v > 1000000) throw std::invalid_argument("integer " + item.text + " out of range");
      out.push_back(static_cast<int>(v));
    }
    return out;
  }

  static std::vector<std::vector<Poly>> polyRows(const Ring& r, const Expr& e) {
    std::vector<std::vector<Poly>> rows;
    for (const auto& row : e.rows) {
      rows.emplace_back();
      for (const Item& item : row) rows.back().push_back(r.reduce(r.parse(item.text)));
    }
    return rows;
  }

  GradedModule module(const Expr& e) {
    if (e.kind == Expr::Kind::Identifier) return mModules.at(e.name);
    const std::string& f = e.name;
    const auto& a = e.args;
    if (f == "coker") {
      if (a.size() == 1) return cokernelOf(map(a[0]));
      const Ring& r = ring(a[0]);
      FreeModule target(r, intList(e.keywords.front().second));
      std::vector<std::vector<Poly>> rows = polyRows(r, a[1]);
      if (rows.empty()) return GradedModule::free(target);
      std::vector<std::vector<Poly>> kept(rows.size());
      for (std::size_t j = 0; j < rows.front().size(); ++j) {
        const bool zero = std::all_of(rows.begin(), rows.end(), [&](const auto& row) { return row[j].isZero(); });
        if (zero) continue;
        for (std::size_t i = 0; i < rows.size(); ++i) kept[i].push_back(rows[i][j]);
      }
      return GradedModule(GradedMatrix::fromRows(target, kept));
    }
    if (f == "free") return GradedModule::free(FreeModule(ring(a[0]), a.size() == 2 ? intList(a[1]) : std::vector<int>{0}));
    if (f == "quotient") {
      Ideal i = ideal(a[0]);
      return GradedModule(GradedMatrix::fromRows(FreeModule(i.ring, {0}), {i.gens}));
    }
    if (f == "cotangent") return cotangentModule(ring(a[0]));
    if (f == "truncate") return truncate(module(a[1]), smallInt(a[0]));
    if (f == "twist") return twist(module(a[0]), smallInt(a[1]));
    if (f == "prune") return prune(module(a[0]));
    if (f == "hom") return homModule(module(a[0]), module(a[1])).module;
    if (f == "dual") {
      GradedModule m = module(a[0]);
      return homModule(m, GradedModule::ringModule(m.ring())).module;
    }
    if (f == "ext") return extModule(smallInt(a[0]), module(a[1]), module(a[2]));
    if (f == "directSum") return directSum(module(a[0]), module(a[1]));
    if (f == "kernel") return kernelOf(map(a[0])).module;
    if (f == "image") return imageOf(map(a[0])).module;
    if (f == "globalExtSum") return globalExtSum(smallInt(a[0]), smallInt(a[1]), module(a[2]), module(a[3]));
    if (f == "sheafCohomologySum") return sheafCohomologySum(smallInt(a[0]), smallInt(a[1]), module(a[2]));
    throw std::logic_error("not a module expression: " + f);
  }

  static GradedModule cokernelOf(const ModuleMap& f) {
    const GradedModule& target = f.target();
    std::vector<Vec> cols = target.presentation().columns();
    std::vector<int> degs = target.presentation().source().degrees();
    for (std::size_t j = 0; j < f.images().size(); ++j) {
      Vec v = target.reduce(f.images()[j]);
      if (v.isZero()) continue;
      cols.push_back(std::move(v));
      degs.push_back(f.source().generatorDegrees()[j] + f.degree());
    }
    return GradedModule(GradedMatrix(FreeModule(target.ring(), degs), target.cover(), cols));
  }

  ModuleMap map(const Expr& e) {
    if (e.kind == Expr::Kind::Identifier) return mMaps.at(e.name);
    GradedModule target = module(e.args[0]);
    GradedModule source = module(e.args[1]);
    const int degree = e.keywords.empty() ? 0 : smallInt(e.keywords.front().second);
    std::vector<std::vector<Poly>> rows = polyRows(target.ring(), e.args[2]);
    const std::size_t nrows = static_cast<std::size_t>(target.numGenerators());
    const std::size_t ncols = static_cast<std::size_t>(source.numGenerators());
    if (rows.size() != nrows || (nrows > 0 && rows.front().size() != ncols))
      throw std::invalid_argument("map: expected a " + std::to_string(nrows) + "x" + std::to_string(ncols) + " matrix");
    std::vector<Vec> images(ncols);
    for (std::size_t j = 0; j < ncols; ++j)
      for (std::size_t i = 0; i < nrows; ++i)
        images[j] = vec::add(target.ring().field(), images[j], Vec::fromPoly(rows[i][j], static_cast<std::uint32_t>(i)));
    return ModuleMap(source, target, images, degree);
  }

  ResultRecord command(const Expr& e) {
    ResultRecord r;
    r.command = formatExpr(e);
    const std::string& f = e.kind == Expr::Kind::Call ? e.name : std::string();
    const auto& a = e.args;
    if (f == "resolution" || f == "betti") {
      std::optional<int> cap;
      if (a.size() == 2) cap = smallInt(a[1]);
      r.kind = RecordKind::Betti;
      r.payload = bettiStats(freeResolution(module(a[0]), cap));
    } else if (f == "globalExt") {
      r.kind = RecordKind::Dimension;
      r.payload = globalExt(smallInt(a[0]), module(a[1]), module(a[2])).dimension();
    } else if (f == "sheafCohomology") {
      r.kind = RecordKind::Dimension;
      r.payload = sheafCohomology(smallInt(a[0]), module(a[1])).dimension();
    } else if (f == "yonedaExt") {
      r.kind = RecordKind::Extension;
      r.payload = yoneda(module(a[0]), module(a[1]), a[2]);
    } else if (f == "hilbert") {
      GradedModule m = module(a[0]);
      std::ostringstream s;
      for (int d = smallInt(a[1]); d <= smallInt(a[2]); ++d) s << (d == smallInt(a[1]) ? "" : " ") << hilbertFunction(m, d);
      r.kind = RecordKind::Scalar;
      r.payload = s.str();
    } else if (f == "dim") {
      r.kind = RecordKind::Scalar;
      r.payload = krullDim(module(a[0])).toString();
    } else if (f == "truncationBound") {
      r.kind = RecordKind::Scalar;
      r.payload = truncationBound(smallInt(a[0]), smallInt(a[1]), module(a[2])).r.toString();
    } else {
      r.kind = RecordKind::Module;
      r.payload = module(e);
    }
    return r;
  }

  /// Coordinates are taken in the monomial basis of Hom(K, N)_0, in the
  /// order gradedComponent lists it; an empty list is the split extension.
  static ExtensionPayload yoneda(const GradedModule& source, const GradedModule& target, const Expr& coords) {
    ExtensionSetup setup = extensionSetup(source, target);
    GradedComponent basis = gradedComponent(setup.homToTarget.module, 0);
    std::vector<int> c = intList(coords);
    if (c.empty()) c.assign(basis.dimension(), 0);
    if (c.size() != basis.dimension())
      throw std::invalid_argument("yonedaExt: Hom(K, N)_0 has dimension " + std::to_string(basis.dimension()) + ", got " +
                                  std::to_string(c.size()) + " coordinates");
    const PrimeField& k = source.ring().field();
    std::vector<VecTerm> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Coef v = k.fromInteger(c[i]);
      if (v != 0) terms.push_back({basis.basis[i].mono, v, basis.basis[i].comp});
    }
    ExtensionResult ext = yonedaExtension(setup, vec::canonicalize(k, std::move(terms)));
    return {ext.extension, ext.verified, ext.classIsZero, ext.thetaDegree};
  }

  std::map<std::string, Ring> mRings;
  std::map<std::string, Ideal> mIdeals;
  std::map<std::string, GradedModule> mModules;
  std::map<std::string, ModuleMap> mMaps;
};

// ---------------------------------------------------------------------------
// output

const char* kindName(RecordKind k) {
  switch (k) {
    case RecordKind::Module: return "module";
    case RecordKind::Dimension: return "dimension";
    case RecordKind::Betti: return "betti";
    case RecordKind::Extension: return "extension";
    case RecordKind::Scalar: return "scalar";
  }
  return "";
}

RecordKind kindFromName(const std::string& s) {
  for (RecordKind k : {RecordKind::Module, RecordKind::Dimension, RecordKind::Betti, RecordKind::Extension, RecordKind::Scalar})
    if (s == kindName(k)) return k;
  throw std::invalid_argument("unknown record kind '" + s + "'");
}

std::string resolutionText(const BettiTable& t) {
  if (t.entries().empty()) return "0";
  std::ostringstream out;
  const int pd = t.projectiveDimension().value();
  for (int i = 0; i <= pd; ++i) {
    out << (i ? "\n" : "") << "F" << i << ": {";
    bool first = true;
    for (const auto& [key, count] : t.entries()) {
      if (key.first != i) continue;
      for (int c = 0; c < count; ++c) {
        out << (first ? "" : ",") << key.second;
        first = false;
      }
    }
    out << "}";
  }
  return out.str();
}

}  // namespace

ScriptParseError::ScriptParseError(Location where, const std::string& message)
    : std::runtime_error(locate(where) + ": " + message), mWhere(where), mMessage(message) {}

ScriptRunError::ScriptRunError(std::size_t index, Location where, const std::string& message)
    : std::runtime_error("statement " + std::to_string(index + 1) + " (" + locate(where) + "): " + message), mIndex(index) {}

Script parseScript(std::string_view text, std::uint32_t defaultPrime) {
  if (defaultPrime < 2 || defaultPrime >= (1u << 31) || !PrimeField::isPrime(defaultPrime))
    throw ScriptParseError({1, 1}, std::to_string(defaultPrime) + " is not a prime below 2^31");
  return Parser(text, defaultPrime).parse();
}

std::string formatExpr(const Expr& e) {
  auto items = [](const std::vector<Item>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].text;
    return s + "]";
  };
  switch (e.kind) {
    case Expr::Kind::Integer: return std::to_string(e.value);
    case Expr::Kind::Identifier: return e.name;
    case Expr::Kind::List: return items(e.items);
    case Expr::Kind::Matrix: {
      std::string s = "[";
      for (std::size_t i = 0; i < e.rows.size(); ++i) s += (i ? ", " : "") + items(e.rows[i]);
      return s + "]";
    }
    case Expr::Kind::Call: {
      std::string s = e.name + "(";
      bool first = true;
      for (const Expr& a : e.args) {
        s += (first ? "" : ", ") + formatExpr(a);
        first = false;
      }
      for (const auto& [key, value] : e.keywords) {
        s += (first ? "" : ", ") + key + "=" + formatExpr(value);
        first = false;
      }
      return s + ")";
    }
  }
  return "";
}

std::vector<ResultRecord> runScript(const Script& script) { return Runner().run(script); }

std::string toText(const ResultRecord& r) {
  std::string body;
  switch (r.kind) {
    case RecordKind::Module: body = std::get<GradedModule>(r.payload).toString(); break;
    case RecordKind::Dimension: {
      const std::size_t d = std::get<std::size_t>(r.payload);
      body = d == 0 ? "0" : "kk^" + std::to_string(d);
      break;
    }
    case RecordKind::Betti: {
      const auto& t = std::get<BettiTable>(r.payload);
      body = r.command.rfind("resolution", 0) == 0 ? resolutionText(t) : t.toString();
      break;
    }
    case RecordKind::Extension: {
      const auto& x = std::get<ExtensionPayload>(r.payload);
      std::ostringstream s;
      s << x.extension.toString() << "\nverified: " << std::boolalpha << x.verified[0] << ' ' << x.verified[1] << ' '
        << x.verified[2] << "\nclass: " << (x.classIsZero ? "zero" : "nonzero") << "\ntheta degree: " << x.thetaDegree;
      body = s.str();
      break;
    }
    case RecordKind::Scalar: body = std::get<std::string>(r.payload); break;
  }
  return "-- " + r.command + "\n" + body + "\n";
}

std::string toText(const std::vector<ResultRecord>& records) {
  std::string out;
  for (std::size_t i = 0; i < records.size(); ++i) out += (i ? "\n" : "") + toText(records[i]);
  return out;
}

nlohmann::json moduleToJson(const GradedModule& m) {
  const Ring& r = m.ring();
  nlohmann::json ideal = nlohmann::json::array();
  if (r.isQuotient())
    for (const Poly& g : r.quotientIdeal()) ideal.push_back(r.format(g));
  nlohmann::json relations = nlohmann::json::array();
  for (int j = 0; j < m.numRelations(); ++j) {
    nlohmann::json col = nlohmann::json::array();
    for (int i = 0; i < m.numGenerators(); ++i)
      col.push_back(r.format(m.presentation().entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j))));
    relations.push_back(std::move(col));
  }
  nlohmann::json hilbert = nlohmann::json::object();
  if (m.numGenerators() > 0) {
    const int lo = *std::min_element(m.generatorDegrees().begin(), m.generatorDegrees().end());
    for (int d = lo; d <= lo + 5; ++d) hilbert[std::to_string(d)] = hilbertFunction(m, d);
  }
  return {{"ring", {{"characteristic", r.field().characteristic()}, {"variables", r.varNames()}, {"ideal", ideal}}},
          {"generators", m.generatorDegrees()},
          {"relationDegrees", m.presentation().source().degrees()},
          {"relations", relations},
          {"hilbert", hilbert}};
}

GradedModule moduleFromJson(const nlohmann::json& j) {
  const auto& rj = j.at("ring");
  Ring r = Ring::polynomial(rj.at("characteristic").get<std::uint32_t>(), rj.at("variables").get<std::vector<std::string>>());
  std::vector<Poly> ideal;
  for (const auto& g : rj.at("ideal")) ideal.push_back(r.parse(g.get<std::string>()));
  if (!ideal.empty()) r = r.quotient(ideal);
  FreeModule target(r, j.at("generators").get<std::vector<int>>());
  FreeModule source(r, j.at("relationDegrees").get<std::vector<int>>());
  std::vector<Vec> cols;
  for (const auto& col : j.at("relations")) {
    if (col.size() != static_cast<std::size_t>(target.rank())) throw std::invalid_argument("relation column has the wrong length");
    Vec v;
    for (std::size_t i = 0; i < col.size(); ++i)
      v = vec::add(r.field(), v, Vec::fromPoly(r.parse(col[i].get<std::string>()), static_cast<std::uint32_t>(i)));
    cols.push_back(std::move(v));
  }
  return GradedModule(GradedMatrix(source, target, cols));
}

nlohmann::json toJson(const ResultRecord& r) {
  nlohmann::json j{{"command", r.command}, {"kind", kindName(r.kind)}};
  switch (r.kind) {
    case RecordKind::Module: j["module"] = moduleToJson(std::get<GradedModule>(r.payload)); break;
    case RecordKind::Dimension: j["dimension"] = std::get<std::size_t>(r.payload); break;
    case RecordKind::Betti: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& [key, count] : std::get<BettiTable>(r.payload).entries()) rows.push_back({key.first, key.second, count});
      j["betti"] = rows;
      break;
    }
    case RecordKind::Extension: {
      const auto& x = std::get<ExtensionPayload>(r.payload);
      j["module"] = moduleToJson(x.extension);
      j["verified"] = x.verified;
      j["classIsZero"] = x.classIsZero;
      j["thetaDegree"] = x.thetaDegree;
      break;
    }
    case RecordKind::Scalar: j["value"] = std::get<std::string>(r.payload); break;
  }
  return j;
}

nlohmann::json toJson(const std::vector<ResultRecord>& records) {
  nlohmann::json results = nlohmann::json::array();
  for (const ResultRecord& r : records) results.push_back(toJson(r));
  return {{"results", results}};
}

ResultRecord recordFromJson(const nlohmann::json& j) {
  ResultRecord r;
  r.command = j.at("command").get<std::string>();
  r.kind = kindFromName(j.at("kind").get<std::string>());
  switch (r.kind) {
    case RecordKind::Module: r.payload = moduleFromJson(j.at("module")); break;
    case RecordKind::Dimension: r.payload = j.at("dimension").get<std::size_t>(); break;
    case RecordKind::Betti: {
      std::map<std::pair<int, int>, int> entries;
      for (const auto& row : j.at("betti")) entries[{row.at(0).get<int>(), row.at(1).get<int>()}] = row.at(2).get<int>();
      r.payload = BettiTable::fromEntries(entries);
      break;
    }
    case RecordKind::Extension:
      r.payload = ExtensionPayload{moduleFromJson(j.at("module")), j.at("verified").get<std::array<bool, 3>>(),
                                   j.at("classIsZero").get<bool>(), j.at("thetaDegree").get<int>()};
      break;
    case RecordKind::Scalar: r.payload = j.at("value").get<std::string>(); break;
  }
  return r;
}

std::vector<ResultRecord> recordsFromJson(const nlohmann::json& j) {
  std::vector<ResultRecord> out;
  for (const auto& r : j.at("results")) out.push_back(recordFromJson(r));
  return out;
}

}  // namespace gext::script
