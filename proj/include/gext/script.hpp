#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gext/resolution.hpp"
#include "gext/module.hpp"
#include "json.hpp"

namespace gext::script {

// Script language, one statement per ';':
//
//   ring S = ZZ/32003[w,x,y,z];          -- kk[...] uses the default prime
//   ring R = S / (x^3+y^3-z^3);          -- or S / I for a bound ideal
//   ideal I = ideal(S, [x*y-w*z, y^3-x*z^2]);
//   module N = coker(S, [[x, y], [z, 0]], degrees=[0, 1]);
//   module M2 = truncate(2, M);
//   map f = map(N, M, [[x], [y]], degree=1);
//   compute globalExtSum(1, 0, M, N);
//
// Module expressions: coker, free, quotient, truncate, twist, prune, hom,
// dual, ext, cotangent, directSum, kernel, image, globalExtSum,
// sheafCohomologySum. Commands: any module expression, resolution, betti,
// globalExt, sheafCohomology, yonedaExt, hilbert, dim, truncationBound.

constexpr std::uint32_t kDefaultPrime = 32003;

struct Location {
  int line = 1;
  int column = 1;
  friend bool operator==(const Location&, const Location&) = default;
};

class ScriptParseError : public std::runtime_error {
 public:
  ScriptParseError(Location where, const std::string& message);
  Location where() const { return mWhere; }
  const std::string& message() const { return mMessage; }

 private:
  Location mWhere;
  std::string mMessage;
};

/// A failure while executing statement `index` (0-based).
class ScriptRunError : public std::runtime_error {
 public:
  ScriptRunError(std::size_t index, Location where, const std::string& message);
  std::size_t index() const { return mIndex; }

 private:
  std::size_t mIndex;
};

/// Raw text of a list item; polynomials are parsed against their ring.
struct Item {
  std::string text;
  Location where;
};

struct Expr {
  enum class Kind { Integer, Identifier, List, Matrix, Call };
  Kind kind = Kind::Integer;
  Location where;
  std::int64_t value = 0;
  std::string name;  // identifier or callee
  std::vector<Item> items;
  std::vector<std::vector<Item>> rows;
  std::vector<Expr> args;
  std::vector<std::pair<std::string, Expr>> keywords;
};

struct RingSpec {
  std::optional<std::uint32_t> prime;  // set for ZZ/p[...] and kk[...]
  std::vector<std::string> variables;  // new polynomial ring
  std::string base;                    // or a bound ring
  std::vector<Item> ideal;             // quotient by these
  std::string idealName;               // or by a bound ideal
};

struct Statement {
  enum class Kind { Ring, Ideal, Module, Map, Compute };
  Kind kind = Kind::Compute;
  Location where;
  std::string name;
  RingSpec ring;
  Expr expr;
};

struct Script {
  std::vector<Statement> statements;
};

/// Checks syntax, that every identifier is bound to the right kind of value
/// before use, that moduli are prime and that polynomials parse over their
/// ring. `defaultPrime` is used for rings written kk[...].
Script parseScript(std::string_view text, std::uint32_t defaultPrime = kDefaultPrime);

/// Canonical text of an expression, used as the command echo.
std::string formatExpr(const Expr& e);

struct ExtensionPayload {
  GradedModule extension;
  std::array<bool, 3> verified{};
  bool classIsZero = false;
  int thetaDegree = 0;
};

enum class RecordKind { Module, Dimension, Betti, Extension, Scalar };

struct ResultRecord {
  RecordKind kind = RecordKind::Scalar;
  std::string command;
  std::variant<GradedModule, std::size_t, BettiTable, ExtensionPayload, std::string> payload;
};

std::vector<ResultRecord> runScript(const Script& script);

std::string toText(const ResultRecord& r);
std::string toText(const std::vector<ResultRecord>& records);

/// Module presentation with its ring and a Hilbert function window; the
/// window is recomputed on read.
nlohmann::json moduleToJson(const GradedModule& m);
GradedModule moduleFromJson(const nlohmann::json& j);

nlohmann::json toJson(const ResultRecord& r);
nlohmann::json toJson(const std::vector<ResultRecord>& records);
ResultRecord recordFromJson(const nlohmann::json& j);
std::vector<ResultRecord> recordsFromJson(const nlohmann::json& j);

}  // namespace gext::script
