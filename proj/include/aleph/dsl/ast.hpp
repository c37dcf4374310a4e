#pragma once

// Syntax tree of the query language and its canonical rendering.
//
//   stmt     := 'assume' assumption | arg
//   arg      := index | IDENT '(' [arg {',' arg}] ')' | IDENT
//   index    := term {'+' term}
//   term     := 'w' ['^' expo] ['*' NAT] | NAT | cardinal
//   expo     := NAT | 'w' | '(' index ')'
//   cardinal := 'aleph' '(' index ')' | aleph_N | aleph_w
//             | 'inacc' '(' IDENT [',' NAT] ')' | 'atom' '(' IDENT [',' NAT] ')'
//   assumption := 'GCH' | 'V=L' | 'sharp' | 'no-sharp'
//               | 'SCH' '(' cardinal ',' ('>=' cardinal | '<' cardinal | '{' cardinal {',' cardinal} '}') ')'

#include <string>
#include <variant>
#include <vector>

#include "aleph/hypotheses.hpp"
#include "aleph/ordinal.hpp"

namespace aleph::dsl {

enum class FlagAssumption { Gch, VEqualsL, Sharp, NoSharp };

using Assumption = std::variant<FlagAssumption, SchAssumption>;

struct Ast;

struct CardinalLiteral {
  CardinalExpr value;
  friend bool operator==(const CardinalLiteral&, const CardinalLiteral&) = default;
};

// An index ordinal that is not itself an initial ordinal (those parse as
// CardinalLiteral).
struct OrdinalLiteral {
  IndexOrdinal value;
  friend bool operator==(const OrdinalLiteral&, const OrdinalLiteral&) = default;
};

// A bare identifier, used for query flags such as `intersections`.
struct Symbol {
  std::string name;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

struct Query {
  std::string name;
  std::vector<Ast> args;
};

struct Assume {
  Assumption assumption;
  friend bool operator==(const Assume&, const Assume&) = default;
};

struct Session {
  std::vector<Ast> items;
};

struct Ast {
  std::variant<CardinalLiteral, OrdinalLiteral, Symbol, Query, Assume, Session> node;
};

bool operator==(const Query& a, const Query& b);
bool operator==(const Session& a, const Session& b);
bool operator==(const Ast& a, const Ast& b);

std::string format(const Ast& ast);
std::string format(const Assumption& a);

}  // namespace aleph::dsl
