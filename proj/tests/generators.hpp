#pragma once

// Random generators for property tests: cardinals (including nested bases
// and atoms), index ordinals, and canonical query-language syntax trees.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "aleph/dsl/ast.hpp"
#include "aleph/ordinal.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline aleph::CnfOrdinal cnf(Rng& rng, int depth = 2) {
  using aleph::CnfOrdinal;
  CnfOrdinal acc;
  // Build from the top exponent down so every step is a genuine append.
  const int terms = uniform(rng, 0, 3);
  std::vector<CnfOrdinal> exps;
  for (int i = 0; i < terms; ++i) {
    if (depth > 0 && uniform(rng, 0, 5) == 0) {
      exps.push_back(cnf(rng, depth - 1));
    } else {
      exps.push_back(CnfOrdinal::natural(static_cast<std::uint64_t>(uniform(rng, 0, 4))));
    }
  }
  std::sort(exps.begin(), exps.end(), [](const auto& a, const auto& b) { return b < a; });
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  for (const auto& e : exps)
    acc = aleph::cnf_add(acc, CnfOrdinal::omega_power(e, static_cast<std::uint64_t>(uniform(rng, 1, 5))));
  return acc;
}

inline aleph::CardinalExpr atom(Rng& rng) {
  static const std::vector<std::string> names = {"theta", "kappa", "iota", "x", "big_1"};
  const std::string& name = names[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1))];
  return aleph::CardinalExpr::atom(name, uniform(rng, 0, 3) != 0, static_cast<std::uint32_t>(uniform(rng, 0, 2)));
}

// A non-atom cardinal, possibly with a nested uncountable base.
inline aleph::CardinalExpr aleph_card(Rng& rng, int depth = 2) {
  using aleph::CardinalExpr;
  if (depth > 0 && uniform(rng, 0, 3) == 0) {
    CardinalExpr base = aleph_card(rng, depth - 1);
    if (base.is_aleph0()) base = CardinalExpr::aleph(1);
    return CardinalExpr::aleph(base, cnf(rng));
  }
  return CardinalExpr::aleph(cnf(rng));
}

inline aleph::CardinalExpr card(Rng& rng, bool allow_atoms = true) {
  if (allow_atoms && uniform(rng, 0, 7) == 0) return atom(rng);
  return aleph_card(rng);
}

// An index ordinal that is not a bare initial ordinal.
inline aleph::IndexOrdinal ordinal(Rng& rng) {
  if (uniform(rng, 0, 1) == 0) return aleph::IndexOrdinal(cnf(rng));
  aleph::CardinalExpr base = aleph_card(rng, 1);
  if (base.is_aleph0()) base = aleph::CardinalExpr::aleph(2);
  aleph::CnfOrdinal tail = cnf(rng);
  if (tail.is_zero()) tail = aleph::CnfOrdinal::natural(1);
  return aleph::IndexOrdinal(base, tail);
}

inline std::string identifier(Rng& rng) {
  static const std::vector<std::string> names = {"cf", "exp_lt", "internal_size", "gap", "f", "query_2", "intersections",
                                                  "bounded", "Foo", "_x"};
  return names[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(names.size()) - 1))];
}

inline aleph::dsl::Ast argument(Rng& rng, int depth) {
  using namespace aleph::dsl;
  switch (uniform(rng, 0, depth > 0 ? 4 : 2)) {
    case 0:
      return Ast{CardinalLiteral{card(rng)}};
    case 1:
      return Ast{OrdinalLiteral{ordinal(rng)}};
    case 2:
      return Ast{Symbol{identifier(rng)}};
    default: {
      Query q{identifier(rng), {}};
      const int n = uniform(rng, 0, 3);
      for (int i = 0; i < n; ++i) q.args.push_back(argument(rng, depth - 1));
      return Ast{std::move(q)};
    }
  }
}

inline aleph::dsl::Assumption assumption(Rng& rng) {
  using namespace aleph::dsl;
  const int k = uniform(rng, 0, 6);
  if (k < 4) return static_cast<FlagAssumption>(k);
  aleph::CardinalExpr mu = card(rng);
  aleph::SchScope scope;
  if (k == 4) scope = aleph::AtLeast{card(rng)};
  if (k == 5) scope = aleph::UnboundedBelow{card(rng)};
  if (k == 6) {
    aleph::ExplicitSet s;
    const int n = uniform(rng, 1, 3);
    for (int i = 0; i < n; ++i) s.cards.push_back(card(rng));
    scope = s;
  }
  return aleph::SchAssumption{mu, scope};
}

inline aleph::dsl::Ast statement(Rng& rng) {
  using namespace aleph::dsl;
  if (uniform(rng, 0, 4) == 0) return Ast{Assume{assumption(rng)}};
  return argument(rng, 3);
}

// A canonical tree: a single statement or a session of at least two.
inline aleph::dsl::Ast ast(Rng& rng) {
  using namespace aleph::dsl;
  if (uniform(rng, 0, 3) != 0) return statement(rng);
  Session s;
  const int n = uniform(rng, 2, 4);
  for (int i = 0; i < n; ++i) s.items.push_back(statement(rng));
  return Ast{std::move(s)};
}

}  // namespace gen
