#pragma once

// Cofinality, regularization, mu-closedness, lambda^{<mu} and the
// accessibility ordering, each relative to a HypothesisContext where the
// answer is not a ZFC theorem.

#include "aleph/hypotheses.hpp"
#include "aleph/ordinal.hpp"
#include "aleph/verdict.hpp"

namespace aleph {

struct Regular {};
struct Singular {
  CardinalExpr cofinality;
};
using RegularityTag = std::variant<Regular, Singular>;

CardinalExpr cofinality(const CardinalExpr& c);
bool is_regular(const CardinalExpr& c);
RegularityTag regularity(const CardinalExpr& c);

// The least regular cardinal >= c.
CardinalExpr lambda_r(const CardinalExpr& c);
// c^+ for successor cardinals, c for limit cardinals.
CardinalExpr lambda_star(const CardinalExpr& c);
CardinalExpr successor(const CardinalExpr& c);

// c = d^+ with cf(d) < mu.
bool is_small_cofinality_successor(const CardinalExpr& c, const CardinalExpr& mu);

Verdict<CardinalExpr> two_lt(const CardinalExpr& mu, const HypothesisContext& ctx);

Verdict<bool> is_almost_mu_closed(const CardinalExpr& lam, const CardinalExpr& mu, const HypothesisContext& ctx);
Verdict<bool> is_mu_closed(const CardinalExpr& lam, const CardinalExpr& mu, const HypothesisContext& ctx);

// lambda^{<mu}.
Verdict<CardinalExpr> exp_lt(const CardinalExpr& lam, const CardinalExpr& mu, const HypothesisContext& ctx);

// mu <| lam (or mu = lam).
Verdict<bool> triangle(const CardinalExpr& mu, const CardinalExpr& lam, const HypothesisContext& ctx);

// Throws unless mu is regular.
void require_regular(const CardinalExpr& mu, const char* what = "mu");

}  // namespace aleph
