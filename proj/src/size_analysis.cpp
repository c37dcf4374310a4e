#include "aleph/size_analysis.hpp"

#include <vector>

#include "aleph/cardinal_arith.hpp"
#include "aleph/error.hpp"

namespace aleph {

void validate(const ClassParams& params, const HypothesisContext& ctx) {
  require_regular(params.mu);
  if (params.ls < params.mu) throw Error("LS(K) = " + to_string(params.ls) + " is below mu");
  // By Koenig, ls^{<mu} > ls whenever cf(ls) < mu.
  if (cofinality(params.ls) < params.mu)
    throw Error("LS(K) = " + to_string(params.ls) + " violates LS(K) = LS(K)^<mu (cofinality below mu)");
  Verdict<CardinalExpr> e = exp_lt(params.ls, params.mu, ctx);
  if (e.determined() && e.value() != params.ls) throw Error("LS(K) violates LS(K) = LS(K)^<mu");
}

namespace {

std::string succ_text(const CardinalExpr& c) {
  return c.is_atom() ? to_string(c) + "^+" : to_string(successor(c));
}

void require_above_ls(const ClassParams& params, const CardinalExpr& lam) {
  if (!(params.ls < lam)) throw Error(to_string(lam) + " must exceed LS(K) = " + to_string(params.ls));
}

// Regular cardinals in (ls, lam] worth testing for certified mu-closedness:
// the points named by declared SCH scopes, their successors, and lam's
// predecessor.
std::vector<CardinalExpr> lower_bound_candidates(const ClassParams& params, const CardinalExpr& lam,
                                                 const HypothesisContext& ctx) {
  std::vector<CardinalExpr> points;
  auto add = [&](const CardinalExpr& c) {
    points.push_back(c);
    if (!c.is_atom()) points.push_back(successor(c));
  };
  for (const SchAssumption& a : ctx.sch_assumptions()) {
    if (const auto* s = std::get_if<AtLeast>(&a.scope)) add(s->theta);
    if (const auto* s = std::get_if<UnboundedBelow>(&a.scope)) add(s->lambda);
    if (const auto* s = std::get_if<ExplicitSet>(&a.scope))
      for (const auto& c : s->cards) add(c);
  }
  CardinalClass cls = lam.is_atom() ? CardinalClass{} : card_index_classify(lam);
  if (cls.kind == CardinalClass::SuccessorCard) points.push_back(*cls.pred);

  std::vector<CardinalExpr> out;
  for (const auto& c : points) {
    if (!(params.ls < c) || lam < c) continue;
    if (c.is_atom() && !c.atom_info().weakly_inaccessible) continue;
    if (is_regular(c)) out.push_back(c);
  }
  return out;
}

}  // namespace

SizeReport internal_size_of_cardinality(const ClassParams& params, const CardinalExpr& lam,
                                        const HypothesisContext& ctx) {
  validate(params, ctx);
  if (!(params.ls < lam)) return {size::BelowLS{params.ls}, {}, "<= " + succ_text(params.ls)};

  Verdict<bool> closed = is_mu_closed(lam, params.mu, ctx);
  if (closed.is(true)) return {size::Exact{lam}, closed.basis(), succ_text(lam)};

  if (is_small_cofinality_successor(lam, params.mu)) {
    Verdict<bool> sch = ctx_implies_sch_unbounded(ctx, params.mu, lam);
    if (sch.is(true)) {
      CardinalExpr lo = *card_index_classify(lam).pred;
      std::string rank = succ_text(lo) + " or " + succ_text(lam);
      return {size::TwoCandidates{std::move(lo), lam}, sch.basis(), std::move(rank)};
    }
  }

  // ZFC bounds: |M|_K > LS(K) since |U M| > LS(K), and |M|_K >= lambda0 for
  // every regular mu-closed lambda0 in (LS(K), lam].
  std::optional<CardinalExpr> lo;
  Basis basis;
  if (!params.ls.is_atom()) lo = successor(params.ls);
  for (const CardinalExpr& c : lower_bound_candidates(params, lam, ctx)) {
    if (lo && !(*lo < c)) continue;
    Verdict<bool> v = is_mu_closed(c, params.mu, ctx);
    if (v.is(true)) {
      lo = c;
      basis = v.basis();
    }
  }
  if (!lo) return {size::Undetermined{"no lower bound above LS(K) is representable"}, {}, ""};
  if (*lo == lam) return {size::Exact{lam}, basis, succ_text(lam)};
  return {size::Interval{*lo, lam, false}, basis, ""};
}

CardinalExpr colimit_presentability_bound(const CardinalExpr& index_size, const CardinalExpr& sup_component_pres) {
  if (index_size.is_atom() || sup_component_pres.is_atom())
    throw Error("colimit presentability bound is not defined on atoms");
  return lambda_r(max_card(successor(index_size), sup_component_pres));
}

ExistenceWindow existence_window(const CardinalExpr& mu, const CardinalExpr& lam, const HypothesisContext& ctx) {
  require_regular(mu);
  require_regular(lam, "lambda");
  if (lam < mu) throw Error(to_string(lam) + " is below mu = " + to_string(mu));
  return ExistenceWindow{lam, exp_lt(lam, mu, ctx)};
}

Verdict<bool> rank_excluded_at(const CardinalExpr& theta, const CardinalExpr& mu, const HypothesisContext& ctx) {
  const bool limit_regular = theta.is_aleph0() || (theta.is_atom() && theta.atom_info().weakly_inaccessible);
  if (!limit_regular) throw Error(to_string(theta) + " is not a limit regular cardinal");
  require_regular(mu);
  if (theta < mu) throw Error(to_string(theta) + " is below mu = " + to_string(mu));
  if (mu.is_aleph0()) return determined(true);
  Verdict<bool> closed = is_mu_closed(theta, mu, ctx);
  if (closed.is(true)) return closed;
  if (closed.independent()) return closed;
  return independent(to_string(theta) + " is " + to_string(mu) + "-closed");
}

Verdict<bool> no_model_of_internal_size(const ClassParams& params, const CardinalExpr& lam,
                                        const SpectrumFacts& facts, const HypothesisContext& ctx) {
  validate(params, ctx);
  require_above_ls(params, lam);
  Verdict<CardinalExpr> e = exp_lt(lam, params.mu, ctx);
  if (!e.determined()) return Independent{e.missing()};
  const CardinalExpr& top = e.value();
  if (top == lam) throw Error("rule inapplicable: lambda = lambda^<mu");

  std::vector<std::string> missing;
  const auto& gap = facts.no_models_in_cardinality_interval;
  if (!gap || lam < gap->first || gap->second < top)
    missing.push_back("no models with cardinality in [" + to_string(lam) + ", " + to_string(top) + ")");
  if (facts.categorical_in_cardinality != top) missing.push_back("categoricity in cardinality " + to_string(top));
  if (!missing.empty()) return Independent{std::move(missing)};
  return determined(true, e.basis());
}

Verdict<bool> existence_at(const ClassParams& params, const CardinalExpr& lam, const HypothesisContext& ctx) {
  validate(params, ctx);
  require_above_ls(params, lam);
  if (!params.arbitrarily_large_models) throw Error("existence_at requires arbitrarily large models");

  // Regular internal sizes always exist in classes admitting intersections.
  if (is_regular(lam) && params.admits_intersections) return determined(true);

  std::vector<std::string> missing;
  Verdict<CardinalExpr> e = exp_lt(lam, params.mu, ctx);
  const bool closed_under_lt = e.is(lam);
  // Regular lam: lam <= |M|_K <= lam^{<mu} = lam.
  if (is_regular(lam) && closed_under_lt) return determined(true, e.basis());

  Verdict<bool> sch = ctx_implies_sch_unbounded(ctx, params.mu, lam);
  if (sch.is(true)) {
    if (params.admits_intersections) return sch;
    if (closed_under_lt) {
      Basis b = sch.basis();
      merge_basis(b, e.basis());
      return determined(true, std::move(b));
    }
  }
  for (const auto& m : sch.missing()) missing.push_back(m);
  if (e.independent()) {
    for (const auto& m : e.missing()) missing.push_back(m);
  } else if (!closed_under_lt && !params.admits_intersections) {
    missing.push_back("a model of internal size " + to_string(lam) + " (lambda^<mu = " + to_string(e.value()) +
                      " and K does not admit intersections)");
  }
  if (missing.empty()) missing.push_back("SCH(" + to_string(params.mu) + ") unboundedly below " + to_string(lam));
  return Independent{std::move(missing)};
}

}  // namespace aleph
