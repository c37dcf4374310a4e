#include "aleph/spectra.hpp"

#include "aleph/cardinal_arith.hpp"
#include "aleph/error.hpp"

namespace aleph {

CountReport hilbert_count_by_cardinality(const CardinalExpr& lam, const HypothesisContext& ctx) {
  if (lam.is_aleph0()) throw Error("Hilbert space cardinalities are uncountable");
  const CardinalExpr cf = cofinality(lam);
  if (!ctx.gch()) {
    return {count::Undetermined{"count is |beta|+1 where lambda^aleph(0) = aleph(alpha+beta) with alpha least; "
                                "needs the continuum function (GCH)"},
            {}};
  }
  // A basis of size kappa gives cardinality kappa^aleph_0, which under GCH is
  // kappa or kappa^+ according to cf(kappa).
  const Basis basis{ctx.gch_label()};
  if (cf.is_aleph0()) return {count::Zero{}, basis};
  if (!lam.is_atom()) {
    CardinalClass cls = card_index_classify(lam);
    if (cls.kind == CardinalClass::SuccessorCard && cofinality(*cls.pred).is_aleph0()) return {count::Finite{2}, basis};
  }
  return {count::Finite{1}, basis};
}

CountReport hilbert_count_by_internal_size(const CardinalExpr&) { return {count::Finite{1}, {}}; }

CardinalExpr wellorder_internal_size(const IndexOrdinal& alpha, const CardinalExpr& lam_param) {
  if (const CardinalExpr* base = alpha.base(); base && !lam_param.is_atom()) {
    const CardinalExpr top = successor(lam_param);
    const bool inside = alpha.tail().is_zero() ? !(top < *base) : *base < top;
    if (!inside) throw Error("ordinal " + to_string(alpha) + " is outside class (type above " + to_string(top) + ")");
  }
  if (alpha.base() && alpha.tail().is_zero()) return cofinality(*alpha.base());
  return CardinalExpr{};
}

namespace {

void check_shelah_args(const CardinalExpr& mu, const CardinalExpr& lam) {
  require_regular(mu);
  if (lam < mu) throw Error(to_string(lam) + " is below mu = " + to_string(mu));
}

CountValue constructible_branch(const CardinalExpr& mu, const CardinalExpr& lam) {
  if (cofinality(lam) < mu) return count::Finite{1};
  return count::Card{successor(lam)};
}

CountValue sharp_branch(const CardinalExpr& lam) { return count::Card{successor(lam)}; }

CountValue no_sharp_branch(const CardinalExpr& mu, const CardinalExpr& lam) {
  ContextFlags f;
  f.zero_sharp = ZeroSharp::NotExists;
  const CardinalInterval cf_l = l_cofinality(lam, ctx_build(f)).value();
  if (cf_l.hi < mu) return count::Finite{1};
  if (!(cf_l.lo < mu)) {
    if (cofinality(lam) < lam) return count::Card{successor(lam)};
    return count::AtLeastCard{lam};
  }
  return count::Undetermined{"cf(" + to_string(lam) + ")^L relative to mu = " + to_string(mu) +
                             " (V=L, or mu >= aleph(2))"};
}

std::string describe(const CountValue& v) {
  if (const auto* x = std::get_if<count::Finite>(&v)) return std::to_string(x->n);
  if (const auto* x = std::get_if<count::Card>(&v)) return to_string(x->value);
  if (const auto* x = std::get_if<count::AtLeastCard>(&v)) return ">= " + to_string(x->value);
  if (std::holds_alternative<count::Zero>(v)) return "0";
  return "undetermined";
}

}  // namespace

CountReport shelah_count_by_cardinality(const CardinalExpr& mu, const CardinalExpr& lam, const HypothesisContext& ctx) {
  check_shelah_args(mu, lam);
  if (ctx.v_equals_l()) return {constructible_branch(mu, lam), {"V=L"}};
  switch (ctx.zero_sharp()) {
    case ZeroSharp::Exists:
      return {sharp_branch(lam), {"sharp"}};
    case ZeroSharp::NotExists:
      return {no_sharp_branch(mu, lam), {"no-sharp"}};
    case ZeroSharp::Unknown:
      break;
  }
  // Both branches agreeing on an exact count settles it by cases.
  CountValue with = sharp_branch(lam);
  CountValue without = no_sharp_branch(mu, lam);
  if (with == without) return {with, {}};
  return {count::Undetermined{"status of 0#: " + describe(with) + " if 0# exists, " + describe(without) +
                              " if 0# does not exist"},
          {}};
}

CountReport shelah_count_by_internal_size(const CardinalExpr& mu, const CardinalExpr& lam,
                                          const HypothesisContext& ctx) {
  check_shelah_args(mu, lam);
  if (is_regular(lam)) return {count::AtLeastCard{successor(lam)}, {}};
  Verdict<bool> closed = is_mu_closed(lam, mu, ctx);
  if (closed.is(true)) return {count::AtLeastCard{successor(lam)}, closed.basis()};
  Verdict<bool> sch = ctx_implies_sch_unbounded(ctx, mu, lam);
  if (sch.is(true)) return {count::AtLeastCard{successor(lam)}, sch.basis()};
  std::string reason = to_string(lam) + " is singular and not known to be " + to_string(mu) + "-closed";
  for (const auto& m : sch.missing()) reason += "; missing " + m;
  return {count::Undetermined{std::move(reason)}, {}};
}

}  // namespace aleph
