#include "aleph/cardinal_arith.hpp"

#include "aleph/error.hpp"

namespace aleph {

CardinalExpr cofinality(const CardinalExpr& c) {
  if (c.is_atom()) {
    if (c.atom_info().weakly_inaccessible) return c;
    throw Error("unclassified atom " + c.atom_info().name);
  }
  const IndexOrdinal& idx = c.index();
  if (idx.is_zero()) return CardinalExpr{};
  switch (ord_classify(idx.tail()).kind) {
    case OrdinalClass::Successor:
      return c;
    case OrdinalClass::Limit:
      // Every CNF tail is a countable ordinal, so a limit tail has cofinality w.
      return CardinalExpr{};
    case OrdinalClass::Zero:
      break;
  }
  // cf(aleph_kappa) = cf(kappa) for the initial ordinal kappa.
  return cofinality(*idx.base());
}

bool is_regular(const CardinalExpr& c) { return cofinality(c) == c; }

RegularityTag regularity(const CardinalExpr& c) {
  CardinalExpr cf = cofinality(c);
  if (cf == c) return Regular{};
  return Singular{std::move(cf)};
}

CardinalExpr successor(const CardinalExpr& c) {
  if (c.is_atom()) throw Error("the successor of atom " + c.atom_info().name + " is not representable");
  const IndexOrdinal& idx = c.index();
  CnfOrdinal tail = cnf_add(idx.tail(), CnfOrdinal::natural(1));
  return idx.base() ? CardinalExpr::aleph(*idx.base(), std::move(tail)) : CardinalExpr::aleph(std::move(tail));
}

CardinalExpr lambda_r(const CardinalExpr& c) { return is_regular(c) ? c : successor(c); }

CardinalExpr lambda_star(const CardinalExpr& c) {
  if (c.is_atom()) throw Error("lambda_star is undefined on atom " + c.atom_info().name);
  return card_index_classify(c).kind == CardinalClass::SuccessorCard ? successor(c) : c;
}

bool is_small_cofinality_successor(const CardinalExpr& c, const CardinalExpr& mu) {
  if (c.is_atom()) return false;
  CardinalClass cls = card_index_classify(c);
  return cls.kind == CardinalClass::SuccessorCard && cofinality(*cls.pred) < mu;
}

void require_regular(const CardinalExpr& mu, const char* what) {
  if (!is_regular(mu)) throw Error(std::string(what) + " must be regular, got " + to_string(mu));
}

namespace {

void require_at_least(const CardinalExpr& lam, const CardinalExpr& mu) {
  if (lam < mu) throw Error(to_string(lam) + " is below mu = " + to_string(mu));
}

template <class T, class U>
Verdict<T> with_extra_basis(Verdict<T> v, const Verdict<U>& extra) {
  if (!v.determined()) return v;
  Basis b = v.basis();
  merge_basis(b, extra.basis());
  return determined(v.value(), std::move(b));
}

}  // namespace

Verdict<CardinalExpr> two_lt(const CardinalExpr& mu, const HypothesisContext& ctx) {
  if (mu.is_aleph0()) return determined(mu);
  if (ctx.gch()) return determined(mu, {ctx.gch_label()});
  return independent("value of 2^<" + to_string(mu) + " (GCH)");
}

Verdict<bool> is_mu_closed(const CardinalExpr& lam, const CardinalExpr& mu, const HypothesisContext& ctx) {
  require_regular(mu);
  require_at_least(lam, mu);
  if (mu.is_aleph0()) return determined(true);
  // lam = d^+ with cf(d) < mu gives d^{<mu} >= d^{cf d} > d, i.e. >= lam.
  if (is_small_cofinality_successor(lam, mu)) return determined(false);
  Verdict<bool> sch = ctx_implies_sch_unbounded(ctx, mu, lam);
  if (sch.determined()) return sch;
  return Independent{sch.missing()};
}

Verdict<bool> is_almost_mu_closed(const CardinalExpr& lam, const CardinalExpr& mu, const HypothesisContext& ctx) {
  require_regular(mu);
  require_at_least(lam, mu);
  Verdict<bool> closed = is_mu_closed(lam, mu, ctx);
  if (closed.is(true)) return closed;
  return ctx_implies_sch(ctx, mu, lam);
}

Verdict<CardinalExpr> exp_lt(const CardinalExpr& lam, const CardinalExpr& mu, const HypothesisContext& ctx) {
  require_regular(mu);
  if (mu.is_aleph0()) return determined(lam);
  // For 2 <= lam < mu, lam^{<mu} = 2^{<mu}.
  if (lam < mu) return two_lt(mu, ctx);

  if (!(cofinality(lam) < mu)) {
    // lam^{<mu} is the least almost mu-closed cardinal >= lam.
    Verdict<bool> sch = ctx_implies_sch(ctx, mu, lam);
    if (sch.determined()) return determined(lam, sch.basis());
    return independent("SCH(" + to_string(mu) + ") at " + to_string(lam));
  }
  // lam^{<mu} is the least almost mu-closed cardinal > lam.
  const CardinalExpr next = successor(lam);
  Verdict<bool> sch = ctx_implies_sch(ctx, mu, next);
  if (sch.determined()) return determined(next, sch.basis());
  return independent("SCH(" + to_string(mu) + ") at {" + to_string(lam) + ", " + to_string(next) + "}");
}

Verdict<bool> triangle(const CardinalExpr& mu, const CardinalExpr& lam, const HypothesisContext& ctx) {
  require_regular(mu);
  require_regular(lam, "lambda");
  require_at_least(lam, mu);
  if (mu == lam) return determined(true);

  Verdict<bool> closed = is_mu_closed(lam, mu, ctx);
  if (closed.is(true)) return closed;
  if (closed.independent()) return closed;

  // Converse direction: above 2^{<mu}, mu <| lam forces lam to be mu-closed.
  Verdict<CardinalExpr> two = two_lt(mu, ctx);
  if (!two.determined()) return Independent{two.missing()};
  if (two.value() < lam) return with_extra_basis(determined(false, closed.basis()), two);
  return independent("mu <| lambda with lambda <= 2^<mu (" + to_string(lam) + " <= " + to_string(two.value()) + ")");
}

}  // namespace aleph
