#include "aleph/hypotheses.hpp"

#include <algorithm>

#include "aleph/cardinal_arith.hpp"
#include "aleph/error.hpp"

namespace aleph {

namespace {

void validate(const SchAssumption& a) {
  const auto below_mu = [&](const CardinalExpr& c) { return c < a.mu; };
  bool bad = false;
  if (const auto* s = std::get_if<AtLeast>(&a.scope)) bad = below_mu(s->theta);
  if (const auto* s = std::get_if<UnboundedBelow>(&a.scope)) bad = !(a.mu < s->lambda);
  if (const auto* s = std::get_if<ExplicitSet>(&a.scope)) {
    bad = s->cards.empty() || std::any_of(s->cards.begin(), s->cards.end(), below_mu);
  }
  if (bad) throw Error("SCH scope must lie at or above mu in " + to_string(a));
}

SchAssumption normalized(SchAssumption a) {
  if (auto* s = std::get_if<ExplicitSet>(&a.scope)) {
    std::sort(s->cards.begin(), s->cards.end());
    s->cards.erase(std::unique(s->cards.begin(), s->cards.end()), s->cards.end());
  }
  return a;
}

bool scope_contains(const SchScope& scope, const CardinalExpr& card) {
  if (const auto* s = std::get_if<AtLeast>(&scope)) return !(card < s->theta);
  if (const auto* s = std::get_if<ExplicitSet>(&scope))
    return std::find(s->cards.begin(), s->cards.end(), card) != s->cards.end();

  // SCH_{mu,lambda} pins down exactly two points: lambda itself when it is a
  // limit (it is then mu-closed), and lambda0 when lambda = lambda0^+.
  const auto& lam = std::get<UnboundedBelow>(scope).lambda;
  CardinalClass cls = card_index_classify(lam);
  if (cls.kind == CardinalClass::SuccessorCard) return *cls.pred == card;
  return lam == card;
}

void check_pair(const CardinalExpr& mu, const CardinalExpr& card) {
  require_regular(mu);
  if (card < mu) throw Error(to_string(card) + " is below mu = " + to_string(mu));
}

}  // namespace

HypothesisContext ctx_build(const ContextFlags& flags, const std::vector<SchAssumption>& sch) {
  if (flags.v_equals_l && flags.zero_sharp == ZeroSharp::Exists) throw Error("inconsistent context: V=L and 0# exists");

  HypothesisContext ctx;
  ctx.flags_ = flags;
  if (flags.v_equals_l) {
    ctx.flags_.gch = true;
    ctx.flags_.zero_sharp = ZeroSharp::NotExists;
  }
  for (const SchAssumption& raw : sch) {
    require_regular(raw.mu, "SCH level");
    validate(raw);
    SchAssumption a = normalized(raw);
    if (std::find(ctx.sch_.begin(), ctx.sch_.end(), a) == ctx.sch_.end()) ctx.sch_.push_back(std::move(a));
  }
  return ctx;
}

std::string HypothesisContext::gch_label() const { return flags_.v_equals_l ? "V=L" : "GCH"; }

std::string HypothesisContext::zero_sharp_label() const {
  if (flags_.v_equals_l) return "V=L";
  switch (flags_.zero_sharp) {
    case ZeroSharp::Exists:
      return "sharp";
    case ZeroSharp::NotExists:
      return "no-sharp";
    case ZeroSharp::Unknown:
      break;
  }
  return "";
}

HypothesisContext HypothesisContext::with_flags(const ContextFlags& extra) const {
  ContextFlags f = flags_;
  f.gch = f.gch || extra.gch;
  f.v_equals_l = f.v_equals_l || extra.v_equals_l;
  if (extra.zero_sharp != ZeroSharp::Unknown) {
    if (f.zero_sharp != ZeroSharp::Unknown && f.zero_sharp != extra.zero_sharp)
      throw Error("inconsistent context: conflicting 0# declarations");
    f.zero_sharp = extra.zero_sharp;
  }
  return ctx_build(f, sch_);
}

HypothesisContext HypothesisContext::with_sch(const SchAssumption& extra) const {
  std::vector<SchAssumption> s = sch_;
  s.push_back(extra);
  return ctx_build(flags_, s);
}

std::string to_string(const SchAssumption& a) {
  std::string out = "SCH(" + to_string(a.mu) + ", ";
  if (const auto* s = std::get_if<AtLeast>(&a.scope)) out += ">= " + to_string(s->theta);
  if (const auto* s = std::get_if<UnboundedBelow>(&a.scope)) out += "< " + to_string(s->lambda);
  if (const auto* s = std::get_if<ExplicitSet>(&a.scope)) {
    out += "{";
    for (std::size_t i = 0; i < s->cards.size(); ++i) out += (i ? ", " : "") + to_string(s->cards[i]);
    out += "}";
  }
  return out + ")";
}

std::string to_string(const HypothesisContext& ctx) {
  std::vector<std::string> parts;
  if (ctx.v_equals_l()) {
    parts.push_back("V=L");
  } else {
    if (ctx.gch()) parts.push_back("GCH");
    if (ctx.zero_sharp() != ZeroSharp::Unknown) parts.push_back(ctx.zero_sharp_label());
  }
  for (const auto& a : ctx.sch_assumptions()) parts.push_back(to_string(a));
  if (parts.empty()) return "ZFC";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? ", " : "") + parts[i];
  return out;
}

Verdict<bool> ctx_implies_sch(const HypothesisContext& ctx, const CardinalExpr& mu, const CardinalExpr& card) {
  check_pair(mu, card);
  // theta^{<omega} = theta for infinite theta.
  if (mu.is_aleph0()) return determined(true);
  if (ctx.gch()) return determined(true, {ctx.gch_label()});
  // Almost mu'-closed implies almost mu-closed for mu <= mu'.
  for (const SchAssumption& a : ctx.sch_assumptions()) {
    if (a.mu < mu) continue;
    if (scope_contains(a.scope, card)) return determined(true, {to_string(a)});
  }
  return independent("SCH(" + to_string(mu) + ") at " + to_string(card));
}

Verdict<bool> ctx_implies_sch_unbounded(const HypothesisContext& ctx, const CardinalExpr& mu,
                                        const CardinalExpr& lambda) {
  check_pair(mu, lambda);
  if (mu.is_aleph0()) return determined(true);
  if (ctx.gch()) return determined(true, {ctx.gch_label()});

  const std::string missing = "SCH(" + to_string(mu) + ") unboundedly below " + to_string(lambda);
  CardinalClass cls = card_index_classify(lambda);
  if (cls.kind == CardinalClass::SuccessorCard) {
    if (*cls.pred < mu) return independent(missing);
    Verdict<bool> v = ctx_implies_sch(ctx, mu, *cls.pred);
    if (v.determined()) return v;
    return independent(missing);
  }
  for (const SchAssumption& a : ctx.sch_assumptions()) {
    if (a.mu < mu) continue;
    if (const auto* s = std::get_if<AtLeast>(&a.scope); s && s->theta < lambda) return determined(true, {to_string(a)});
    if (const auto* s = std::get_if<UnboundedBelow>(&a.scope); s && s->lambda == lambda)
      return determined(true, {to_string(a)});
  }
  return independent(missing);
}

Verdict<CardinalInterval> l_cofinality(const CardinalExpr& lam, const HypothesisContext& ctx) {
  const CardinalExpr cf = cofinality(lam);
  // cf(lam) <= cf^L(lam) <= lam always.
  if (cf == lam) return determined(CardinalInterval{lam, lam});
  if (ctx.v_equals_l()) return determined(CardinalInterval{cf, cf}, {"V=L"});
  switch (ctx.zero_sharp()) {
    case ZeroSharp::Exists:
      // Every uncountable cardinal is inaccessible in L.
      return determined(CardinalInterval{lam, lam}, {"sharp"});
    case ZeroSharp::NotExists: {
      // Covering: cf^L(lam) <= cf(lam) + aleph_1.
      const CardinalExpr hi = min_card(lam, max_card(cf, CardinalExpr::aleph(1)));
      return determined(CardinalInterval{cf, hi}, {"no-sharp"});
    }
    case ZeroSharp::Unknown:
      break;
  }
  return independent("status of 0# (assume sharp, no-sharp or V=L)");
}

}  // namespace aleph
