#include "aleph/dsl/eval.hpp"

#include <functional>
#include <map>
#include <set>

#include "json.hpp"

#include "aleph/cardinal_arith.hpp"
#include "aleph/error.hpp"
#include "aleph/size_analysis.hpp"
#include "aleph/spectra.hpp"

namespace aleph::dsl {

std::string to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Determined:
      return "determined";
    case VerdictKind::Independent:
      return "independent";
    case VerdictKind::Error:
      return "error";
  }
  return "";
}

HypothesisContext extend(const HypothesisContext& ctx, const Assumption& a) {
  if (const auto* s = std::get_if<SchAssumption>(&a)) return ctx.with_sch(*s);
  ContextFlags f;
  switch (std::get<FlagAssumption>(a)) {
    case FlagAssumption::Gch:
      f.gch = true;
      break;
    case FlagAssumption::VEqualsL:
      f.v_equals_l = true;
      break;
    case FlagAssumption::Sharp:
      f.zero_sharp = ZeroSharp::Exists;
      break;
    case FlagAssumption::NoSharp:
      f.zero_sharp = ZeroSharp::NotExists;
      break;
  }
  return ctx.with_flags(f);
}

namespace {

struct Outcome {
  VerdictKind kind = VerdictKind::Determined;
  std::optional<std::string> value;
  Basis basis;
  std::vector<std::string> notes;
  std::optional<CardinalExpr> card;  // set when the value is a cardinal
};

Outcome missing_outcome(const std::vector<std::string>& missing) {
  Outcome o;
  o.kind = VerdictKind::Independent;
  for (const auto& m : missing) o.notes.push_back("missing: " + m);
  return o;
}

Outcome of_card(const CardinalExpr& c, Basis basis = {}) {
  Outcome o;
  o.value = to_string(c);
  o.card = c;
  o.basis = std::move(basis);
  return o;
}

Outcome of_bool(bool b, Basis basis = {}) {
  Outcome o;
  o.value = b ? "true" : "false";
  o.basis = std::move(basis);
  return o;
}

Outcome of(const Verdict<bool>& v) { return v.determined() ? of_bool(v.value(), v.basis()) : missing_outcome(v.missing()); }

Outcome of(const Verdict<CardinalExpr>& v) {
  return v.determined() ? of_card(v.value(), v.basis()) : missing_outcome(v.missing());
}

Outcome of(const Verdict<CardinalInterval>& v) {
  if (!v.determined()) return missing_outcome(v.missing());
  const CardinalInterval& i = v.value();
  if (i.exact()) return of_card(i.lo, v.basis());
  Outcome o;
  o.value = "[" + to_string(i.lo) + ", " + to_string(i.hi) + "]";
  o.basis = v.basis();
  return o;
}

Outcome of(const SizeReport& r) {
  Outcome o;
  o.basis = r.basis;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, size::BelowLS>) {
          o.value = "<= " + to_string(x.ls);
        } else if constexpr (std::is_same_v<T, size::Exact>) {
          o.value = to_string(x.value);
          o.card = x.value;
        } else if constexpr (std::is_same_v<T, size::TwoCandidates>) {
          o.value = "{" + to_string(x.lo) + ", " + to_string(x.hi) + "}";
        } else if constexpr (std::is_same_v<T, size::Interval>) {
          o.value = "[" + to_string(x.lo) + ", " + to_string(x.hi) + "]";
        } else {
          o = missing_outcome({x.reason});
        }
      },
      r.verdict);
  if (!r.rank.empty()) o.notes.push_back("rank: " + r.rank);
  return o;
}

Outcome of(const CountReport& r) {
  Outcome o;
  o.basis = r.basis;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, count::Finite>) {
          o.value = std::to_string(x.n);
        } else if constexpr (std::is_same_v<T, count::Card>) {
          o.value = to_string(x.value);
        } else if constexpr (std::is_same_v<T, count::AtLeastCard>) {
          o.value = ">= " + to_string(x.value);
        } else if constexpr (std::is_same_v<T, count::Zero>) {
          o.value = "0";
        } else {
          o = missing_outcome({x.reason});
        }
      },
      r.value);
  return o;
}

Outcome evaluate(const Query& q, const HypothesisContext& ctx);

bool is_option_node(const Ast& a) {
  if (std::holds_alternative<Symbol>(a.node)) return true;
  if (const auto* q = std::get_if<Query>(&a.node)) return q->name == "gap" || q->name == "categorical";
  return false;
}

// Argument access for one query: positional arguments, flags and options.
class Call {
 public:
  Call(const Query& q, const HypothesisContext& ctx) : q_(q), ctx_(ctx) {
    for (const Ast& a : q.args) {
      if (is_option_node(a)) {
        options_.push_back(&a);
      } else {
        if (!options_.empty()) throw Error("positional argument after options in " + q.name);
        positional_.push_back(&a);
      }
    }
  }

  void arity(std::size_t n) const {
    if (positional_.size() != n)
      throw Error(q_.name + " expects " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                  std::to_string(positional_.size()));
  }

  void allow(std::initializer_list<const char*> names) {
    allowed_.insert(names.begin(), names.end());
    check_options();
  }

  void check_options() const {
    for (const Ast* a : options_) {
      const std::string name = option_name(*a);
      if (!allowed_.count(name)) throw Error("unknown option '" + name + "' for " + q_.name);
    }
  }

  bool flag(const char* name) const {
    for (const Ast* a : options_)
      if (const auto* s = std::get_if<Symbol>(&a->node); s && s->name == name) return true;
    return false;
  }

  const Query* option(const char* name) const {
    for (const Ast* a : options_)
      if (const auto* q = std::get_if<Query>(&a->node); q && q->name == name) return q;
    return nullptr;
  }

  CardinalExpr card(std::size_t i) { return card_of(*positional_.at(i)); }

  IndexOrdinal ordinal(std::size_t i) {
    const Ast& a = *positional_.at(i);
    if (const auto* o = std::get_if<OrdinalLiteral>(&a.node)) return o->value;
    return IndexOrdinal(card_of(a));
  }

  CardinalExpr card_of(const Ast& a) {
    if (const auto* c = std::get_if<CardinalLiteral>(&a.node)) return c->value;
    if (const auto* q = std::get_if<Query>(&a.node)) {
      Outcome inner = evaluate(*q, ctx_);
      if (inner.kind != VerdictKind::Determined) throw Error("argument " + format(a) + " is not determined");
      if (!inner.card) throw Error("argument " + format(a) + " does not denote a cardinal");
      merge_basis(nested_basis_, inner.basis);
      return *inner.card;
    }
    throw Error("expected a cardinal, got " + format(a));
  }

  const HypothesisContext& ctx() const { return ctx_; }
  const Basis& nested_basis() const { return nested_basis_; }

 private:
  static std::string option_name(const Ast& a) {
    if (const auto* s = std::get_if<Symbol>(&a.node)) return s->name;
    return std::get<Query>(a.node).name;
  }

  const Query& q_;
  const HypothesisContext& ctx_;
  std::vector<const Ast*> positional_;
  std::vector<const Ast*> options_;
  std::set<std::string> allowed_;
  Basis nested_basis_;
};

ClassParams class_params(Call& c) {
  ClassParams p;
  p.mu = c.card(0);
  p.ls = c.card(1);
  p.admits_intersections = c.flag("intersections");
  p.arbitrarily_large_models = !c.flag("bounded");
  return p;
}

using Handler = std::function<Outcome(Call&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table = {
      {"cf",
       [](Call& c) {
         c.arity(1);
         return of_card(cofinality(c.card(0)));
       }},
      {"reg",
       [](Call& c) {
         c.arity(1);
         return of_bool(is_regular(c.card(0)));
       }},
      {"succ",
       [](Call& c) {
         c.arity(1);
         return of_card(successor(c.card(0)));
       }},
      {"lambda_r",
       [](Call& c) {
         c.arity(1);
         return of_card(lambda_r(c.card(0)));
       }},
      {"lambda_star",
       [](Call& c) {
         c.arity(1);
         return of_card(lambda_star(c.card(0)));
       }},
      {"closed",
       [](Call& c) {
         c.arity(2);
         return of(is_mu_closed(c.card(0), c.card(1), c.ctx()));
       }},
      {"almost_closed",
       [](Call& c) {
         c.arity(2);
         return of(is_almost_mu_closed(c.card(0), c.card(1), c.ctx()));
       }},
      {"exp_lt",
       [](Call& c) {
         c.arity(2);
         return of(exp_lt(c.card(0), c.card(1), c.ctx()));
       }},
      {"two_lt",
       [](Call& c) {
         c.arity(1);
         return of(two_lt(c.card(0), c.ctx()));
       }},
      {"triangle",
       [](Call& c) {
         c.arity(2);
         return of(triangle(c.card(0), c.card(1), c.ctx()));
       }},
      {"sch",
       [](Call& c) {
         c.arity(2);
         return of(ctx_implies_sch(c.ctx(), c.card(0), c.card(1)));
       }},
      {"l_cf",
       [](Call& c) {
         c.arity(1);
         return of(l_cofinality(c.card(0), c.ctx()));
       }},
      {"internal_size",
       [](Call& c) {
         c.arity(3);
         c.allow({"intersections", "bounded"});
         ClassParams p = class_params(c);
         return of(internal_size_of_cardinality(p, c.card(2), c.ctx()));
       }},
      {"rank_excluded",
       [](Call& c) {
         c.arity(2);
         return of(rank_excluded_at(c.card(0), c.card(1), c.ctx()));
       }},
      {"existence_window",
       [](Call& c) {
         c.arity(2);
         const CardinalExpr mu = c.card(0);
         ExistenceWindow w = existence_window(mu, c.card(1), c.ctx());
         Outcome o;
         if (w.hi.determined()) {
           o.value = "[" + to_string(w.lo) + ", " + to_string(w.hi.value()) + "]";
           o.basis = w.hi.basis();
         } else {
           o = missing_outcome(w.hi.missing());
           o.value = "[" + to_string(w.lo) + ", " + to_string(w.lo) + "^<" + to_string(mu) + "]";
         }
         return o;
       }},
      {"existence_at",
       [](Call& c) {
         c.arity(3);
         c.allow({"intersections", "bounded"});
         ClassParams p = class_params(c);
         return of(existence_at(p, c.card(2), c.ctx()));
       }},
      {"no_model_rule",
       [](Call& c) {
         c.arity(3);
         c.allow({"intersections", "bounded", "gap", "categorical"});
         ClassParams p = class_params(c);
         SpectrumFacts facts;
         if (const Query* g = c.option("gap")) {
           if (g->args.size() != 2) throw Error("gap expects 2 arguments");
           facts.no_models_in_cardinality_interval = std::make_pair(c.card_of(g->args[0]), c.card_of(g->args[1]));
         }
         if (const Query* k = c.option("categorical")) {
           if (k->args.size() != 1) throw Error("categorical expects 1 argument");
           facts.categorical_in_cardinality = c.card_of(k->args[0]);
         }
         return of(no_model_of_internal_size(p, c.card(2), facts, c.ctx()));
       }},
      {"hilbert_card",
       [](Call& c) {
         c.arity(1);
         return of(hilbert_count_by_cardinality(c.card(0), c.ctx()));
       }},
      {"hilbert_internal",
       [](Call& c) {
         c.arity(1);
         return of(hilbert_count_by_internal_size(c.card(0)));
       }},
      {"wo_size",
       [](Call& c) {
         c.arity(2);
         return of_card(wellorder_internal_size(c.ordinal(0), c.card(1)));
       }},
      {"shelah_card",
       [](Call& c) {
         c.arity(2);
         return of(shelah_count_by_cardinality(c.card(0), c.card(1), c.ctx()));
       }},
      {"shelah_internal",
       [](Call& c) {
         c.arity(2);
         return of(shelah_count_by_internal_size(c.card(0), c.card(1), c.ctx()));
       }},
      {"colimit_bound",
       [](Call& c) {
         c.arity(2);
         return of_card(colimit_presentability_bound(c.card(0), c.card(1)));
       }},
  };
  return table;
}

Outcome evaluate(const Query& q, const HypothesisContext& ctx) {
  auto it = handlers().find(q.name);
  if (it == handlers().end()) throw Error("unknown query '" + q.name + "'");
  Call call(q, ctx);
  Outcome o = it->second(call);
  call.check_options();
  if (o.kind == VerdictKind::Determined) {
    Basis b = call.nested_basis();
    merge_basis(b, o.basis);
    o.basis = std::move(b);
  }
  return o;
}

QueryResult error_result(std::string query, const std::string& message) {
  QueryResult r;
  r.query = std::move(query);
  r.verdict = VerdictKind::Error;
  r.notes.push_back("error: " + message);
  return r;
}

}  // namespace

const std::vector<std::string>& query_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [k, v] : handlers()) out.push_back(k);
    return out;
  }();
  return names;
}

QueryResult evaluate_query(const Ast& ast, const HypothesisContext& ctx) {
  const std::string text = format(ast);
  try {
    Outcome o;
    if (const auto* q = std::get_if<Query>(&ast.node)) {
      o = evaluate(*q, ctx);
    } else if (const auto* c = std::get_if<CardinalLiteral>(&ast.node)) {
      o = of_card(c->value);
    } else if (const auto* i = std::get_if<OrdinalLiteral>(&ast.node)) {
      o.value = to_string(i->value);
    } else {
      return error_result(text, "not a query: " + text);
    }
    QueryResult r;
    r.query = text;
    r.verdict = o.kind;
    r.value = std::move(o.value);
    r.assumptions_used = std::move(o.basis);
    r.notes = std::move(o.notes);
    return r;
  } catch (const Error& e) {
    return error_result(text, e.what());
  }
}

std::vector<QueryResult> Evaluator::run(const Ast& ast) {
  std::vector<QueryResult> out;
  if (const auto* s = std::get_if<Session>(&ast.node)) {
    for (const Ast& item : s->items) {
      auto rs = run(item);
      out.insert(out.end(), rs.begin(), rs.end());
    }
    return out;
  }
  if (const auto* a = std::get_if<Assume>(&ast.node)) {
    try {
      ctx_ = extend(ctx_, a->assumption);
    } catch (const Error& e) {
      out.push_back(error_result(format(ast), e.what()));
    }
    return out;
  }
  out.push_back(evaluate_query(ast, ctx_));
  return out;
}

std::string to_json(const QueryResult& r) {
  nlohmann::ordered_json j;
  j["query"] = r.query;
  j["verdict"] = to_string(r.verdict);
  j["value"] = r.value ? nlohmann::ordered_json(*r.value) : nlohmann::ordered_json(nullptr);
  j["assumptions_used"] = r.assumptions_used;
  j["notes"] = r.notes;
  return j.dump();
}

std::string to_text(const QueryResult& r) {
  std::string out = r.query;
  switch (r.verdict) {
    case VerdictKind::Determined:
      out += " = " + r.value.value_or("");
      if (!r.assumptions_used.empty()) {
        out += "  [using ";
        for (std::size_t i = 0; i < r.assumptions_used.size(); ++i) out += (i ? ", " : "") + r.assumptions_used[i];
        out += "]";
      } else {
        out += "  [ZFC]";
      }
      break;
    case VerdictKind::Independent:
      out += " : independent";
      if (r.value) out += " (" + *r.value + ")";
      break;
    case VerdictKind::Error:
      break;
  }
  for (const auto& n : r.notes) out += "\n  " + n;
  return out;
}

}  // namespace aleph::dsl
