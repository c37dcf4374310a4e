#include <gtest/gtest.h>

#include <sstream>

#include "aleph/cardinal_arith.hpp"
#include "aleph/dsl/batch.hpp"
#include "aleph/dsl/eval.hpp"
#include "aleph/dsl/parser.hpp"

using namespace aleph;
using namespace aleph::dsl;

namespace {

const CardinalExpr a1 = CardinalExpr::aleph(1);
const CardinalExpr aw = CardinalExpr::aleph(CnfOrdinal::omega());

QueryResult eval1(const std::string& text, const HypothesisContext& ctx = {}) {
  Evaluator ev(ctx);
  std::vector<QueryResult> rs = ev.run(parse(text));
  EXPECT_EQ(rs.size(), 1u) << text;
  return rs.empty() ? QueryResult{} : rs.back();
}

std::vector<QueryResult> eval_all(const std::string& text) {
  Evaluator ev;
  return ev.run(parse(text));
}

}  // namespace

TEST(Parse, CardinalLiteral) {
  Ast ast = parse("aleph(w+1)");
  ASSERT_TRUE(std::holds_alternative<CardinalLiteral>(ast.node));
  EXPECT_EQ(std::get<CardinalLiteral>(ast.node).value, successor(aw));
}

TEST(Parse, QueryWithNestedIndex) {
  Ast ast = parse("cf(aleph(aleph(1)))");
  ASSERT_TRUE(std::holds_alternative<Query>(ast.node));
  const Query& q = std::get<Query>(ast.node);
  EXPECT_EQ(q.name, "cf");
  ASSERT_EQ(q.args.size(), 1u);
  EXPECT_EQ(q.args[0], Ast{CardinalLiteral{CardinalExpr::aleph(a1)}});
}

TEST(Parse, UnterminatedReportsColumn) {
  try {
    parse("aleph(");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 7);
    EXPECT_FALSE(e.expected().empty());
    EXPECT_EQ(e.found(), "end of input");
  }
}

TEST(Parse, ErrorPositionOnLaterLine) {
  try {
    parse("cf(aleph_1)\nsucc(aleph_1,,)");
    FAIL() << "expected a syntax error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 14);
  }
}

TEST(Parse, Sugar) {
  EXPECT_EQ(parse_cardinal("aleph_0"), CardinalExpr{});
  EXPECT_EQ(parse_cardinal("aleph_12"), CardinalExpr::aleph(12));
  EXPECT_EQ(parse_cardinal("aleph_w"), aw);
  EXPECT_EQ(parse_cardinal("aleph(aleph_1 + w)"), CardinalExpr::aleph(a1, CnfOrdinal::omega()));
}

TEST(Parse, Precedence) {
  // w^2*3 + w*2 + 1
  const CnfOrdinal expected = cnf_add(cnf_add(CnfOrdinal::omega_power(CnfOrdinal::natural(2), 3),
                                              CnfOrdinal::omega_power(CnfOrdinal::natural(1), 2)),
                                      CnfOrdinal::natural(1));
  EXPECT_EQ(parse_cardinal("aleph(w^2*3+w*2+1)"), CardinalExpr::aleph(expected));
  EXPECT_EQ(parse_cardinal("aleph(w^(w+1))"), CardinalExpr::aleph(CnfOrdinal::omega_power(
                                                  cnf_add(CnfOrdinal::omega(), CnfOrdinal::natural(1)))));
}

TEST(Parse, IndexSumsNormalize) {
  EXPECT_EQ(parse_cardinal("aleph(1+w)"), aw);
  EXPECT_EQ(parse_cardinal("aleph(w+aleph(1))"), CardinalExpr::aleph(a1));
  EXPECT_THROW(parse_cardinal("aleph(aleph(1)+aleph(1))"), ParseError);
  EXPECT_THROW(parse_cardinal("aleph(inacc(t))"), ParseError);
  EXPECT_THROW(parse_cardinal("aleph(w*0)"), ParseError);
  EXPECT_THROW(parse_cardinal("aleph(w^(aleph(1)))"), ParseError);
  EXPECT_THROW(parse_cardinal("aleph(99999999999999999999)"), ParseError);
}

TEST(Parse, Atoms) {
  EXPECT_EQ(parse_cardinal("inacc(theta)"), CardinalExpr::atom("theta", true));
  EXPECT_EQ(parse_cardinal("inacc(theta, 3)"), CardinalExpr::atom("theta", true, 3));
  EXPECT_EQ(parse_cardinal("atom(x)"), CardinalExpr::atom("x", false));
}

TEST(Parse, Ordinals) {
  Ast ast = parse("w*2+1");
  ASSERT_TRUE(std::holds_alternative<OrdinalLiteral>(ast.node));
  ast = parse("aleph(1)+w");
  ASSERT_TRUE(std::holds_alternative<OrdinalLiteral>(ast.node));
  EXPECT_EQ(std::get<OrdinalLiteral>(ast.node).value, IndexOrdinal(a1, CnfOrdinal::omega()));
}

TEST(Parse, Assumptions) {
  EXPECT_EQ(parse("assume GCH"), Ast{Assume{FlagAssumption::Gch}});
  EXPECT_EQ(parse("assume V=L"), Ast{Assume{FlagAssumption::VEqualsL}});
  EXPECT_EQ(parse("assume v=l"), Ast{Assume{FlagAssumption::VEqualsL}});
  EXPECT_EQ(parse("assume sharp"), Ast{Assume{FlagAssumption::Sharp}});
  EXPECT_EQ(parse("assume no-sharp"), Ast{Assume{FlagAssumption::NoSharp}});
  EXPECT_EQ(parse("assume SCH(aleph_1, >= aleph_2)"),
            (Ast{Assume{SchAssumption{a1, AtLeast{CardinalExpr::aleph(2)}}}}));
  EXPECT_EQ(parse("assume SCH(aleph_1, < aleph_w)"), (Ast{Assume{SchAssumption{a1, UnboundedBelow{aw}}}}));
  EXPECT_EQ(parse("assume SCH(aleph_1, {aleph_w, aleph_2})"),
            (Ast{Assume{SchAssumption{a1, ExplicitSet{{aw, CardinalExpr::aleph(2)}}}}}));
  EXPECT_THROW(parse("assume CH"), ParseError);
}

TEST(Parse, Sessions) {
  Ast ast = parse("assume GCH; exp_lt(aleph_w, aleph_1)\n\n cf(aleph_1) # comment");
  ASSERT_TRUE(std::holds_alternative<Session>(ast.node));
  EXPECT_EQ(std::get<Session>(ast.node).items.size(), 3u);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("cf(aleph_1) cf(aleph_1)"), ParseError);
}

TEST(Format, Examples) {
  const CardinalExpr a = CardinalExpr::aleph(cnf_add(CnfOrdinal::omega_power(CnfOrdinal::natural(1), 2),
                                                     CnfOrdinal::natural(1)));
  EXPECT_EQ(format(Ast{CardinalLiteral{a}}), "aleph(w*2+1)");
  EXPECT_EQ(format(Ast{CardinalLiteral{CardinalExpr::aleph(a1)}}), "aleph(aleph(1))");
  EXPECT_EQ(eval1("hilbert_card(aleph(w+1))", ctx_build({.gch = true})).value, "2");
  EXPECT_EQ(format(parse("assume SCH(aleph_1, >= aleph_2)")), "assume SCH(aleph(1), >= aleph(2))");
  EXPECT_EQ(format(parse("no_model_rule(aleph_1, aleph_1, aleph_w, gap(aleph_w, aleph(w+1)), categorical(aleph(w+1)))")),
            "no_model_rule(aleph(1), aleph(1), aleph(w), gap(aleph(w), aleph(w+1)), categorical(aleph(w+1)))");
}

TEST(Eval, Examples) {
  std::vector<QueryResult> rs = eval_all("assume GCH; exp_lt(aleph(w), aleph(1))");
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].verdict, VerdictKind::Determined);
  EXPECT_EQ(rs[0].value, "aleph(w+1)");
  EXPECT_EQ(rs[0].assumptions_used, (std::vector<std::string>{"GCH"}));

  QueryResult r = eval1("exp_lt(aleph(w), aleph(1))");
  EXPECT_EQ(r.verdict, VerdictKind::Independent);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_EQ(r.notes[0].rfind("missing: SCH(aleph(1)) at", 0), 0u);

  rs = eval_all("assume V=L; shelah_card(aleph(1), aleph(w))");
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].verdict, VerdictKind::Determined);
  EXPECT_EQ(rs[0].value, "1");
  EXPECT_EQ(rs[0].assumptions_used, (std::vector<std::string>{"V=L"}));
}

TEST(Eval, Errors) {
  QueryResult r = eval1("frobnicate(aleph_1)");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
  EXPECT_NE(r.notes.at(0).find("unknown query"), std::string::npos);
  r = eval1("cf(aleph_1, aleph_2)");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
  EXPECT_NE(r.notes.at(0).find("expects 1 argument"), std::string::npos);
  r = eval1("exp_lt(aleph_2, aleph_w)");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
  EXPECT_NE(r.notes.at(0).find("must be regular"), std::string::npos);
  r = eval1("cf(aleph_1, intersections)");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
  r = eval1("cf(w+1)");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
  EXPECT_FALSE(r.value.has_value());
}

TEST(Eval, FailedAssumeLeavesContext) {
  Evaluator ev;
  ev.run(parse("assume V=L"));
  std::vector<QueryResult> rs = ev.run(parse("assume sharp"));
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].verdict, VerdictKind::Error);
  EXPECT_NE(rs[0].notes[0].find("inconsistent"), std::string::npos);
  EXPECT_TRUE(ev.context().v_equals_l());
}

TEST(Eval, NestedQueries) {
  QueryResult r = eval1("exp_lt(succ(aleph_w), cf(aleph(aleph(1))))", ctx_build({.gch = true}));
  EXPECT_EQ(r.verdict, VerdictKind::Determined);
  EXPECT_EQ(r.value, "aleph(w+1)");
  EXPECT_EQ(r.query, "exp_lt(succ(aleph(w)), cf(aleph(aleph(1))))");
  // Nested independent arguments are errors, not silent guesses.
  r = eval1("succ(exp_lt(aleph_w, aleph_1))");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
  r = eval1("succ(reg(aleph_1))");
  EXPECT_EQ(r.verdict, VerdictKind::Error);
}

TEST(Eval, NestedBasisPropagates) {
  QueryResult r = eval1("succ(exp_lt(aleph_w, aleph_1))", ctx_build({.gch = true}));
  EXPECT_EQ(r.value, "aleph(w+2)");
  EXPECT_EQ(r.assumptions_used, (std::vector<std::string>{"GCH"}));
}

TEST(Eval, ValueRenderings) {
  const HypothesisContext g = ctx_build({.gch = true});
  EXPECT_EQ(eval1("internal_size(aleph_1, aleph_1, aleph_1)").value, "<= aleph(1)");
  EXPECT_EQ(eval1("internal_size(aleph_1, aleph_1, aleph(w+1))", g).value, "{aleph(w), aleph(w+1)}");
  EXPECT_EQ(eval1("internal_size(aleph_1, aleph_1, aleph_3)").value, "[aleph(2), aleph(3)]");
  EXPECT_EQ(eval1("shelah_internal(aleph_1, aleph_2)").value, ">= aleph(3)");
  EXPECT_EQ(eval1("hilbert_card(aleph_w)", g).value, "0");
  EXPECT_EQ(eval1("reg(aleph_w)").value, "false");
  EXPECT_EQ(eval1("l_cf(aleph_w)", ctx_build({.zero_sharp = ZeroSharp::NotExists})).value, "[aleph(0), aleph(1)]");
  EXPECT_EQ(eval1("existence_window(aleph_1, aleph_2)", g).value, "[aleph(2), aleph(2)]");
  QueryResult w = eval1("existence_window(aleph_1, aleph_2)");
  EXPECT_EQ(w.verdict, VerdictKind::Independent);
  EXPECT_EQ(w.value, "[aleph(2), aleph(2)^<aleph(1)]");
  EXPECT_EQ(eval1("wo_size(aleph(1)+w, aleph_1)").value, "aleph(0)");
  EXPECT_EQ(eval1("wo_size(aleph_1, aleph_1)").value, "aleph(1)");
  QueryResult rank = eval1("internal_size(aleph_1, aleph_1, aleph_3)", g);
  EXPECT_EQ(rank.notes, (std::vector<std::string>{"rank: aleph(4)"}));
}

TEST(Eval, IndependentAlwaysNamesMissing) {
  for (const char* q : {"exp_lt(aleph_w, aleph_1)", "two_lt(aleph_1)", "closed(aleph_w, aleph_1)",
                        "hilbert_card(aleph_2)", "shelah_card(aleph_1, aleph_w)", "l_cf(aleph_w)",
                        "existence_at(aleph_1, aleph_1, aleph_w)", "triangle(aleph_1, aleph_3)"}) {
    QueryResult r = eval1(q);
    ASSERT_EQ(r.verdict, VerdictKind::Independent) << q;
    ASSERT_FALSE(r.notes.empty()) << q;
    EXPECT_EQ(r.notes[0].rfind("missing: ", 0), 0u) << q;
  }
}

TEST(Json, RecordShape) {
  QueryResult r = eval1("cf(aleph_w)");
  EXPECT_EQ(to_json(r),
            R"j({"query":"cf(aleph(w))","verdict":"determined","value":"aleph(0)","assumptions_used":[],"notes":[]})j");
  r = eval1("bogus(aleph_w)");
  EXPECT_EQ(to_json(r).rfind(R"j({"query":"bogus(aleph(w))","verdict":"error","value":null,)j", 0), 0u);
}

TEST(Batch, ThreeValidQueries) {
  std::istringstream in("cf(aleph_w)\nsucc(aleph_1)\nreg(aleph_2)\n");
  std::ostringstream out;
  EXPECT_EQ(run_batch(in, out, OutputFormat::Json), 0);
  const std::string s = out.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 3);
}

TEST(Batch, OneBadLine) {
  std::istringstream in("cf(aleph_w)\ncf(aleph(\nreg(aleph_2)\n");
  std::ostringstream out;
  EXPECT_EQ(run_batch(in, out, OutputFormat::Json), 1);
  const std::string s = out.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 3);
  EXPECT_NE(s.find(R"("verdict":"error")"), std::string::npos);
}

TEST(Batch, EmptyInput) {
  std::istringstream in("");
  std::ostringstream out;
  EXPECT_EQ(run_batch(in, out, OutputFormat::Json), 0);
  EXPECT_TRUE(out.str().empty());
}

TEST(Batch, AssumeLinesCarryForward) {
  std::istringstream in("# header\nexp_lt(aleph_w, aleph_1)\nassume GCH\n\nexp_lt(aleph_w, aleph_1)\n");
  std::ostringstream out;
  EXPECT_EQ(run_batch(in, out, OutputFormat::Json), 0);
  const std::string s = out.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 2);
  EXPECT_NE(s.find(R"("verdict":"independent")"), std::string::npos);
  EXPECT_NE(s.find(R"j("value":"aleph(w+1)")j"), std::string::npos);
}

TEST(Batch, Deterministic) {
  const std::string input = "assume GCH\nexp_lt(aleph_w, aleph_1)\nshelah_card(aleph_1, aleph_w)\nbogus()\n";
  std::string first;
  for (int i = 0; i < 2; ++i) {
    std::istringstream in(input);
    std::ostringstream out;
    run_batch(in, out, OutputFormat::Json);
    if (i == 0) first = out.str();
    else EXPECT_EQ(first, out.str());
  }
}
