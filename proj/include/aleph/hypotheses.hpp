#pragma once

// Declared set-theoretic hypotheses and the entailment queries the rest of
// the engine is built on.

#include <string>
#include <variant>
#include <vector>

#include "aleph/ordinal.hpp"
#include "aleph/verdict.hpp"

namespace aleph {

struct AtLeast {
  CardinalExpr theta;
  friend bool operator==(const AtLeast&, const AtLeast&) = default;
};
// SCH_{mu,lambda}: an unnamed set unbounded below lambda.
struct UnboundedBelow {
  CardinalExpr lambda;
  friend bool operator==(const UnboundedBelow&, const UnboundedBelow&) = default;
};
struct ExplicitSet {
  std::vector<CardinalExpr> cards;  // sorted, deduplicated
  friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;
};

using SchScope = std::variant<AtLeast, UnboundedBelow, ExplicitSet>;

/// SCH_{mu,S}: every member of S is almost mu-closed.
struct SchAssumption {
  CardinalExpr mu;
  SchScope scope;
  friend bool operator==(const SchAssumption&, const SchAssumption&) = default;
};

enum class ZeroSharp { Unknown, Exists, NotExists };

struct ContextFlags {
  bool gch = false;
  bool v_equals_l = false;
  ZeroSharp zero_sharp = ZeroSharp::Unknown;
  friend bool operator==(const ContextFlags&, const ContextFlags&) = default;
};

class HypothesisContext;

// ctx_build: closes V=L => GCH and not 0#. Throws on inconsistency.
HypothesisContext ctx_build(const ContextFlags& flags, const std::vector<SchAssumption>& sch = {});

class HypothesisContext {
 public:
  // The agnostic context (ZFC only).
  HypothesisContext() = default;

  const ContextFlags& flags() const { return flags_; }
  const std::vector<SchAssumption>& sch_assumptions() const { return sch_; }

  bool gch() const { return flags_.gch; }
  bool v_equals_l() const { return flags_.v_equals_l; }
  ZeroSharp zero_sharp() const { return flags_.zero_sharp; }

  // Basis label for GCH-based conclusions ("GCH", or "V=L" when GCH was only
  // obtained by closure).
  std::string gch_label() const;
  std::string zero_sharp_label() const;

  HypothesisContext with_flags(const ContextFlags& extra) const;
  HypothesisContext with_sch(const SchAssumption& extra) const;

  friend bool operator==(const HypothesisContext&, const HypothesisContext&) = default;

 private:
  friend HypothesisContext ctx_build(const ContextFlags&, const std::vector<SchAssumption>&);

  ContextFlags flags_;
  std::vector<SchAssumption> sch_;
};

std::string to_string(const SchAssumption& a);
std::string to_string(const HypothesisContext& ctx);

/// Is `card` almost mu-closed according to the declared hypotheses?
/// Never Determined(false).
Verdict<bool> ctx_implies_sch(const HypothesisContext& ctx, const CardinalExpr& mu, const CardinalExpr& card);

/// Does SCH_{mu,lambda} follow from the declared hypotheses? For a successor
/// lambda = lambda0^+ an unbounded set of cardinals below lambda must contain
/// lambda0, so this reduces to lambda0 being almost mu-closed.
Verdict<bool> ctx_implies_sch_unbounded(const HypothesisContext& ctx, const CardinalExpr& mu,
                                        const CardinalExpr& lambda);

struct CardinalInterval {
  CardinalExpr lo;
  CardinalExpr hi;
  bool exact() const { return lo == hi; }
  friend bool operator==(const CardinalInterval&, const CardinalInterval&) = default;
};

/// Bounds on cf(lam) computed in L, from V=L or the status of 0#.
Verdict<CardinalInterval> l_cofinality(const CardinalExpr& lam, const HypothesisContext& ctx);

}  // namespace aleph
