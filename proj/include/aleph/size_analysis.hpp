#pragma once

// Internal size versus cardinality in mu-AECs: verdicts on |M|_K from |U M|,
// presentability-rank bounds, existence windows and the no-model rule.

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "aleph/hypotheses.hpp"
#include "aleph/ordinal.hpp"
#include "aleph/verdict.hpp"

namespace aleph {

/// Parameters of a mu-AEC K. `ls` is LS(K), which satisfies ls = ls^{<mu}.
struct ClassParams {
  CardinalExpr mu;
  CardinalExpr ls;
  bool admits_intersections = false;
  bool arbitrarily_large_models = true;
};

// Validates mu regular, ls >= mu, and ls = ls^{<mu} wherever that is decided.
void validate(const ClassParams& params, const HypothesisContext& ctx);

namespace size {
struct BelowLS {
  CardinalExpr ls;
  friend bool operator==(const BelowLS&, const BelowLS&) = default;
};
struct Exact {
  CardinalExpr value;
  friend bool operator==(const Exact&, const Exact&) = default;
};
// hi = lo^+ and cf(lo) < mu.
struct TwoCandidates {
  CardinalExpr lo;
  CardinalExpr hi;
  friend bool operator==(const TwoCandidates&, const TwoCandidates&) = default;
};
struct Interval {
  CardinalExpr lo;
  CardinalExpr hi;
  bool tight = false;
  friend bool operator==(const Interval&, const Interval&) = default;
};
struct Undetermined {
  std::string reason;
  friend bool operator==(const Undetermined&, const Undetermined&) = default;
};
}  // namespace size

using SizeVerdict = std::variant<size::BelowLS, size::Exact, size::TwoCandidates, size::Interval, size::Undetermined>;

struct SizeReport {
  SizeVerdict verdict;
  Basis basis;
  // Presentability rank r_K(M) when it follows from the verdict.
  std::string rank;
};

struct SpectrumFacts {
  // K has no model with cardinality in [first, second).
  std::optional<std::pair<CardinalExpr, CardinalExpr>> no_models_in_cardinality_interval;
  std::optional<CardinalExpr> categorical_in_cardinality;
};

SizeReport internal_size_of_cardinality(const ClassParams& params, const CardinalExpr& lam,
                                        const HypothesisContext& ctx);

// (|I|^+ + sup of component presentability)_r
CardinalExpr colimit_presentability_bound(const CardinalExpr& index_size, const CardinalExpr& sup_component_pres);

struct ExistenceWindow {
  CardinalExpr lo;
  Verdict<CardinalExpr> hi;
};

// Some M has lam <= |M|_K <= lam^{<mu}.
ExistenceWindow existence_window(const CardinalExpr& mu, const CardinalExpr& lam, const HypothesisContext& ctx);

// Whether theta is excluded as the presentability rank of any object of a
// (mu, <lambda)-accessible category with lambda <= theta.
Verdict<bool> rank_excluded_at(const CardinalExpr& theta, const CardinalExpr& mu, const HypothesisContext& ctx);

Verdict<bool> no_model_of_internal_size(const ClassParams& params, const CardinalExpr& lam,
                                        const SpectrumFacts& facts, const HypothesisContext& ctx);

Verdict<bool> existence_at(const ClassParams& params, const CardinalExpr& lam, const HypothesisContext& ctx);

}  // namespace aleph
