#pragma once

// Closed-form model counts for three example classes: Hilbert spaces with
// isometries, well-orders of type at most lambda^+, and the constructible
// class K^mu.

#include <cstdint>
#include <string>
#include <variant>

#include "aleph/hypotheses.hpp"
#include "aleph/ordinal.hpp"
#include "aleph/verdict.hpp"

namespace aleph {

namespace count {
struct Finite {
  std::uint64_t n = 1;  // >= 1
  friend bool operator==(const Finite&, const Finite&) = default;
};
struct Card {
  CardinalExpr value;
  friend bool operator==(const Card&, const Card&) = default;
};
struct AtLeastCard {
  CardinalExpr value;
  friend bool operator==(const AtLeastCard&, const AtLeastCard&) = default;
};
struct Zero {
  friend bool operator==(const Zero&, const Zero&) = default;
};
struct Undetermined {
  std::string reason;
  friend bool operator==(const Undetermined&, const Undetermined&) = default;
};
}  // namespace count

using CountValue = std::variant<count::Finite, count::Card, count::AtLeastCard, count::Zero, count::Undetermined>;

struct CountReport {
  CountValue value;
  Basis basis;
};

// Infinite-dimensional Hilbert spaces of cardinality lam, up to isometry.
CountReport hilbert_count_by_cardinality(const CardinalExpr& lam, const HypothesisContext& ctx);
// Hilbert spaces with an orthonormal basis of size lam: always one.
CountReport hilbert_count_by_internal_size(const CardinalExpr& lam);

// |(alpha, in)|_K = cf(alpha) + aleph_0 in the class of well-orders of type
// at most lam_param^+.
CardinalExpr wellorder_internal_size(const IndexOrdinal& alpha, const CardinalExpr& lam_param);

CountReport shelah_count_by_cardinality(const CardinalExpr& mu, const CardinalExpr& lam, const HypothesisContext& ctx);
// Lower bounds only; never an exact count.
CountReport shelah_count_by_internal_size(const CardinalExpr& mu, const CardinalExpr& lam,
                                          const HypothesisContext& ctx);

}  // namespace aleph
