#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aleph/dsl/ast.hpp"
#include "aleph/hypotheses.hpp"

namespace aleph::dsl {

enum class VerdictKind { Determined, Independent, Error };

std::string to_string(VerdictKind k);

struct QueryResult {
  std::string query;  // canonical text of the statement
  VerdictKind verdict = VerdictKind::Error;
  std::optional<std::string> value;
  std::vector<std::string> assumptions_used;
  std::vector<std::string> notes;

  friend bool operator==(const QueryResult&, const QueryResult&) = default;
};

// Evaluates statements against a context that `assume` statements extend.
class Evaluator {
 public:
  explicit Evaluator(HypothesisContext ctx = {}) : ctx_(std::move(ctx)) {}

  // One result per query. A successful assume yields no result; a rejected
  // one yields an error result and leaves the context unchanged.
  std::vector<QueryResult> run(const Ast& ast);

  const HypothesisContext& context() const { return ctx_; }

 private:
  HypothesisContext ctx_;
};

// Extends ctx by one assumption; throws aleph::Error if inconsistent.
HypothesisContext extend(const HypothesisContext& ctx, const Assumption& a);

// Evaluates a single query node.
QueryResult evaluate_query(const Ast& ast, const HypothesisContext& ctx);

// Names of the queries understood by evaluate_query.
const std::vector<std::string>& query_names();

// One-line JSON object with keys query, verdict, value, assumptions_used, notes.
std::string to_json(const QueryResult& r);
// Human-readable line.
std::string to_text(const QueryResult& r);

}  // namespace aleph::dsl
