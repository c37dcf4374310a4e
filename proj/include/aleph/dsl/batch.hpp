#pragma once

#include <iosfwd>

#include "aleph/hypotheses.hpp"

namespace aleph::dsl {

enum class OutputFormat { Text, Json };

// Runs one statement per line ('#' comments and blank lines skipped) and
// writes one record per query. Returns 0, or 1 if any record is an error.
int run_batch(std::istream& in, std::ostream& out, OutputFormat format, const HypothesisContext& ctx = {});

}  // namespace aleph::dsl
