#include "aleph/dsl/batch.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "aleph/dsl/eval.hpp"
#include "aleph/dsl/parser.hpp"

namespace aleph::dsl {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

int run_batch(std::istream& in, std::ostream& out, OutputFormat format, const HypothesisContext& ctx) {
  Evaluator ev(ctx);
  int status = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::string stmt = trim(line.substr(0, line.find('#')));
    if (stmt.empty()) continue;
    std::vector<QueryResult> results;
    try {
      results = ev.run(parse(stmt));
    } catch (const ParseError& e) {
      QueryResult r;
      r.query = stmt;
      r.notes.push_back(std::string("error: ") + e.what());
      results.push_back(std::move(r));
    }
    for (const QueryResult& r : results) {
      if (r.verdict == VerdictKind::Error) status = 1;
      out << (format == OutputFormat::Json ? to_json(r) : to_text(r)) << '\n';
    }
  }
  return status;
}

}  // namespace aleph::dsl
