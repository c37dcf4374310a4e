// alephcalc: evaluate cardinal-arithmetic queries under declared hypotheses.

#include <unistd.h>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aleph/dsl/batch.hpp"
#include "aleph/dsl/eval.hpp"
#include "aleph/dsl/parser.hpp"

namespace {

constexpr const char* kVersion = "alephcalc 0.1.0";

using namespace aleph;
using namespace aleph::dsl;

HypothesisContext context_from(const std::vector<std::string>& names) {
  HypothesisContext ctx;
  for (const std::string& raw : names) {
    // Accepts the same spellings as `assume`.
    Ast ast = parse("assume " + raw);
    const auto* a = std::get_if<Assume>(&ast.node);
    if (!a) throw Error("bad assumption '" + raw + "'");
    ctx = extend(ctx, a->assumption);
  }
  return ctx;
}

void emit(const QueryResult& r, bool json) { std::cout << (json ? to_json(r) : to_text(r)) << '\n'; }

QueryResult syntax_error(const std::string& text, const ParseError& e) {
  QueryResult r;
  r.query = text;
  r.notes.push_back(std::string("error: ") + e.what());
  return r;
}

int run_eval(const std::string& expr, bool json, const HypothesisContext& ctx) {
  Evaluator ev(ctx);
  std::vector<QueryResult> results;
  try {
    results = ev.run(parse(expr));
  } catch (const ParseError& e) {
    results.push_back(syntax_error(expr, e));
  }
  int status = 0;
  for (const auto& r : results) {
    if (r.verdict == VerdictKind::Error) status = 1;
    emit(r, json);
  }
  return status;
}

int run_repl(bool json, const HypothesisContext& ctx) {
  const bool interactive = isatty(STDIN_FILENO);
  Evaluator ev(ctx);
  std::string line;
  auto prompt = [&] {
    if (interactive) std::cout << "aleph> " << std::flush;
  };
  prompt();
  while (std::getline(std::cin, line)) {
    if (line == ":quit" || line == ":q") break;
    if (line == ":context") {
      std::cout << to_string(ev.context()) << '\n';
    } else if (line == ":help") {
      std::cout << "queries:";
      for (const auto& n : query_names()) std::cout << ' ' << n;
      std::cout << "\nassume GCH | V=L | sharp | no-sharp | SCH(mu, >= theta) | SCH(mu, < lambda) | SCH(mu, {...})\n"
                   ":context shows the current hypotheses, :quit exits\n";
    } else if (line.find_first_not_of(" \t\r") != std::string::npos) {
      try {
        Ast ast = parse(line);
        const HypothesisContext before = ev.context();
        for (const auto& r : ev.run(ast)) emit(r, json);
        if (!(before == ev.context())) std::cout << "context: " << to_string(ev.context()) << '\n';
      } catch (const ParseError& e) {
        emit(syntax_error(line, e), json);
      }
    }
    prompt();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cardinal arithmetic under declared hypotheses"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::vector<std::string> assumptions;
  app.add_option("--assume", assumptions, "Hypotheses: gch, v=l, sharp, no-sharp, SCH(...)")->delimiter(';');

  std::string expr;
  bool eval_json = false;
  auto* eval = app.add_subcommand("eval", "Evaluate statements separated by ';'");
  eval->add_option("-e,--expr", expr, "Statement text")->required();
  eval->add_flag("--json", eval_json, "Emit JSON records");

  bool repl_json = false;
  auto* repl = app.add_subcommand("repl", "Interactive session");
  repl->add_flag("--json", repl_json, "Emit JSON records");

  std::string file;
  bool batch_json = false;
  auto* batch = app.add_subcommand("batch", "Run one statement per line of a file ('-' for stdin)");
  batch->add_option("file", file, "Input file")->required();
  batch->add_flag("--json", batch_json, "Emit JSON records");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  // --assume accepts comma-separated flags; SCH scopes need ';' between entries.
  std::vector<std::string> names;
  for (const auto& a : assumptions) {
    if (a.find('(') != std::string::npos) {
      names.push_back(a);
      continue;
    }
    std::stringstream ss(a);
    for (std::string part; std::getline(ss, part, ',');)
      if (!part.empty()) names.push_back(part);
  }

  HypothesisContext ctx;
  try {
    ctx = context_from(names);
  } catch (const Error& e) {
    std::cerr << "alephcalc: invalid --assume: " << e.what() << '\n';
    return 2;
  }

  if (*eval) return run_eval(expr, eval_json, ctx);
  if (*repl) return run_repl(repl_json, ctx);
  if (file == "-") return run_batch(std::cin, std::cout, batch_json ? OutputFormat::Json : OutputFormat::Text, ctx);
  std::ifstream in(file);
  if (!in) {
    std::cerr << "alephcalc: cannot open " << file << '\n';
    return 2;
  }
  return run_batch(in, std::cout, batch_json ? OutputFormat::Json : OutputFormat::Text, ctx);
}
