#include "aleph/dsl/ast.hpp"

namespace aleph::dsl {

bool operator==(const Query& a, const Query& b) { return a.name == b.name && a.args == b.args; }
bool operator==(const Session& a, const Session& b) { return a.items == b.items; }
bool operator==(const Ast& a, const Ast& b) { return a.node == b.node; }

std::string format(const Assumption& a) {
  if (const auto* s = std::get_if<SchAssumption>(&a)) return to_string(*s);
  switch (std::get<FlagAssumption>(a)) {
    case FlagAssumption::Gch:
      return "GCH";
    case FlagAssumption::VEqualsL:
      return "V=L";
    case FlagAssumption::Sharp:
      return "sharp";
    case FlagAssumption::NoSharp:
      return "no-sharp";
  }
  return "";
}

namespace {

struct Formatter {
  std::string operator()(const CardinalLiteral& n) const { return to_string(n.value); }
  std::string operator()(const OrdinalLiteral& n) const { return to_string(n.value); }
  std::string operator()(const Symbol& n) const { return n.name; }
  std::string operator()(const Query& n) const {
    std::string out = n.name + "(";
    for (std::size_t i = 0; i < n.args.size(); ++i) out += (i ? ", " : "") + format(n.args[i]);
    return out + ")";
  }
  std::string operator()(const Assume& n) const { return "assume " + format(n.assumption); }
  std::string operator()(const Session& n) const {
    std::string out;
    for (std::size_t i = 0; i < n.items.size(); ++i) out += (i ? "\n" : "") + format(n.items[i]);
    return out;
  }
};

}  // namespace

std::string format(const Ast& ast) { return std::visit(Formatter{}, ast.node); }

}  // namespace aleph::dsl
