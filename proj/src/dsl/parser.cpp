#include "aleph/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

namespace aleph::dsl {

namespace {

std::string join(const std::vector<std::string>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

}  // namespace

ParseError::ParseError(int line, int column, std::vector<std::string> expected, std::string found)
    : Error("syntax error at " + std::to_string(line) + ":" + std::to_string(column) + ": expected " +
            join(expected, " or ") + ", found " + found),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

namespace {

enum class Tok { Ident, Nat, LParen, RParen, Comma, Semi, Newline, Plus, Star, Caret, LBrace, RBrace, Ge, Lt, Eq, Minus, End };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

std::string describe(const Token& t) {
  switch (t.kind) {
    case Tok::End:
      return "end of input";
    case Tok::Newline:
      return "end of line";
    case Tok::Ident:
    case Tok::Nat:
      return "'" + t.text + "'";
    default:
      return "'" + t.text + "'";
  }
}

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    i += n;
    col += static_cast<int>(n);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '\n') {
      out.push_back({Tok::Newline, "\\n", line, col});
      ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    const int start = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), line, start});
      advance(j - i);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::Nat, std::string(src.substr(i, j - i)), line, start});
      advance(j - i);
      continue;
    }
    if (c == '>' && i + 1 < src.size() && src[i + 1] == '=') {
      out.push_back({Tok::Ge, ">=", line, start});
      advance(2);
      continue;
    }
    Tok kind;
    switch (c) {
      case '(':
        kind = Tok::LParen;
        break;
      case ')':
        kind = Tok::RParen;
        break;
      case ',':
        kind = Tok::Comma;
        break;
      case ';':
        kind = Tok::Semi;
        break;
      case '+':
        kind = Tok::Plus;
        break;
      case '*':
        kind = Tok::Star;
        break;
      case '^':
        kind = Tok::Caret;
        break;
      case '{':
        kind = Tok::LBrace;
        break;
      case '}':
        kind = Tok::RBrace;
        break;
      case '<':
        kind = Tok::Lt;
        break;
      case '=':
        kind = Tok::Eq;
        break;
      case '-':
        kind = Tok::Minus;
        break;
      default:
        throw ParseError(line, start, {"a token"}, "'" + std::string(1, c) + "'");
    }
    out.push_back({kind, std::string(1, c), line, start});
    advance(1);
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool ieq(std::string_view a, std::string_view b) {
  return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
           return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
         });
}

bool is_aleph_sugar(const std::string& s) {
  if (s.rfind("aleph_", 0) != 0 || s.size() == 6) return false;
  const std::string rest = s.substr(6);
  return rest == "w" || std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

bool starts_index(const Token& t) {
  if (t.kind == Tok::Nat) return true;
  if (t.kind != Tok::Ident) return false;
  return t.text == "w" || t.text == "aleph" || t.text == "inacc" || t.text == "atom" || is_aleph_sugar(t.text);
}

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Ast session() {
    std::vector<Ast> items;
    skip_separators();
    while (peek().kind != Tok::End) {
      items.push_back(statement());
      if (peek().kind == Tok::End) break;
      if (!is_separator(peek())) fail({"';'", "end of line", "end of input"});
      skip_separators();
    }
    if (items.empty()) fail({"a statement"});
    if (items.size() == 1) return std::move(items.front());
    return Ast{Session{std::move(items)}};
  }

  CardinalExpr lone_cardinal() {
    CardinalExpr c = cardinal();
    expect(Tok::End, "end of input");
    return c;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    throw ParseError(peek().line, peek().column, std::move(expected), describe(peek()));
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail({what});
    return next();
  }
  static bool is_separator(const Token& t) { return t.kind == Tok::Semi || t.kind == Tok::Newline; }
  void skip_separators() {
    while (is_separator(peek())) next();
  }
  bool at_ident(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

  std::uint64_t natural() {
    const Token& t = expect(Tok::Nat, "a natural number");
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc{} || p != t.text.data() + t.text.size())
      throw ParseError(t.line, t.column, {"a natural number below 2^64"}, "'" + t.text + "'");
    return v;
  }

  Ast statement() {
    if (at_ident("assume")) {
      next();
      return Ast{Assume{assumption()}};
    }
    return argument();
  }

  Assumption assumption() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (ieq(t.text, "GCH")) {
        next();
        return FlagAssumption::Gch;
      }
      if (ieq(t.text, "sharp")) {
        next();
        return FlagAssumption::Sharp;
      }
      if (ieq(t.text, "V")) {
        next();
        expect(Tok::Eq, "'='");
        if (!(peek().kind == Tok::Ident && ieq(peek().text, "L"))) fail({"'L'"});
        next();
        return FlagAssumption::VEqualsL;
      }
      if (ieq(t.text, "no")) {
        next();
        expect(Tok::Minus, "'-'");
        if (!(peek().kind == Tok::Ident && ieq(peek().text, "sharp"))) fail({"'sharp'"});
        next();
        return FlagAssumption::NoSharp;
      }
      if (ieq(t.text, "SCH")) {
        next();
        expect(Tok::LParen, "'('");
        CardinalExpr mu = cardinal();
        expect(Tok::Comma, "','");
        SchScope scope = sch_scope();
        expect(Tok::RParen, "')'");
        return SchAssumption{std::move(mu), std::move(scope)};
      }
    }
    fail({"'GCH'", "'V=L'", "'sharp'", "'no-sharp'", "'SCH'"});
  }

  SchScope sch_scope() {
    if (peek().kind == Tok::Ge) {
      next();
      return AtLeast{cardinal()};
    }
    if (peek().kind == Tok::Lt) {
      next();
      return UnboundedBelow{cardinal()};
    }
    if (peek().kind == Tok::LBrace) {
      next();
      std::vector<CardinalExpr> cards{cardinal()};
      while (peek().kind == Tok::Comma) {
        next();
        cards.push_back(cardinal());
      }
      expect(Tok::RBrace, "'}'");
      return ExplicitSet{std::move(cards)};
    }
    fail({"'>='", "'<'", "'{'"});
  }

  Ast argument() {
    const Token& t = peek();
    if (starts_index(t)) {
      // A lone cardinal is a cardinal literal; sums are ordinals.
      if (t.kind == Tok::Ident && t.text != "w" && peek_after_cardinal_is_end_of_arg()) return Ast{CardinalLiteral{cardinal()}};
      IndexOrdinal idx = index();
      if (idx.base() && idx.tail().is_zero()) return Ast{CardinalLiteral{*idx.base()}};
      return Ast{OrdinalLiteral{std::move(idx)}};
    }
    if (t.kind == Tok::Ident) {
      std::string name = next().text;
      if (peek().kind != Tok::LParen) return Ast{Symbol{std::move(name)}};
      next();
      std::vector<Ast> args;
      if (peek().kind != Tok::RParen) {
        args.push_back(argument());
        while (peek().kind == Tok::Comma) {
          next();
          args.push_back(argument());
        }
      }
      expect(Tok::RParen, "')'");
      return Ast{Query{std::move(name), std::move(args)}};
    }
    fail({"a query", "a cardinal", "an ordinal"});
  }

  // Looks past one cardinal term without consuming it.
  bool peek_after_cardinal_is_end_of_arg() {
    const std::size_t save = pos_;
    bool alone = false;
    try {
      cardinal();
      alone = peek().kind != Tok::Plus;
    } catch (const Error&) {
      alone = true;  // let the real parse report the error
    }
    pos_ = save;
    return alone;
  }

  CardinalExpr cardinal() {
    const Token& t = peek();
    if (t.kind == Tok::Ident) {
      if (t.text == "aleph") {
        next();
        expect(Tok::LParen, "'('");
        IndexOrdinal idx = index();
        expect(Tok::RParen, "')'");
        return CardinalExpr(std::move(idx));
      }
      if (is_aleph_sugar(t.text)) {
        const Token& tok = next();
        const std::string rest = tok.text.substr(6);
        if (rest == "w") return CardinalExpr::aleph(CnfOrdinal::omega());
        std::uint64_t v = 0;
        auto [p, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
        if (ec != std::errc{} || p != rest.data() + rest.size())
          throw ParseError(tok.line, tok.column, {"a natural number below 2^64"}, "'" + tok.text + "'");
        return CardinalExpr::aleph(v);
      }
      if (t.text == "inacc" || t.text == "atom") {
        const bool wi = next().text == "inacc";
        expect(Tok::LParen, "'('");
        std::string name = expect(Tok::Ident, "an atom name").text;
        std::uint32_t rank = 0;
        if (peek().kind == Tok::Comma) {
          next();
          const Token& rt = peek();
          const std::uint64_t r = natural();
          if (r > UINT32_MAX) throw ParseError(rt.line, rt.column, {"a rank below 2^32"}, "'" + rt.text + "'");
          rank = static_cast<std::uint32_t>(r);
        }
        expect(Tok::RParen, "')'");
        return CardinalExpr::atom(std::move(name), wi, rank);
      }
    }
    fail({"'aleph'", "'aleph_N'", "'inacc'", "'atom'"});
  }

  IndexOrdinal index() {
    IndexOrdinal acc = index_term();
    while (peek().kind == Tok::Plus) {
      next();
      const Token& at = peek();
      IndexOrdinal rhs = index_term();
      try {
        acc = index_add(acc, rhs);
      } catch (const ParseError&) {
        throw;
      } catch (const Error& e) {
        throw ParseError(at.line, at.column, {"a representable index"}, e.what());
      }
    }
    return acc;
  }

  IndexOrdinal index_term() {
    const Token& t = peek();
    if (t.kind == Tok::Nat) return IndexOrdinal(CnfOrdinal::natural(natural()));
    if (t.kind == Tok::Ident && t.text == "w") {
      next();
      CnfOrdinal exponent = CnfOrdinal::natural(1);
      if (peek().kind == Tok::Caret) {
        next();
        exponent = exponent_term();
      }
      std::uint64_t coeff = 1;
      if (peek().kind == Tok::Star) {
        next();
        const Token& ct = peek();
        coeff = natural();
        if (coeff == 0) throw ParseError(ct.line, ct.column, {"a positive coefficient"}, "'0'");
      }
      return IndexOrdinal(CnfOrdinal::omega_power(exponent, coeff));
    }
    if (t.kind == Tok::Ident && (t.text == "aleph" || is_aleph_sugar(t.text))) return IndexOrdinal(cardinal());
    if (t.kind == Tok::Ident && (t.text == "inacc" || t.text == "atom"))
      throw ParseError(t.line, t.column, {"an aleph index"}, "an atom (atoms cannot index alephs)");
    fail({"'w'", "a natural number", "'aleph'"});
  }

  CnfOrdinal exponent_term() {
    const Token& t = peek();
    if (t.kind == Tok::Nat) return CnfOrdinal::natural(natural());
    if (t.kind == Tok::Ident && t.text == "w") {
      next();
      return CnfOrdinal::omega();
    }
    if (t.kind == Tok::LParen) {
      next();
      const Token& inner = peek();
      IndexOrdinal e = index();
      if (e.base()) throw ParseError(inner.line, inner.column, {"a countable exponent"}, "'" + to_string(e) + "'");
      expect(Tok::RParen, "')'");
      return e.tail();
    }
    fail({"a natural number", "'w'", "'('"});
  }
};

}  // namespace

Ast parse(std::string_view source) { return Parser(source).session(); }

CardinalExpr parse_cardinal(std::string_view source) { return Parser(source).lone_cardinal(); }

}  // namespace aleph::dsl
