#include "aleph/ordinal.hpp"

#include <algorithm>
#include <limits>

#include "aleph/error.hpp"

namespace aleph {

Ordering to_ordering(std::strong_ordering o) {
  if (o < 0) return Ordering::Less;
  if (o > 0) return Ordering::Greater;
  return Ordering::Equal;
}

// ---------------------------------------------------------------------------
// CnfOrdinal

CnfOrdinal CnfOrdinal::natural(std::uint64_t n) {
  CnfOrdinal r;
  if (n > 0) r.terms_.push_back(CnfTerm{CnfOrdinal{}, n});
  return r;
}

CnfOrdinal CnfOrdinal::omega() { return omega_power(natural(1)); }

CnfOrdinal CnfOrdinal::omega_power(const CnfOrdinal& exponent, std::uint64_t coefficient) {
  if (coefficient == 0) throw Error("CNF coefficient must be positive");
  CnfOrdinal r;
  r.terms_.push_back(CnfTerm{exponent, coefficient});
  return r;
}

CnfOrdinal CnfOrdinal::from_terms(std::vector<CnfTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient == 0) throw Error("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw Error("CNF exponents must strictly decrease");
  }
  CnfOrdinal r;
  r.terms_ = std::move(terms);
  return r;
}

std::span<const CnfTerm> CnfOrdinal::terms() const { return terms_; }

bool CnfOrdinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t CnfOrdinal::finite_value() const {
  if (!is_finite()) throw Error("ordinal " + to_string(*this) + " is not finite");
  return terms_.empty() ? 0 : terms_[0].coefficient;
}

bool operator==(const CnfOrdinal& a, const CnfOrdinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const CnfTerm& x = a.terms_[i];
    const CnfTerm& y = b.terms_[i];
    if (auto c = x.exponent <=> y.exponent; c != 0) return c;
    if (auto c = x.coefficient <=> y.coefficient; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b) { return to_ordering(a <=> b); }

CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b) {
  if (b.is_zero()) return a;
  const auto bt = b.terms();
  const CnfOrdinal& lead = bt.front().exponent;

  std::vector<CnfTerm> out;
  for (const CnfTerm& t : a.terms()) {
    if (t.exponent > lead) {
      out.push_back(t);
    } else if (t.exponent == lead) {
      // Merge with b's leading term; everything after it in a is absorbed.
      if (t.coefficient > std::numeric_limits<std::uint64_t>::max() - bt.front().coefficient)
        throw Error("CNF coefficient overflow");
      out.push_back(CnfTerm{lead, t.coefficient + bt.front().coefficient});
      out.insert(out.end(), bt.begin() + 1, bt.end());
      return CnfOrdinal::from_terms(std::move(out));
    } else {
      break;
    }
  }
  out.insert(out.end(), bt.begin(), bt.end());
  return CnfOrdinal::from_terms(std::move(out));
}

OrdinalClass ord_classify(const CnfOrdinal& a) {
  if (a.is_zero()) return {OrdinalClass::Zero, std::nullopt};
  const auto t = a.terms();
  const CnfTerm& last = t.back();
  if (!last.exponent.is_zero()) return {OrdinalClass::Limit, std::nullopt};

  std::vector<CnfTerm> pred(t.begin(), t.end());
  if (last.coefficient == 1) {
    pred.pop_back();
  } else {
    pred.back().coefficient -= 1;
  }
  return {OrdinalClass::Successor, CnfOrdinal::from_terms(std::move(pred))};
}

// ---------------------------------------------------------------------------
// IndexOrdinal

IndexOrdinal::IndexOrdinal(CnfOrdinal tail) : tail_(std::move(tail)) {}

IndexOrdinal::IndexOrdinal(const CardinalExpr& base, CnfOrdinal tail) : tail_(std::move(tail)) {
  if (base.is_atom()) throw Error("an atom cannot be used as an aleph index");
  if (base.is_aleph0()) {
    // omega_0 + t = w + t
    tail_ = cnf_add(CnfOrdinal::omega(), tail_);
    return;
  }
  base_ = std::make_shared<const CardinalExpr>(base);
}

bool operator==(const IndexOrdinal& a, const IndexOrdinal& b) {
  if (static_cast<bool>(a.base_) != static_cast<bool>(b.base_)) return false;
  if (a.base_ && !(*a.base_ == *b.base_)) return false;
  return a.tail_ == b.tail_;
}

std::strong_ordering operator<=>(const IndexOrdinal& a, const IndexOrdinal& b) {
  // Every base is uncountable and every tail countable, so the pair ordering
  // (base, tail) is the ordinal ordering.
  if (a.base_ && !b.base_) return std::strong_ordering::greater;
  if (!a.base_ && b.base_) return std::strong_ordering::less;
  if (a.base_) {
    if (auto c = *a.base_ <=> *b.base_; c != 0) return c;
  }
  return a.tail_ <=> b.tail_;
}

IndexOrdinal index_add(const IndexOrdinal& a, const IndexOrdinal& b) {
  if (!b.base()) {
    if (a.base()) return IndexOrdinal(*a.base(), cnf_add(a.tail(), b.tail()));
    return IndexOrdinal(cnf_add(a.tail(), b.tail()));
  }
  if (a.base() && !(*a.base() < *b.base()))
    throw Error("index " + to_string(a) + " + " + to_string(b) + " is not representable");
  return b;
}

// ---------------------------------------------------------------------------
// CardinalExpr

CardinalExpr CardinalExpr::aleph(std::uint64_t n) { return CardinalExpr(IndexOrdinal(CnfOrdinal::natural(n))); }

CardinalExpr CardinalExpr::aleph(CnfOrdinal tail) { return CardinalExpr(IndexOrdinal(std::move(tail))); }

CardinalExpr CardinalExpr::aleph(const CardinalExpr& base, CnfOrdinal tail) {
  return CardinalExpr(IndexOrdinal(base, std::move(tail)));
}

CardinalExpr CardinalExpr::atom(std::string name, bool weakly_inaccessible, std::uint32_t rank) {
  if (name.empty()) throw Error("atom name must be non-empty");
  CardinalExpr c;
  c.atom_ = Atom{std::move(name), weakly_inaccessible, rank};
  return c;
}

const Atom& CardinalExpr::atom_info() const {
  if (!atom_) throw Error(to_string(*this) + " is not an atom");
  return *atom_;
}

const IndexOrdinal& CardinalExpr::index() const {
  if (atom_) throw Error("atom " + atom_->name + " has no aleph index");
  return index_;
}

bool operator==(const CardinalExpr& a, const CardinalExpr& b) {
  if (a.atom_ || b.atom_) return a.atom_ == b.atom_;
  return a.index_ == b.index_;
}

std::strong_ordering operator<=>(const CardinalExpr& a, const CardinalExpr& b) {
  if (a.atom_ && b.atom_) {
    if (auto c = a.atom_->rank <=> b.atom_->rank; c != 0) return c;
    if (auto c = a.atom_->name <=> b.atom_->name; c != 0) return c;
    return a.atom_->weakly_inaccessible <=> b.atom_->weakly_inaccessible;
  }
  if (a.atom_) return std::strong_ordering::greater;
  if (b.atom_) return std::strong_ordering::less;
  return a.index_ <=> b.index_;
}

Ordering card_compare(const CardinalExpr& a, const CardinalExpr& b) { return to_ordering(a <=> b); }

CardinalClass card_index_classify(const CardinalExpr& a) {
  if (a.is_atom()) {
    if (a.atom_info().weakly_inaccessible) return {CardinalClass::LimitCard, std::nullopt};
    throw Error("unclassified atom " + a.atom_info().name);
  }
  const IndexOrdinal& idx = a.index();
  OrdinalClass tail = ord_classify(idx.tail());
  if (tail.kind != OrdinalClass::Successor) return {CardinalClass::LimitCard, std::nullopt};
  IndexOrdinal pred = idx.base() ? IndexOrdinal(*idx.base(), *tail.pred) : IndexOrdinal(*tail.pred);
  return {CardinalClass::SuccessorCard, CardinalExpr(std::move(pred))};
}

const CardinalExpr& max_card(const CardinalExpr& a, const CardinalExpr& b) { return a < b ? b : a; }

const CardinalExpr& min_card(const CardinalExpr& a, const CardinalExpr& b) { return b < a ? b : a; }

// ---------------------------------------------------------------------------
// Rendering

namespace {

std::string exponent_text(const CnfOrdinal& e) {
  if (e.is_finite()) return std::to_string(e.finite_value());
  if (e == CnfOrdinal::omega()) return "w";
  return "(" + to_string(e) + ")";
}

}  // namespace

std::string to_string(const CnfOrdinal& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (const CnfTerm& t : a.terms()) {
    if (!out.empty()) out += "+";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += "w";
    if (t.exponent != CnfOrdinal::natural(1)) out += "^" + exponent_text(t.exponent);
    if (t.coefficient != 1) out += "*" + std::to_string(t.coefficient);
  }
  return out;
}

std::string to_string(const IndexOrdinal& a) {
  if (!a.base()) return to_string(a.tail());
  std::string out = to_string(*a.base());
  if (!a.tail().is_zero()) out += "+" + to_string(a.tail());
  return out;
}

std::string to_string(const CardinalExpr& c) {
  if (c.is_atom()) {
    const Atom& at = c.atom_info();
    std::string out = at.weakly_inaccessible ? "inacc(" : "atom(";
    out += at.name;
    if (at.rank != 0) out += ", " + std::to_string(at.rank);
    return out + ")";
  }
  return "aleph(" + to_string(c.index()) + ")";
}

}  // namespace aleph
