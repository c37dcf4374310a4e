#pragma once

// Ordinals below epsilon_0 in Cantor normal form, index ordinals of the shape
// omega_kappa + tail, and symbolic infinite cardinals aleph_{index}.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aleph {

enum class Ordering { Less, Equal, Greater };

Ordering to_ordering(std::strong_ordering o);

struct CnfTerm;

/// An ordinal below epsilon_0, stored as w^e1*c1 + ... + w^ek*ck with
/// e1 > ... > ek and every ci >= 1. The empty sequence is 0.
class CnfOrdinal {
 public:
  CnfOrdinal() = default;

  static CnfOrdinal natural(std::uint64_t n);
  static CnfOrdinal omega();
  static CnfOrdinal omega_power(const CnfOrdinal& exponent, std::uint64_t coefficient = 1);
  // Throws aleph::Error if the terms are not in normal form.
  static CnfOrdinal from_terms(std::vector<CnfTerm> terms);

  std::span<const CnfTerm> terms() const;
  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  // Value of a finite ordinal; throws if infinite.
  std::uint64_t finite_value() const;

  friend bool operator==(const CnfOrdinal& a, const CnfOrdinal& b);
  friend std::strong_ordering operator<=>(const CnfOrdinal& a, const CnfOrdinal& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  CnfOrdinal exponent;
  std::uint64_t coefficient = 1;

  friend bool operator==(const CnfTerm&, const CnfTerm&) = default;
};

Ordering cnf_compare(const CnfOrdinal& a, const CnfOrdinal& b);
CnfOrdinal cnf_add(const CnfOrdinal& a, const CnfOrdinal& b);

struct OrdinalClass {
  enum Kind { Zero, Successor, Limit };
  Kind kind = Zero;
  std::optional<CnfOrdinal> pred;  // set exactly for successors
};

OrdinalClass ord_classify(const CnfOrdinal& a);

class CardinalExpr;

/// The ordinal omega_base + tail (or just tail when there is no base). The
/// base is an uncountable non-atom cardinal read as its initial ordinal; an
/// aleph_0 base is folded into the tail, so the representation is unique.
class IndexOrdinal {
 public:
  IndexOrdinal() = default;
  explicit IndexOrdinal(CnfOrdinal tail);
  IndexOrdinal(const CardinalExpr& base, CnfOrdinal tail = {});

  const CardinalExpr* base() const { return base_.get(); }
  const CnfOrdinal& tail() const { return tail_; }
  bool is_zero() const { return !base_ && tail_.is_zero(); }

  friend bool operator==(const IndexOrdinal& a, const IndexOrdinal& b);
  friend std::strong_ordering operator<=>(const IndexOrdinal& a, const IndexOrdinal& b);

 private:
  std::shared_ptr<const CardinalExpr> base_;
  CnfOrdinal tail_;
};

IndexOrdinal index_add(const IndexOrdinal& a, const IndexOrdinal& b);

/// Named large-cardinal symbol. Atoms sit above every aleph expression and are
/// ordered among themselves by (rank, name).
struct Atom {
  std::string name;
  bool weakly_inaccessible = false;
  std::uint32_t rank = 0;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// An infinite cardinal: aleph_{index} or an opaque atom.
class CardinalExpr {
 public:
  // aleph_0
  CardinalExpr() = default;
  explicit CardinalExpr(IndexOrdinal index) : index_(std::move(index)) {}

  static CardinalExpr aleph(std::uint64_t n);
  static CardinalExpr aleph(CnfOrdinal tail);
  static CardinalExpr aleph(const CardinalExpr& base, CnfOrdinal tail = {});
  static CardinalExpr atom(std::string name, bool weakly_inaccessible, std::uint32_t rank = 0);

  bool is_atom() const { return atom_.has_value(); }
  const Atom& atom_info() const;
  // Throws for atoms.
  const IndexOrdinal& index() const;
  bool is_aleph0() const { return !atom_ && index_.is_zero(); }

  friend bool operator==(const CardinalExpr& a, const CardinalExpr& b);
  friend std::strong_ordering operator<=>(const CardinalExpr& a, const CardinalExpr& b);

 private:
  IndexOrdinal index_;
  std::optional<Atom> atom_;
};

Ordering card_compare(const CardinalExpr& a, const CardinalExpr& b);

struct CardinalClass {
  enum Kind { SuccessorCard, LimitCard };
  Kind kind = LimitCard;
  std::optional<CardinalExpr> pred;
};

CardinalClass card_index_classify(const CardinalExpr& a);

const CardinalExpr& max_card(const CardinalExpr& a, const CardinalExpr& b);
const CardinalExpr& min_card(const CardinalExpr& a, const CardinalExpr& b);

// Canonical DSL text: "w*2+1", "aleph(w+1)", "aleph(aleph(1)+w)", "inacc(theta)".
std::string to_string(const CnfOrdinal& a);
std::string to_string(const IndexOrdinal& a);
std::string to_string(const CardinalExpr& c);

}  // namespace aleph
