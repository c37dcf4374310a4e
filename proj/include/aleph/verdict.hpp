#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "aleph/error.hpp"

namespace aleph {

// Labels of the declared hypotheses a result depends on, in first-use order.
using Basis = std::vector<std::string>;

inline void merge_basis(Basis& into, const Basis& from) {
  for (const auto& b : from)
    if (std::find(into.begin(), into.end(), b) == into.end()) into.push_back(b);
}

template <class T>
struct Determined {
  T value;
  Basis basis;
};

struct Independent {
  // Never empty: names every undecided sub-predicate.
  std::vector<std::string> missing;
};

/// A hypothesis-relative answer. Absence of a hypothesis never yields a
/// negative answer; it yields Independent.
template <class T>
class Verdict {
 public:
  Verdict(Determined<T> d) : v_(std::move(d)) {}
  Verdict(Independent i) : v_(std::move(i)) {
    if (std::get<Independent>(v_).missing.empty()) throw Error("Independent verdict without a missing assumption");
  }

  bool determined() const { return std::holds_alternative<Determined<T>>(v_); }
  bool independent() const { return !determined(); }

  const T& value() const {
    if (!determined()) throw Error("verdict is independent");
    return std::get<Determined<T>>(v_).value;
  }
  const Basis& basis() const {
    static const Basis none;
    return determined() ? std::get<Determined<T>>(v_).basis : none;
  }
  const std::vector<std::string>& missing() const {
    static const std::vector<std::string> none;
    return determined() ? none : std::get<Independent>(v_).missing;
  }

  bool is(const T& v) const { return determined() && value() == v; }

 private:
  std::variant<Determined<T>, Independent> v_;
};

template <class T>
Verdict<T> determined(T value, Basis basis = {}) {
  return Determined<T>{std::move(value), std::move(basis)};
}

inline Independent independent(std::string missing) { return Independent{{std::move(missing)}}; }

}  // namespace aleph
