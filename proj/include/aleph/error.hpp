#pragma once

#include <stdexcept>
#include <string>

namespace aleph {

// Raised for precondition violations and unrepresentable results. Verdicts
// that depend on undeclared hypotheses are *not* errors; see Verdict.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace aleph
