#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

// Every checked failure carries a stable machine-readable code plus the
// witness indices that exhibit it (empty when there is none).  Codes in use:
//   not-latin-square, no-identity, no-inverse, non-associative, not-abelian,
//   additive-failure, multiplicative-failure, left-law, right-law,
//   degree-mismatch, width-mismatch, not-two-sided, not-ideal, not-invariant,
//   not-solution, not-square-free-brace, not-p-group, size-cap,
//   star-not-associative, star-not-distributive, circle-not-group,
//   decomposition-invalid, eta-invalid, parse-error, theorem-violation,
//   internal
class ValidationError : public std::runtime_error {
public:
  ValidationError(std::string code, std::string message, std::vector<int> witness = {})
      : std::runtime_error(message + witness_suffix(witness)),
        code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string &code() const { return code_; }
  const std::vector<int> &witness() const { return witness_; }

private:
  static std::string witness_suffix(const std::vector<int> &w) {
    if (w.empty()) return {};
    std::string s = " [witness:";
    for (int x : w) s += " " + std::to_string(x);
    return s + "]";
  }

  std::string code_;
  std::vector<int> witness_;
};

// Violations of facts the underlying theory guarantees.  Reaching one of
// these means a bug in this library or corrupted input, never a legitimate
// runtime condition.
inline ValidationError internal_error(const std::string &message, std::vector<int> witness = {}) {
  return ValidationError("internal", "internal invariant violated: " + message, std::move(witness));
}

}  // namespace ybe
