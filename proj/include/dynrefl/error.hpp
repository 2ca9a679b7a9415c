#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dynrefl {

/// Raised for every structural or axiom failure. `kind()` is a stable
/// machine-readable tag (e.g. "RowNotPermutation"); `witness()` carries the
/// offending labels when there are any.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message,
        std::vector<std::string> witness = {})
      : std::runtime_error(message),
        kind_(std::move(kind)),
        witness_(std::move(witness)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  std::string kind_;
  std::vector<std::string> witness_;
};

}  // namespace dynrefl
