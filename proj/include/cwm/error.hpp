#pragma once

#include <stdexcept>
#include <string>

namespace cwm {

/// Bad input or a request outside the supported domain (non-generic
/// linkage, inadmissible label, size guardrail).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural statement that must hold for every correctly built complex
/// failed. Seeing one of these means a bug, not bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cwm
