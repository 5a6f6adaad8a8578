#pragma once

#include <stdexcept>
#include <string>

namespace kbh {

/// Malformed input: bad file syntax, wrong shapes, unknown fields.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structure violates one of its defining identities (d^2 != 0, ...).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dimension data that no geometric input could have produced
/// (negative blow-up dimensions, failed Euler consistency, cap overflow).
class InconsistentData : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kbh
