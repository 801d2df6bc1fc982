#pragma once

#include <stdexcept>
#include <string>

namespace blowcone {

/// Malformed textual input (rational strings, problem documents).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A class vector whose length does not match the space's center count.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested (n, r) pair or center kind is not covered by a known
/// description of the cone or formula.
class OutOfRangeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A formula that is only valid for ample classes was asked about a
/// non-ample one.
class NotAmpleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace blowcone
