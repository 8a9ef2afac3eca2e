#pragma once

#include <stdexcept>

namespace rsplit {

/// Caller violated an operation's contract (bad vertex, mismatched universe).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed graph or hypergraph text.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Instance exceeds the exhaustive-search cap.
class too_large_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A family presented as r-closed is not.
class not_closed_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypothesis required by a whole-structure check does not hold
/// (graph not r-rank connected, family not r-cross-free).
class precondition_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rsplit
