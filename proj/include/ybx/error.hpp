#pragma once

#include <stdexcept>
#include <string>

namespace ybx {

// An input violates an operation's precondition (wrong shape, wrong size,
// out-of-range parameter).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An algebraic law failed while validating a structure; the message carries
// the witness.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A computation was refused because it would exceed a configured bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ybx
