#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stokes {

/// Base of every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Shapes or dimensions of the arguments do not fit together.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index argument lies outside its admissible range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A request would exceed the configured dimension or node caps.
class CostCapError : public Error {
 public:
  using Error::Error;
};

/// Evaluation produced a non-finite number or needed unsupported nesting.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the mathematical input (ordering, adjacency) failed.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace stokes
