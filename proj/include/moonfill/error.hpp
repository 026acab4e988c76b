#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace moonfill {

enum class ErrorKind {
  EmptyShape,
  InvalidInterval,
  NotComparable,
  NotColumnConvex,
  MissingColumn,
  IndexOutOfRange,
  InfeasibleSums,
  InvalidFilling,
  CellOutsideShape,
  MalformedComposition,
  NotARectangle,
  NoPivotFound,
  ShapeMismatch,
  LetterOutOfRange,
  InvalidEndpointSets,
  InexactDivision,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `indices()` carries the offending
/// row/column/letter indices (1-based) where the kind has any.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<int> indices = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<int>& indices() const noexcept { return indices_; }

 private:
  ErrorKind kind_;
  std::vector<int> indices_;
};

}  // namespace moonfill
