#include "moonfill/error.hpp"

namespace moonfill {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyShape: return "EmptyShape";
    case ErrorKind::InvalidInterval: return "InvalidInterval";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::NotColumnConvex: return "NotColumnConvex";
    case ErrorKind::MissingColumn: return "MissingColumn";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InfeasibleSums: return "InfeasibleSums";
    case ErrorKind::InvalidFilling: return "InvalidFilling";
    case ErrorKind::CellOutsideShape: return "CellOutsideShape";
    case ErrorKind::MalformedComposition: return "MalformedComposition";
    case ErrorKind::NotARectangle: return "NotARectangle";
    case ErrorKind::NoPivotFound: return "NoPivotFound";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorKind::InvalidEndpointSets: return "InvalidEndpointSets";
    case ErrorKind::InexactDivision: return "InexactDivision";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<int> indices)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      indices_(std::move(indices)) {}

}  // namespace moonfill
