#pragma once

// Plain-text matrix format shared by every tool:
//
//   m n
//   a11 a12 ... a1n
//   ...
//   am1 am2 ... amn
//
// Lines starting with '#' are comments. The extended form used for
// polyhedra and standard-form programs appends `b: v1 ... vm` and optionally
// `c: v1 ... vn` after the matrix block.

#include <iosfwd>
#include <optional>
#include <string>

#include "dmsvp/scalar.hpp"

namespace dmsvp {

struct MatrixDocument {
  IntMatrix a;
  std::optional<IntVector> b;
  std::optional<IntVector> c;
};

MatrixDocument parse_document(std::istream& in);
MatrixDocument parse_document(const std::string& text);

/// Parses a bare matrix; trailing b:/c: lines are rejected.
IntMatrix parse_matrix(const std::string& text);

MatrixDocument read_document_file(const std::string& path);
IntMatrix read_matrix_file(const std::string& path);

/// Canonical rendering: header line then one row per line, single spaces,
/// trailing newline.
std::string format_matrix(const IntMatrix& a);
std::string format_vector_line(const std::string& tag, const IntVector& v);
std::string format_document(const MatrixDocument& doc);

std::string format_row(const IntVector& v);

}  // namespace dmsvp
