#pragma once

#include "nodal/comb_type.hpp"

#include <string>
#include <vector>

namespace nodal {

// Two-row matrix notation: the first row lists the rays (and the down arrow or
// site symbols such as s, s1), the second row their images. Entries are kept as
// tokens so that the s/s1 matrices of two-point configurations round-trip as data.
struct TypeMatrix {
  std::vector<std::string> top;
  std::vector<std::string> bottom;

  bool operator==(const TypeMatrix&) const = default;
};

enum class MatrixKind { Interior, Boundary, SiteSymbols };

inline const char* kDownArrow = "\xE2\x86\x93";

// Rows are the first two non-blank lines not starting with '#'. Tokens are separated by
// whitespace or '&'; "↓", "down" and "\downarrow" denote the arrow, "s_1" reads as "s1".
TypeMatrix parse_type_matrix(const std::string& text);
std::string format_type_matrix(const TypeMatrix& m);

MatrixKind classify(const TypeMatrix& m);
const char* kind_name(MatrixKind k);

// Index base is detected from the smallest entry of the first row.
InteriorType interior_from_matrix(const TypeMatrix& m, IndexBase* detected = nullptr);
BoundaryType boundary_from_matrix(const TypeMatrix& m); // one-based rays

TypeMatrix to_matrix(const InteriorType& t, IndexBase base = IndexBase::Zero);
TypeMatrix to_matrix(const BoundaryType& t);

} // namespace nodal
