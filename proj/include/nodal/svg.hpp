#pragma once

#include "nodal/nodal_extract.hpp"

#include <string>

namespace nodal {

struct SvgOptions {
  int pixelsPerCell = 6;
  bool markSingular = true;
  std::string title;
};

// Sign map of the active cells, nodal and boundary cracks, and singular points.
std::string render_svg(const NodalExtract& e, const SvgOptions& opt = {});

} // namespace nodal
