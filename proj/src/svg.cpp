#include "nodal/svg.hpp"

#include <sstream>

namespace nodal {

namespace {

const char* fill_for(signed char s) {
  if (s > 0) return "#d9534f";
  if (s < 0) return "#428bca";
  return "#dddddd";
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

} // namespace

std::string render_svg(const NodalExtract& e, const SvgOptions& opt) {
  const int px = opt.pixelsPerCell;
  const int W = e.cellsX * px, H = e.cellsY * px;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' '
      << H << "\">\n";
  if (!opt.title.empty()) out << "<title>" << escape(opt.title) << "</title>\n";
  out << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";

  // svg y grows downward; cell row j is drawn at H - (j+1)*px
  const auto state = [&](int i, int j) -> int {
    if (i < 0 || j < 0 || i >= e.cellsX || j >= e.cellsY) return 2;
    const int c = e.cell(i, j);
    return e.active[c] ? e.signField[c] : 2;
  };
  out << "<g stroke=\"none\">\n";
  for (int j = 0; j < e.cellsY; ++j) {
    int i = 0;
    while (i < e.cellsX) {
      const int s = state(i, j);
      int run = i + 1;
      while (run < e.cellsX && state(run, j) == s) ++run;
      if (s != 2)
        out << "<rect x=\"" << i * px << "\" y=\"" << H - (j + 1) * px << "\" width=\"" << (run - i) * px << "\" height=\""
            << px << "\" fill=\"" << fill_for(static_cast<signed char>(s)) << "\"/>\n";
      i = run;
    }
  }
  out << "</g>\n";

  out << "<g stroke-width=\"1.5\">\n";
  const auto crack = [&](int a, int b, int x1, int y1, int x2, int y2) {
    if (a == b) return;
    const bool edge = a == 2 || b == 2;
    if (!edge && (a == 0 || b == 0)) return;
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\" stroke=\""
        << (edge ? "black" : "#222222") << "\"" << (edge ? "" : " stroke-dasharray=\"3,1\"") << "/>\n";
  };
  for (int j = 0; j < e.cellsY; ++j)
    for (int i = 0; i <= e.cellsX; ++i) crack(state(i - 1, j), state(i, j), i * px, H - (j + 1) * px, i * px, H - j * px);
  for (int j = 0; j <= e.cellsY; ++j)
    for (int i = 0; i < e.cellsX; ++i) crack(state(i, j - 1), state(i, j), i * px, H - j * px, (i + 1) * px, H - j * px);
  out << "</g>\n";

  if (opt.markSingular) {
    const auto toX = [&](double x) { return (x - e.x0) / e.h * px; };
    const auto toY = [&](double y) { return H - (y - e.y0) / e.h * px; };
    for (const auto& p : e.interiorSingular)
      out << "<circle cx=\"" << toX(p.x) << "\" cy=\"" << toY(p.y) << "\" r=\"" << px * 1.5
          << "\" fill=\"none\" stroke=\"#2ca02c\" stroke-width=\"2\"><title>nu=" << p.nu << "</title></circle>\n";
    for (const auto& p : e.boundarySingular)
      out << "<circle cx=\"" << toX(p.x) << "\" cy=\"" << toY(p.y) << "\" r=\"" << px * 1.5
          << "\" fill=\"none\" stroke=\"#ff7f0e\" stroke-width=\"2\"><title>rho=" << p.rho << (p.lowerBound ? "+" : "")
          << "</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

} // namespace nodal
