#include "nodal/type_text.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <sstream>

namespace nodal {

namespace {

bool is_down(const std::string& s) { return s == kDownArrow || s == "down" || s == "\\downarrow"; }

std::string normalize_token(std::string s) {
  if (is_down(s)) return kDownArrow;
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == '_' || c == '{' || c == '}' || c == '$'; }), s.end());
  return s;
}

bool parse_int(const std::string& s, int& out) {
  if (s.empty()) return false;
  size_t pos = 0;
  try {
    out = std::stoi(s, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == s.size();
}

std::vector<std::string> tokens(std::string line) {
  for (auto& c : line)
    if (c == '&') c = ' ';
  // Drop LaTeX row terminators.
  for (size_t p; (p = line.find("\\\\")) != std::string::npos;) line.replace(p, 2, " ");
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(normalize_token(t));
  return out;
}

int to_int(const std::string& s, const char* row) {
  int v;
  if (!parse_int(s, v)) throw MalformedInput(std::string("non-integer token '") + s + "' in " + row + " row");
  return v;
}

} // namespace

TypeMatrix parse_type_matrix(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto t = tokens(line);
    if (!t.empty()) rows.push_back(std::move(t));
  }
  if (rows.size() != 2) throw MalformedInput("type matrix needs exactly two rows, got " + std::to_string(rows.size()));
  if (rows[0].size() != rows[1].size()) throw MalformedInput("type matrix rows differ in length");
  return {rows[0], rows[1]};
}

std::string format_type_matrix(const TypeMatrix& m) {
  size_t width = 1;
  for (const auto* row : {&m.top, &m.bottom})
    for (const auto& t : *row) width = std::max(width, t == kDownArrow ? size_t{1} : t.size());
  std::string out;
  for (const auto* row : {&m.top, &m.bottom}) {
    for (size_t i = 0; i < row->size(); ++i) {
      const auto& t = (*row)[i];
      const size_t shown = t == kDownArrow ? 1 : t.size();
      if (i) out += ' ';
      out += std::string(width - shown, ' ') + t;
    }
    out += '\n';
  }
  return out;
}

MatrixKind classify(const TypeMatrix& m) {
  int dummy;
  bool down = false;
  for (const auto* row : {&m.top, &m.bottom})
    for (const auto& t : *row) {
      if (is_down(t)) down = true;
      else if (!parse_int(t, dummy)) return MatrixKind::SiteSymbols;
    }
  return down ? MatrixKind::Boundary : MatrixKind::Interior;
}

const char* kind_name(MatrixKind k) {
  switch (k) {
    case MatrixKind::Interior: return "interior";
    case MatrixKind::Boundary: return "boundary";
    case MatrixKind::SiteSymbols: return "site-symbols";
  }
  return "?";
}

InteriorType interior_from_matrix(const TypeMatrix& m, IndexBase* detected) {
  if (classify(m) != MatrixKind::Interior) throw InvalidType("matrix is not an interior type");
  const int n = static_cast<int>(m.top.size());
  if (n == 0 || n % 2) throw InvalidType("interior type needs an even positive number of rays");
  std::vector<int> top(n), bottom(n);
  for (int i = 0; i < n; ++i) {
    top[i] = to_int(m.top[i], "first");
    bottom[i] = to_int(m.bottom[i], "second");
  }
  const int base = *std::min_element(top.begin(), top.end());
  if (base != 0 && base != 1) throw InvalidType("first row must start at 0 or 1");
  InteriorType t{n / 2, std::vector<int>(n, -1)};
  for (int i = 0; i < n; ++i) {
    const int a = top[i] - base, b = bottom[i] - base;
    if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidType("entry out of range");
    if (t.tau[a] != -1) throw InvalidType("ray " + m.top[i] + " listed twice");
    t.tau[a] = b;
  }
  if (detected) *detected = base ? IndexBase::One : IndexBase::Zero;
  const Validity v = validate_interior(t);
  if (!v.valid) throw InvalidType(v.violations.front());
  return t;
}

BoundaryType boundary_from_matrix(const TypeMatrix& m) {
  if (classify(m) != MatrixKind::Boundary) throw InvalidType("matrix is not a boundary type");
  const int cols = static_cast<int>(m.top.size());
  if (cols < 4 || cols % 2) throw InvalidType("boundary type needs 2k-2 columns with k >= 3");
  BoundaryType t;
  t.k = (cols + 2) / 2;
  t.tau.assign(t.ray_count(), -2);
  int arc = -1;
  bool sawDown = false;
  for (int i = 0; i < cols; ++i) {
    if (is_down(m.top[i])) {
      if (sawDown) throw InvalidType("down arrow listed twice");
      sawDown = true;
      arc = to_int(m.bottom[i], "second") - 1;
      continue;
    }
    const int r = to_int(m.top[i], "first") - 1;
    if (r < 0 || r >= t.ray_count()) throw InvalidType("ray " + m.top[i] + " out of range");
    if (t.tau[r] != -2) throw InvalidType("ray " + m.top[i] + " listed twice");
    t.tau[r] = is_down(m.bottom[i]) ? -1 : to_int(m.bottom[i], "second") - 1;
  }
  if (!sawDown || arc < 0 || arc >= t.ray_count() || t.tau[arc] != -1)
    throw InvalidType("the down arrow and its arc must map to each other");
  t.arc = arc;
  const Validity v = validate_boundary(t);
  if (!v.valid) throw InvalidType(v.violations.front());
  return t;
}

TypeMatrix to_matrix(const InteriorType& t, IndexBase base) {
  const int off = static_cast<int>(base);
  TypeMatrix m;
  for (int i = 0; i < static_cast<int>(t.tau.size()); ++i) {
    m.top.push_back(std::to_string(i + off));
    m.bottom.push_back(std::to_string(t.tau[i] + off));
  }
  return m;
}

TypeMatrix to_matrix(const BoundaryType& t) {
  TypeMatrix m;
  m.top.push_back(kDownArrow);
  m.bottom.push_back(std::to_string(t.arc + 1));
  for (int r = 0; r < t.ray_count(); ++r) {
    m.top.push_back(std::to_string(r + 1));
    m.bottom.push_back(t.tau[r] < 0 ? std::string(kDownArrow) : std::to_string(t.tau[r] + 1));
  }
  return m;
}

} // namespace nodal
