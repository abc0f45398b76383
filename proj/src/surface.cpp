#include "nodal/surface.hpp"

#include "nodal/errors.hpp"

#include <cctype>

namespace nodal {

void validate(const SurfaceSpec& spec) {
  switch (spec.kind) {
  case SurfaceKind::ClosedOrientable:
    if (spec.param < 0) throw MalformedInput("genus must be nonnegative");
    break;
  case SurfaceKind::ClosedNonOrientable:
    if (spec.param < 1) throw MalformedInput("cross-cap count must be positive");
    break;
  case SurfaceKind::PlanarDomain:
    if (spec.param < 0) throw MalformedInput("hole count must be nonnegative");
    break;
  case SurfaceKind::MoebiusStrip:
    if (spec.param != 0) throw MalformedInput("the Moebius strip takes no parameter");
    break;
  }
}

int euler_characteristic(const SurfaceSpec& spec) {
  validate(spec);
  switch (spec.kind) {
  case SurfaceKind::ClosedOrientable: return 2 - 2 * spec.param;
  case SurfaceKind::ClosedNonOrientable: return 2 - spec.param;
  case SurfaceKind::PlanarDomain: return 1 - spec.param;
  case SurfaceKind::MoebiusStrip: return 0;
  }
  return 0;
}

int boundary_components(const SurfaceSpec& spec) {
  switch (spec.kind) {
  case SurfaceKind::PlanarDomain: return spec.param + 1;
  case SurfaceKind::MoebiusStrip: return 1;
  default: return 0;
  }
}

bool has_boundary(const SurfaceSpec& spec) { return boundary_components(spec) > 0; }

bool is_orientable(const SurfaceSpec& spec) {
  return spec.kind == SurfaceKind::ClosedOrientable || spec.kind == SurfaceKind::PlanarDomain;
}

SurfaceSpec closed_model(const SurfaceSpec& spec) {
  switch (spec.kind) {
  case SurfaceKind::PlanarDomain: return SurfaceSpec::sphere();
  case SurfaceKind::MoebiusStrip: return SurfaceSpec::closed_nonorientable(1);
  default: return spec;
  }
}

std::string kind_name(SurfaceKind kind) {
  switch (kind) {
  case SurfaceKind::ClosedOrientable: return "ClosedOrientable";
  case SurfaceKind::ClosedNonOrientable: return "ClosedNonOrientable";
  case SurfaceKind::PlanarDomain: return "PlanarDomain";
  case SurfaceKind::MoebiusStrip: return "MoebiusStrip";
  }
  return "?";
}

SurfaceKind kind_from_name(const std::string& name) {
  if (name == "ClosedOrientable") return SurfaceKind::ClosedOrientable;
  if (name == "ClosedNonOrientable") return SurfaceKind::ClosedNonOrientable;
  if (name == "PlanarDomain") return SurfaceKind::PlanarDomain;
  if (name == "MoebiusStrip") return SurfaceKind::MoebiusStrip;
  throw MalformedInput("unknown surface kind '" + name + "'");
}

SurfaceSpec surface_from_name(const std::string& text) {
  std::string name;
  for (char c : text) name += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const auto sep = name.find_first_of(":=");
  const std::string head = name.substr(0, sep);
  int n = 0;
  if (sep != std::string::npos) {
    try {
      size_t used = 0;
      n = std::stoi(name.substr(sep + 1), &used);
      if (used != name.size() - sep - 1) throw MalformedInput("");
    } catch (const std::exception&) {
      throw MalformedInput("bad surface parameter in '" + text + "'");
    }
  }
  const bool param = sep != std::string::npos;
  SurfaceSpec s;
  if (!param && (head == "sphere" || head == "s2")) s = SurfaceSpec::sphere();
  else if (!param && (head == "torus" || head == "t2")) s = SurfaceSpec::closed_orientable(1);
  else if (!param && (head == "projective-plane" || head == "rp2")) s = SurfaceSpec::closed_nonorientable(1);
  else if (!param && (head == "klein-bottle" || head == "klein" || head == "k2")) s = SurfaceSpec::closed_nonorientable(2);
  else if (!param && head == "disk") s = SurfaceSpec::planar(0);
  else if (!param && head == "annulus") s = SurfaceSpec::planar(1);
  else if (!param && (head == "moebius" || head == "mobius")) s = SurfaceSpec::moebius();
  else if (param && (head == "genus" || head == "orientable")) s = SurfaceSpec::closed_orientable(n);
  else if (param && (head == "crosscaps" || head == "nonorientable")) s = SurfaceSpec::closed_nonorientable(n);
  else if (param && head == "planar") s = SurfaceSpec::planar(n);
  else throw MalformedInput("unknown surface '" + text + "'");
  validate(s);
  return s;
}

std::string describe(const SurfaceSpec& spec) {
  if (spec.kind == SurfaceKind::MoebiusStrip) return kind_name(spec.kind);
  return kind_name(spec.kind) + "(" + std::to_string(spec.param) + ")";
}

} // namespace nodal
