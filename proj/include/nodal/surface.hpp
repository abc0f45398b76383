#pragma once

#include <string>

namespace nodal {

enum class SurfaceKind { ClosedOrientable, ClosedNonOrientable, PlanarDomain, MoebiusStrip };

// A compact surface up to homeomorphism. `param` is the genus, the number of
// cross-caps or the number of holes depending on `kind`; it is 0 for the Moebius strip.
struct SurfaceSpec {
  SurfaceKind kind = SurfaceKind::ClosedOrientable;
  int param = 0;

  static SurfaceSpec sphere() { return {SurfaceKind::ClosedOrientable, 0}; }
  static SurfaceSpec closed_orientable(int genus) { return {SurfaceKind::ClosedOrientable, genus}; }
  static SurfaceSpec closed_nonorientable(int crossCaps) { return {SurfaceKind::ClosedNonOrientable, crossCaps}; }
  static SurfaceSpec planar(int holes) { return {SurfaceKind::PlanarDomain, holes}; }
  static SurfaceSpec moebius() { return {SurfaceKind::MoebiusStrip, 0}; }

  bool operator==(const SurfaceSpec&) const = default;
};

// Throws MalformedInput when the parameter is out of range for the kind.
void validate(const SurfaceSpec& spec);

int euler_characteristic(const SurfaceSpec& spec);

// Number of boundary circles of the surface.
int boundary_components(const SurfaceSpec& spec);

bool has_boundary(const SurfaceSpec& spec);
bool is_orientable(const SurfaceSpec& spec);

// The closed surface obtained by capping every boundary circle with a disk:
// a planar domain caps to the sphere, the Moebius strip to the projective plane.
SurfaceSpec closed_model(const SurfaceSpec& spec);

std::string kind_name(SurfaceKind kind);
SurfaceKind kind_from_name(const std::string& name);
std::string describe(const SurfaceSpec& spec);

// Short names: sphere, torus, projective-plane, klein-bottle, disk, annulus,
// moebius, genus:G, crosscaps:C, planar:Q.
SurfaceSpec surface_from_name(const std::string& name);

} // namespace nodal
