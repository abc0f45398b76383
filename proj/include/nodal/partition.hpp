#pragma once

#include "nodal/surface.hpp"

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace nodal {

using Rational = boost::rational<long long>;

std::string to_string(const Rational& r);

// Auxiliary vertices are regular points (on a nodal arc, on the boundary, or
// inside a domain) that carry virtual edges or otherwise keep the embedding cellular.
enum class VertexKind { InteriorSingular, BoundarySingular, CircleMarker, Added, Auxiliary };

struct PartitionVertex {
  VertexKind kind = VertexKind::Auxiliary;
  int index = 0;             // nu for InteriorSingular, rho for BoundarySingular
  int boundaryComponent = 0; // 1-based, BoundarySingular only

  bool operator==(const PartitionVertex&) const = default;
};

// Virtual edges are not part of the partition boundary. They cut non-disk
// domains into cells so that face tracing sees a cellular embedding.
enum class EdgeKind { Boundary, Nodal, Virtual };

struct PartitionEdge {
  int darts[2] = {-1, -1};
  EdgeKind kind = EdgeKind::Nodal;
  bool twisted = false;

  bool operator==(const PartitionEdge& o) const {
    return darts[0] == o.darts[0] && darts[1] == o.darts[1] && kind == o.kind && twisted == o.twisted;
  }
};

// Signed rotation system of ∂D ∪ ∂M (plus virtual edges) on the closed model
// surface. Darts are 0..2E-1. rotation[v] lists the darts leaving v in
// counter-clockwise order of the local frame at v. holeDarts[i] is a boundary
// dart whose counter-clockwise side is the capping disk of boundary component i+1.
struct EmbeddedPartition {
  SurfaceSpec surface;
  std::vector<PartitionVertex> vertices;
  std::vector<PartitionEdge> edges;
  std::vector<std::vector<int>> rotation;
  std::vector<int> holeDarts;

  int dart_count() const { return 2 * static_cast<int>(edges.size()); }
  bool operator==(const EmbeddedPartition&) const = default;
};

inline bool is_real(EdgeKind k) { return k != EdgeKind::Virtual; }

// Incidence and face structure derived from an EmbeddedPartition.
// Flags are (dart, side) with id 2*dart + side; side 0 is counter-clockwise.
struct Topology {
  std::vector<int> dartEdge;
  std::vector<int> dartVertex;
  std::vector<int> dartPos;
  std::vector<int> flagFace;
  int faceCount = 0;
  std::vector<int> faceDomain; // -1 for hole faces
  std::vector<int> faceHole;   // hole index or -1
  int domainCount = 0;
  std::vector<int> nodalDegree;
  std::vector<int> boundaryDegree;
  std::vector<int> vertexComponent; // boundary component (1-based) for boundary vertices, 0 otherwise
};

// Full structural validation; throws MalformedEmbedding naming the violated invariant.
Topology analyze(const EmbeddedPartition& p);
void validate(const EmbeddedPartition& p);

struct FaceWalk {
  std::vector<int> darts; // darts traversed, in walk order
  bool hole = false;
  int domain = -1;
};

std::vector<FaceWalk> trace_faces(const EmbeddedPartition& p);

struct PartitionStats {
  int kappa = 0;
  int beta = 0;
  Rational sigmaI = 0;
  Rational sigmaB = 0;
  int omega = 0;
  int b0Boundary = 0;

  Rational sigma() const { return sigmaI + sigmaB; }
};

PartitionStats partition_stats(const EmbeddedPartition& p);

struct EulerReport {
  PartitionStats stats;
  int chi = 0;
  std::string relation; // "=" or ">="
  Rational predicted = 0;
  bool pass = false;
  std::string formula;
};

EulerReport verify_euler(const EmbeddedPartition& p);

struct ComponentParity {
  int component = 0;
  int rhoSum = 0;
  bool met = false;
  bool pass = true;
};

struct ParityReport {
  std::vector<ComponentParity> components;
  bool pass = true;
};

ParityReport check_boundary_parity(const EmbeddedPartition& p);

// True when no nodal edge has the same domain on both sides.
bool is_essential(const EmbeddedPartition& p);

// Vertices where one domain occupies two rotation sectors.
std::vector<int> non_normal_vertices(const EmbeddedPartition& p);

EmbeddedPartition normalize(const EmbeddedPartition& p);

// Recomputes kinds from degrees: interior vertices of nodal degree >= 3 become
// InteriorSingular, boundary vertices with rho >= 1 become BoundarySingular, the
// remaining vertices keep CircleMarker/Added or become Auxiliary.
void assign_vertex_kinds(EmbeddedPartition& p);

std::string kind_name(VertexKind k);
std::string kind_name(EdgeKind k);

} // namespace nodal
