#pragma once

#include "nodal/partition.hpp"

namespace nodal {

// Mutable view used by the constructions that rewrite an embedding
// (normalization, vertex-edge additions, grid partitions). Darts are kept in
// canonical form: edge e owns darts 2e and 2e+1.
class PartitionEditor {
public:
  explicit PartitionEditor(const EmbeddedPartition& p);

  const EmbeddedPartition& partition() const { return p_; }

  int add_vertex(const PartitionVertex& v);
  int add_edge(EdgeKind kind, bool twisted);
  void set_rotation(int v, std::vector<int> darts);
  const std::vector<int>& rotation(int v) const { return p_.rotation[v]; }
  PartitionVertex& vertex(int v) { return p_.vertices[v]; }
  PartitionEdge& edge(int e) { return p_.edges[e]; }

  int tail(int dart) const { return dartVertex_[dart]; }
  static int opposite(int dart) { return dart ^ 1; }
  static int edge_of(int dart) { return dart >> 1; }

  bool edge_alive(int e) const { return edgeAlive_[e]; }
  bool vertex_alive(int v) const { return vertexAlive_[v]; }
  int vertex_count() const { return static_cast<int>(p_.vertices.size()); }
  int edge_count() const { return static_cast<int>(p_.edges.size()); }

  void remove_edge(int e);
  void remove_vertex(int v); // rotation must be empty

  // Inserts an Added vertex on edge e; returns it. The far half becomes a new edge.
  int subdivide(int e, VertexKind kind = VertexKind::Added);

  // Merges the two edges at a degree-2 vertex. Refuses (returns false) for loops,
  // mixed edge kinds, or when a twisted edge would move a hole dart off its face.
  bool contract(int v);

  EmbeddedPartition finish() const;

private:
  EmbeddedPartition p_;
  std::vector<int> dartVertex_;
  std::vector<bool> edgeAlive_;
  std::vector<bool> vertexAlive_;

  void replace_hole(int from, int to);
};

} // namespace nodal
