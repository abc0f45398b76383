#include "nodal/partition_edit.hpp"

#include "nodal/errors.hpp"

#include <algorithm>

namespace nodal {

PartitionEditor::PartitionEditor(const EmbeddedPartition& p) : p_(p) {
  const int D = p.dart_count();
  std::vector<int> canon(D, -1);
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    for (int s = 0; s < 2; ++s) {
      int d = p.edges[e].darts[s];
      if (d < 0 || d >= D || canon[d] >= 0) throw MalformedEmbedding("dart ids must be a permutation of 0..2E-1");
      canon[d] = 2 * e + s;
    }
    p_.edges[e].darts[0] = 2 * e;
    p_.edges[e].darts[1] = 2 * e + 1;
  }
  dartVertex_.assign(D, -1);
  for (int v = 0; v < static_cast<int>(p_.rotation.size()); ++v) {
    for (int& d : p_.rotation[v]) {
      if (d < 0 || d >= D) throw MalformedEmbedding("rotation references unknown dart");
      d = canon[d];
      dartVertex_[d] = v;
    }
  }
  for (int& h : p_.holeDarts) {
    if (h < 0 || h >= D) throw MalformedEmbedding("hole dart out of range");
    h = canon[h];
  }
  edgeAlive_.assign(p_.edges.size(), true);
  vertexAlive_.assign(p_.vertices.size(), true);
}

int PartitionEditor::add_vertex(const PartitionVertex& v) {
  p_.vertices.push_back(v);
  p_.rotation.emplace_back();
  vertexAlive_.push_back(true);
  return static_cast<int>(p_.vertices.size()) - 1;
}

int PartitionEditor::add_edge(EdgeKind kind, bool twisted) {
  int e = static_cast<int>(p_.edges.size());
  PartitionEdge edge;
  edge.darts[0] = 2 * e;
  edge.darts[1] = 2 * e + 1;
  edge.kind = kind;
  edge.twisted = twisted;
  p_.edges.push_back(edge);
  edgeAlive_.push_back(true);
  dartVertex_.push_back(-1);
  dartVertex_.push_back(-1);
  return e;
}

void PartitionEditor::set_rotation(int v, std::vector<int> darts) {
  for (int d : p_.rotation[v])
    if (dartVertex_[d] == v) dartVertex_[d] = -1;
  for (int d : darts) dartVertex_[d] = v;
  p_.rotation[v] = std::move(darts);
}

void PartitionEditor::remove_edge(int e) {
  for (int s = 0; s < 2; ++s) {
    int d = 2 * e + s;
    int v = dartVertex_[d];
    if (v >= 0) {
      auto& rot = p_.rotation[v];
      rot.erase(std::remove(rot.begin(), rot.end(), d), rot.end());
    }
    dartVertex_[d] = -1;
  }
  edgeAlive_[e] = false;
}

void PartitionEditor::remove_vertex(int v) {
  if (!p_.rotation[v].empty()) throw MalformedEmbedding("cannot remove a vertex that still has darts");
  vertexAlive_[v] = false;
}

void PartitionEditor::replace_hole(int from, int to) {
  for (int& h : p_.holeDarts)
    if (h == from) h = to;
}

int PartitionEditor::subdivide(int e, VertexKind kind) {
  const int d1 = 2 * e + 1;
  const int w = dartVertex_[d1];
  PartitionVertex nv;
  nv.kind = kind;
  const int a = add_vertex(nv);
  const int f = add_edge(p_.edges[e].kind, false);
  auto& rot = p_.rotation[w];
  auto it = std::find(rot.begin(), rot.end(), d1);
  *it = 2 * f + 1;
  dartVertex_[2 * f + 1] = w;
  replace_hole(d1, 2 * f + 1);
  set_rotation(a, {d1, 2 * f});
  return a;
}

bool PartitionEditor::contract(int v) {
  const auto rot = p_.rotation[v];
  if (rot.size() != 2) return false;
  const int x = rot[0], y = rot[1];
  const int e1 = edge_of(x), e2 = edge_of(y);
  if (e1 == e2) return false;
  if (p_.edges[e1].kind != p_.edges[e2].kind) return false;
  const bool t1 = p_.edges[e1].twisted, t2 = p_.edges[e2].twisted;
  const auto holeAt = [&](int d) { return std::find(p_.holeDarts.begin(), p_.holeDarts.end(), d) != p_.holeDarts.end(); };
  if ((t1 || t2) && (holeAt(x) || holeAt(y))) return false;
  const int ox = opposite(x), oy = opposite(y);
  const int b = dartVertex_[oy];
  // x takes the place of oy at b; edge e1 now joins tail(ox) and b.
  auto& rb = p_.rotation[b];
  *std::find(rb.begin(), rb.end(), oy) = x;
  dartVertex_[oy] = -1;
  p_.rotation[v].clear();
  dartVertex_[x] = b;
  dartVertex_[y] = -1;
  replace_hole(oy, x);
  replace_hole(y, ox);
  p_.edges[e1].twisted = t1 != t2;
  edgeAlive_[e2] = false;
  vertexAlive_[v] = false;
  return true;
}

EmbeddedPartition PartitionEditor::finish() const {
  std::vector<int> edgeMap(p_.edges.size(), -1), vertexMap(p_.vertices.size(), -1);
  EmbeddedPartition out;
  out.surface = p_.surface;
  for (int e = 0; e < static_cast<int>(p_.edges.size()); ++e) {
    if (!edgeAlive_[e]) continue;
    edgeMap[e] = static_cast<int>(out.edges.size());
    PartitionEdge edge = p_.edges[e];
    edge.darts[0] = 2 * edgeMap[e];
    edge.darts[1] = 2 * edgeMap[e] + 1;
    out.edges.push_back(edge);
  }
  const auto mapDart = [&](int d) {
    int ne = edgeMap[d >> 1];
    if (ne < 0) throw MalformedEmbedding("dangling reference to a removed edge");
    return 2 * ne + (d & 1);
  };
  for (int v = 0; v < static_cast<int>(p_.vertices.size()); ++v) {
    if (!vertexAlive_[v]) continue;
    vertexMap[v] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(p_.vertices[v]);
    std::vector<int> rot;
    for (int d : p_.rotation[v]) rot.push_back(mapDart(d));
    out.rotation.push_back(std::move(rot));
  }
  for (int h : p_.holeDarts) out.holeDarts.push_back(mapDart(h));
  return out;
}

} // namespace nodal
