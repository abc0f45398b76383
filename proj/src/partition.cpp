#include "nodal/partition.hpp"

#include "nodal/errors.hpp"
#include "nodal/partition_edit.hpp"
#include "nodal/union_find.hpp"

#include <algorithm>
#include <set>

namespace nodal {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string kind_name(VertexKind k) {
  switch (k) {
  case VertexKind::InteriorSingular: return "InteriorSingular";
  case VertexKind::BoundarySingular: return "BoundarySingular";
  case VertexKind::CircleMarker: return "CircleMarker";
  case VertexKind::Added: return "Added";
  case VertexKind::Auxiliary: return "Auxiliary";
  }
  return "?";
}

std::string kind_name(EdgeKind k) {
  switch (k) {
  case EdgeKind::Boundary: return "boundary";
  case EdgeKind::Nodal: return "nodal";
  case EdgeKind::Virtual: return "virtual";
  }
  return "?";
}

namespace {

// The three flag involutions of the generalized map.
struct Flags {
  std::vector<int> a0, a1;
  static int a2(int f) { return f ^ 1; }
};

Flags build_flags(const EmbeddedPartition& p, const Topology& t) {
  const int D = p.dart_count();
  Flags fl;
  fl.a0.assign(2 * D, -1);
  fl.a1.assign(2 * D, -1);
  for (const auto& e : p.edges) {
    const int d = e.darts[0], o = e.darts[1];
    if (e.twisted) {
      fl.a0[2 * d] = 2 * o;
      fl.a0[2 * o] = 2 * d;
      fl.a0[2 * d + 1] = 2 * o + 1;
      fl.a0[2 * o + 1] = 2 * d + 1;
    } else {
      fl.a0[2 * d] = 2 * o + 1;
      fl.a0[2 * o + 1] = 2 * d;
      fl.a0[2 * d + 1] = 2 * o;
      fl.a0[2 * o] = 2 * d + 1;
    }
  }
  for (const auto& rot : p.rotation) {
    const int n = static_cast<int>(rot.size());
    for (int i = 0; i < n; ++i) {
      const int d = rot[i], next = rot[(i + 1) % n];
      fl.a1[2 * d] = 2 * next + 1;
      fl.a1[2 * next + 1] = 2 * d;
    }
  }
  (void)t;
  return fl;
}

// 2-colours the flags reachable through the allowed involutions; false on an odd cycle.
bool bipartite(const std::vector<int>& flags, const Flags& fl, const std::vector<char>& a2Allowed,
               const std::vector<char>& member) {
  std::vector<int> colour(fl.a0.size(), -1);
  std::vector<int> stack;
  for (int start : flags) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
      const int f = stack.back();
      stack.pop_back();
      int nbr[3] = {fl.a0[f], fl.a1[f], a2Allowed[f >> 1] ? Flags::a2(f) : -1};
      for (int g : nbr) {
        if (g < 0 || !member[g]) continue;
        if (colour[g] < 0) {
          colour[g] = 1 - colour[f];
          stack.push_back(g);
        } else if (colour[g] == colour[f]) {
          return false;
        }
      }
    }
  }
  return true;
}

} // namespace

static Topology analyze_impl(const EmbeddedPartition& p, bool checkKinds) {
  validate(p.surface);
  const int V = static_cast<int>(p.vertices.size());
  const int E = static_cast<int>(p.edges.size());
  const int D = 2 * E;
  if (static_cast<int>(p.rotation.size()) != V) throw MalformedEmbedding("rotation list count differs from vertex count");
  if (V == 0) throw MalformedEmbedding("partition has no vertices");

  Topology t;
  t.dartEdge.assign(D, -1);
  for (int e = 0; e < E; ++e) {
    for (int s = 0; s < 2; ++s) {
      const int d = p.edges[e].darts[s];
      if (d < 0 || d >= D) throw MalformedEmbedding("edge " + std::to_string(e) + " references dart out of range");
      if (t.dartEdge[d] >= 0) throw MalformedEmbedding("dart " + std::to_string(d) + " paired twice");
      t.dartEdge[d] = e;
    }
  }
  t.dartVertex.assign(D, -1);
  t.dartPos.assign(D, -1);
  for (int v = 0; v < V; ++v) {
    for (int i = 0; i < static_cast<int>(p.rotation[v].size()); ++i) {
      const int d = p.rotation[v][i];
      if (d < 0 || d >= D) throw MalformedEmbedding("rotation of vertex " + std::to_string(v) + " references dart out of range");
      if (t.dartVertex[d] >= 0) throw MalformedEmbedding("dart " + std::to_string(d) + " appears in two rotations");
      t.dartVertex[d] = v;
      t.dartPos[d] = i;
    }
  }
  for (int d = 0; d < D; ++d)
    if (t.dartVertex[d] < 0) throw MalformedEmbedding("dart " + std::to_string(d) + " missing from every rotation");

  t.nodalDegree.assign(V, 0);
  t.boundaryDegree.assign(V, 0);
  for (int d = 0; d < D; ++d) {
    const EdgeKind k = p.edges[t.dartEdge[d]].kind;
    if (k == EdgeKind::Nodal) ++t.nodalDegree[t.dartVertex[d]];
    if (k == EdgeKind::Boundary) ++t.boundaryDegree[t.dartVertex[d]];
  }

  // Connectivity of the whole embedded graph.
  UnionFind uf(V);
  for (const auto& e : p.edges) uf.unite(t.dartVertex[e.darts[0]], t.dartVertex[e.darts[1]]);
  if (uf.components() != 1) throw MalformedEmbedding("embedding is not connected; join components with virtual edges");

  const Flags fl = build_flags(p, t);
  t.flagFace.assign(2 * D, -1);
  for (int f0 = 0; f0 < 2 * D; ++f0) {
    if (t.flagFace[f0] >= 0) continue;
    // Orbits of <a0,a1> are cycles alternating the two involutions.
    int f = f0;
    bool useA0 = true;
    while (t.flagFace[f] < 0) {
      t.flagFace[f] = t.faceCount;
      f = useA0 ? fl.a0[f] : fl.a1[f];
      useA0 = !useA0;
    }
    ++t.faceCount;
  }
  if (D == 0) t.faceCount = 1;

  const SurfaceSpec closed = closed_model(p.surface);
  const int chi = euler_characteristic(closed);
  if (V - E + t.faceCount != chi)
    throw MalformedEmbedding("V - E + F = " + std::to_string(V - E + t.faceCount) + " but the closed model has Euler characteristic " +
                             std::to_string(chi) + " (embedding not cellular)");

  std::vector<int> allFlags(2 * D);
  for (int f = 0; f < 2 * D; ++f) allFlags[f] = f;
  std::vector<char> all(2 * D, 1), allEdges(D, 1);
  const bool orientable = bipartite(allFlags, fl, allEdges, all);
  if (orientable != is_orientable(closed))
    throw MalformedEmbedding(std::string("edge signatures describe an ") + (orientable ? "orientable" : "non-orientable") +
                             " surface but " + describe(p.surface) + " was declared");

  // Hole faces.
  const int holes = boundary_components(p.surface);
  if (static_cast<int>(p.holeDarts.size()) != holes)
    throw MalformedEmbedding("expected " + std::to_string(holes) + " hole darts, got " + std::to_string(p.holeDarts.size()));
  t.faceHole.assign(t.faceCount, -1);
  for (int h = 0; h < holes; ++h) {
    const int d = p.holeDarts[h];
    if (d < 0 || d >= D) throw MalformedEmbedding("hole dart out of range");
    if (p.edges[t.dartEdge[d]].kind != EdgeKind::Boundary) throw MalformedEmbedding("hole dart is not a boundary dart");
    const int face = t.flagFace[2 * d];
    if (t.faceHole[face] >= 0) throw MalformedEmbedding("two hole darts name the same face");
    t.faceHole[face] = h;
  }
  std::vector<int> sidesOnHole(E, 0);
  for (int f = 0; f < 2 * D; ++f) {
    if (t.faceHole[t.flagFace[f]] < 0) continue;
    const int e = t.dartEdge[f >> 1];
    if (p.edges[e].kind != EdgeKind::Boundary) throw MalformedEmbedding("hole face bounded by a non-boundary edge");
    ++sidesOnHole[e];
  }
  for (int e = 0; e < E; ++e) {
    const bool boundary = p.edges[e].kind == EdgeKind::Boundary;
    if (boundary && sidesOnHole[e] != 2)
      throw MalformedEmbedding("boundary edge " + std::to_string(e) + " must have exactly one side on a hole face");
  }
  if (!has_boundary(p.surface))
    for (const auto& e : p.edges)
      if (e.kind == EdgeKind::Boundary) throw MalformedEmbedding("closed surface with boundary edges");

  t.vertexComponent.assign(V, 0);
  for (int d = 0; d < D; ++d) {
    if (p.edges[t.dartEdge[d]].kind != EdgeKind::Boundary) continue;
    int h = t.faceHole[t.flagFace[2 * d]];
    if (h < 0) h = t.faceHole[t.flagFace[2 * d + 1]];
    t.vertexComponent[t.dartVertex[d]] = h + 1;
  }

  // Domains: faces glued across virtual edges.
  UnionFind faces(t.faceCount);
  for (int e = 0; e < E; ++e) {
    if (p.edges[e].kind != EdgeKind::Virtual) continue;
    const int d = p.edges[e].darts[0];
    faces.unite(t.flagFace[2 * d], t.flagFace[2 * d + 1]);
  }
  t.faceDomain.assign(t.faceCount, -1);
  std::vector<int> rootDomain(t.faceCount, -1);
  for (int f = 0; f < t.faceCount; ++f) {
    if (t.faceHole[f] >= 0) continue;
    const int r = faces.find(f);
    if (rootDomain[r] < 0) rootDomain[r] = t.domainCount++;
    t.faceDomain[f] = rootDomain[r];
  }

  for (int v = 0; v < V && checkKinds; ++v) {
    const auto& pv = p.vertices[v];
    const int nd = t.nodalDegree[v], bd = t.boundaryDegree[v];
    const std::string tag = "vertex " + std::to_string(v) + " (" + kind_name(pv.kind) + ")";
    if (bd != 0 && bd != 2) throw MalformedEmbedding(tag + " has " + std::to_string(bd) + " boundary darts");
    switch (pv.kind) {
    case VertexKind::InteriorSingular:
      if (bd != 0 || nd != pv.index || nd < 3)
        throw MalformedEmbedding(tag + ": nu=" + std::to_string(pv.index) + " but nodal degree " + std::to_string(nd));
      break;
    case VertexKind::BoundarySingular:
      if (bd != 2 || nd != pv.index || nd < 1)
        throw MalformedEmbedding(tag + ": rho=" + std::to_string(pv.index) + " but nodal degree " + std::to_string(nd));
      if (pv.boundaryComponent != t.vertexComponent[v])
        throw MalformedEmbedding(tag + " declared on component " + std::to_string(pv.boundaryComponent) + " but lies on " +
                                 std::to_string(t.vertexComponent[v]));
      break;
    case VertexKind::CircleMarker:
      if (bd != 0 || nd != 2) throw MalformedEmbedding(tag + " must carry exactly two nodal darts");
      break;
    case VertexKind::Added:
    case VertexKind::Auxiliary:
      if (!((bd == 2 && nd == 0) || (bd == 0 && (nd == 0 || nd == 2))))
        throw MalformedEmbedding(tag + " is not a regular point (nodal " + std::to_string(nd) + ", boundary " + std::to_string(bd) + ")");
      break;
    }
  }
  return t;
}

Topology analyze(const EmbeddedPartition& p) { return analyze_impl(p, true); }

void validate(const EmbeddedPartition& p) { (void)analyze(p); }

std::vector<FaceWalk> trace_faces(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  const Flags fl = build_flags(p, t);
  std::vector<FaceWalk> walks(t.faceCount);
  std::vector<char> seen(t.flagFace.size(), 0);
  for (int face = 0; face < t.faceCount; ++face) {
    walks[face].hole = t.faceHole[face] >= 0;
    walks[face].domain = t.faceDomain[face];
  }
  for (int f0 = 0; f0 < static_cast<int>(t.flagFace.size()); ++f0) {
    if (seen[f0]) continue;
    auto& walk = walks[t.flagFace[f0]];
    int f = f0;
    do {
      seen[f] = 1;
      walk.darts.push_back(f >> 1);
      const int g = fl.a0[f];
      seen[g] = 1;
      f = fl.a1[g];
    } while (f != f0);
  }
  return walks;
}

PartitionStats partition_stats(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  PartitionStats s;
  s.kappa = t.domainCount;
  s.b0Boundary = boundary_components(p.surface);

  const int V = static_cast<int>(p.vertices.size());
  UnionFind uf(V);
  std::vector<char> onGraph(V, 0);
  for (const auto& e : p.edges) {
    if (!is_real(e.kind)) continue;
    const int a = t.dartVertex[e.darts[0]], b = t.dartVertex[e.darts[1]];
    onGraph[a] = onGraph[b] = 1;
    uf.unite(a, b);
  }
  std::set<int> roots;
  for (int v = 0; v < V; ++v)
    if (onGraph[v]) roots.insert(uf.find(v));
  s.beta = static_cast<int>(roots.size()) - s.b0Boundary;

  for (int v = 0; v < V; ++v) {
    if (t.boundaryDegree[v] == 0 && t.nodalDegree[v] >= 3) s.sigmaI += Rational(t.nodalDegree[v] - 2, 2);
    if (t.boundaryDegree[v] == 2 && t.nodalDegree[v] >= 1) s.sigmaB += Rational(t.nodalDegree[v], 2);
  }

  // A domain is non-orientable when its flags, glued across virtual edges, contain an odd cycle.
  if (!is_orientable(p.surface)) {
    const Flags fl = build_flags(p, t);
    std::vector<char> virt(p.dart_count(), 0);
    for (int d = 0; d < p.dart_count(); ++d) virt[d] = p.edges[t.dartEdge[d]].kind == EdgeKind::Virtual;
    for (int dom = 0; dom < t.domainCount && s.omega == 0; ++dom) {
      std::vector<char> member(t.flagFace.size(), 0);
      std::vector<int> flags;
      for (int f = 0; f < static_cast<int>(t.flagFace.size()); ++f)
        if (t.faceDomain[t.flagFace[f]] == dom) {
          member[f] = 1;
          flags.push_back(f);
        }
      if (!bipartite(flags, fl, virt, member)) s.omega = 1;
    }
  }
  return s;
}

EulerReport verify_euler(const EmbeddedPartition& p) {
  EulerReport r;
  r.stats = partition_stats(p);
  r.chi = euler_characteristic(p.surface);
  const auto& s = r.stats;
  const bool genusZero = p.surface.kind == SurfaceKind::PlanarDomain ||
                         (p.surface.kind == SurfaceKind::ClosedOrientable && p.surface.param == 0);
  if (genusZero) {
    r.relation = "=";
    r.predicted = Rational(1 + s.beta) + s.sigma();
    r.formula = "kappa = 1 + beta + sigma";
  } else if (p.surface.kind == SurfaceKind::MoebiusStrip) {
    r.relation = "=";
    r.predicted = Rational(s.omega + s.beta) + s.sigma();
    r.formula = "kappa = omega + beta + sigma";
  } else {
    r.relation = ">=";
    r.predicted = Rational(r.chi) + s.sigma();
    r.formula = "kappa >= chi + sigma";
  }
  const Rational k(s.kappa);
  r.pass = r.relation == "=" ? k == r.predicted : k >= r.predicted;
  return r;
}

ParityReport check_boundary_parity(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  ParityReport r;
  const int comps = boundary_components(p.surface);
  r.components.resize(comps);
  for (int c = 0; c < comps; ++c) r.components[c].component = c + 1;
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v)
    if (t.boundaryDegree[v] == 2) r.components[t.vertexComponent[v] - 1].rhoSum += t.nodalDegree[v];
  for (auto& c : r.components) {
    c.met = c.rhoSum > 0;
    c.pass = !c.met || (c.rhoSum % 2 == 0 && c.rhoSum >= 2);
    r.pass = r.pass && c.pass;
  }
  return r;
}

bool is_essential(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  for (const auto& e : p.edges) {
    if (e.kind != EdgeKind::Nodal) continue;
    const int d = e.darts[0];
    if (t.faceDomain[t.flagFace[2 * d]] == t.faceDomain[t.flagFace[2 * d + 1]]) return false;
  }
  return true;
}

namespace {

std::vector<int> non_normal(const EmbeddedPartition& p, const Topology& t) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v) {
    const bool singular = (t.boundaryDegree[v] == 0 && t.nodalDegree[v] >= 3) || (t.boundaryDegree[v] == 2 && t.nodalDegree[v] >= 1);
    if (!singular) continue;
    std::set<int> seen;
    for (int d : p.rotation[v]) {
      if (!is_real(p.edges[t.dartEdge[d]].kind)) continue;
      const int dom = t.faceDomain[t.flagFace[2 * d]];
      if (dom < 0) continue;
      if (!seen.insert(dom).second) {
        out.push_back(v);
        break;
      }
    }
  }
  return out;
}

// Replaces v by a small disk whose boundary meets each real dart of v once.
void blow_up(PartitionEditor& ed, const EmbeddedPartition& p, const Topology& t, int v) {
  const auto rot = ed.rotation(v);
  const int n = static_cast<int>(rot.size());
  const auto real = [&](int d) { return is_real(ed.partition().edges[PartitionEditor::edge_of(d)].kind); };
  const auto boundaryDart = [&](int d) { return ed.partition().edges[PartitionEditor::edge_of(d)].kind == EdgeKind::Boundary; };

  if (t.boundaryDegree[v] == 0) {
    int first = 0;
    while (!real(rot[first])) ++first;
    // sectors[i] = real dart followed by the virtual darts up to the next real dart.
    std::vector<std::vector<int>> sectors;
    for (int k = 0; k < n; ++k) {
      const int d = rot[(first + k) % n];
      if (real(d)) sectors.push_back({d});
      else sectors.back().push_back(d);
    }
    const int m = static_cast<int>(sectors.size());
    std::vector<int> ys(m), cyc(m);
    for (int i = 0; i < m; ++i) ys[i] = ed.add_vertex({VertexKind::InteriorSingular, 3, 0});
    for (int i = 0; i < m; ++i) cyc[i] = ed.add_edge(EdgeKind::Nodal, false); // cyc[i]: y_i -> y_{i+1}
    ed.set_rotation(v, {});
    for (int i = 0; i < m; ++i) {
      auto r = sectors[i];
      r.push_back(2 * cyc[i]);
      r.push_back(2 * cyc[(i + m - 1) % m] + 1);
      ed.set_rotation(ys[i], r);
    }
    ed.remove_vertex(v);
    return;
  }

  // Boundary vertex: the hole corner follows bL; walk counter-clockwise from bR.
  int bLpos = -1;
  for (int i = 0; i < n; ++i)
    if (boundaryDart(rot[i]) && t.faceHole[t.flagFace[2 * rot[i]]] >= 0) bLpos = i;
  if (bLpos < 0) throw MalformedEmbedding("boundary vertex without a hole corner");
  std::vector<int> order;
  for (int k = 1; k <= n; ++k) order.push_back(rot[(bLpos + k) % n]);
  const int bR = order.front(), bL = order.back();
  if (!boundaryDart(bR)) throw MalformedEmbedding("hole corner not bounded by two boundary darts");
  std::vector<int> leading; // virtual darts between bR and the first nodal dart
  std::vector<std::vector<int>> sectors;
  for (int k = 1; k + 1 < n; ++k) {
    const int d = order[k];
    if (real(d)) sectors.push_back({d});
    else if (sectors.empty()) leading.push_back(d);
    else sectors.back().push_back(d);
  }
  const int rho = static_cast<int>(sectors.size());
  const int comp = p.vertices[v].boundaryComponent > 0 ? p.vertices[v].boundaryComponent : t.vertexComponent[v];
  const int zR = ed.add_vertex({VertexKind::BoundarySingular, 1, comp});
  const int zL = ed.add_vertex({VertexKind::BoundarySingular, 1, comp});
  std::vector<int> ys(rho);
  for (int i = 0; i < rho; ++i) ys[i] = ed.add_vertex({VertexKind::InteriorSingular, 3, 0});
  std::vector<int> arc(rho + 1); // arc[i] joins node i and node i+1 along zR, y_1..y_rho, zL
  for (int i = 0; i <= rho; ++i) arc[i] = ed.add_edge(EdgeKind::Nodal, false);
  const int nb = ed.add_edge(EdgeKind::Boundary, false); // dart 2nb at zR, 2nb+1 at zL
  ed.set_rotation(v, {});
  std::vector<int> rR = {bR};
  rR.insert(rR.end(), leading.begin(), leading.end());
  rR.push_back(2 * arc[0]);
  rR.push_back(2 * nb);
  ed.set_rotation(zR, rR);
  for (int i = 0; i < rho; ++i) {
    auto r = sectors[i];
    r.push_back(2 * arc[i + 1]);
    r.push_back(2 * arc[i] + 1);
    ed.set_rotation(ys[i], r);
  }
  ed.set_rotation(zL, {2 * nb + 1, 2 * arc[rho] + 1, bL});
  ed.remove_vertex(v);
}

} // namespace

std::vector<int> non_normal_vertices(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  return non_normal(p, t);
}

EmbeddedPartition normalize(const EmbeddedPartition& p) {
  EmbeddedPartition cur = p;
  const int cap = 4 * static_cast<int>(p.vertices.size() + p.edges.size()) + 16;
  for (int iter = 0; iter < cap; ++iter) {
    const Topology t = analyze(cur);
    const auto bad = non_normal(cur, t);
    if (bad.empty()) return cur;
    if (iter == 0 && !is_essential(cur))
      throw MalformedEmbedding("normalization needs an essential partition (a nodal edge has one domain on both sides)");
    PartitionEditor ed(cur);
    blow_up(ed, cur, t, bad.front());
    cur = ed.finish();
  }
  throw MalformedEmbedding("normalization did not terminate");
}

void assign_vertex_kinds(EmbeddedPartition& p) {
  const Topology t = analyze_impl(p, false);
  std::vector<int> nodal(p.vertices.size(), 0), boundary(p.vertices.size(), 0);
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v)
    for (int d : p.rotation[v]) {
      const EdgeKind k = p.edges[d >> 1].kind;
      if (k == EdgeKind::Nodal) ++nodal[v];
      if (k == EdgeKind::Boundary) ++boundary[v];
    }
  for (int v = 0; v < static_cast<int>(p.vertices.size()); ++v) {
    auto& pv = p.vertices[v];
    if (boundary[v] == 0 && nodal[v] >= 3) {
      pv = {VertexKind::InteriorSingular, nodal[v], 0};
    } else if (boundary[v] == 2 && nodal[v] >= 1) {
      pv.kind = VertexKind::BoundarySingular;
      pv.index = nodal[v];
      pv.boundaryComponent = t.vertexComponent[v];
    } else {
      const bool keep = (pv.kind == VertexKind::CircleMarker && nodal[v] == 2 && boundary[v] == 0) || pv.kind == VertexKind::Added;
      if (!keep) pv.kind = VertexKind::Auxiliary;
      pv.index = 0;
      pv.boundaryComponent = 0;
    }
  }
}

} // namespace nodal
