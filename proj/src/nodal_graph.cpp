#include "nodal/nodal_graph.hpp"

#include "nodal/errors.hpp"

#include "nodal/partition_edit.hpp"
#include "nodal/union_find.hpp"

#include <map>
#include <set>

namespace nodal {

namespace {

int real_degree(const Topology& t, int v) { return t.nodalDegree[v] + t.boundaryDegree[v]; }

bool singular(const Topology& t, int v) {
  return (t.boundaryDegree[v] == 0 && t.nodalDegree[v] >= 3) || (t.boundaryDegree[v] == 2 && t.nodalDegree[v] >= 1);
}

int real_components(const EmbeddedPartition& p, const Topology& t) {
  const int V = static_cast<int>(p.vertices.size());
  UnionFind uf(V);
  std::vector<char> on(V, 0);
  for (const auto& e : p.edges) {
    if (!is_real(e.kind)) continue;
    const int a = t.dartVertex[e.darts[0]], b = t.dartVertex[e.darts[1]];
    on[a] = on[b] = 1;
    uf.unite(a, b);
  }
  std::set<int> roots;
  for (int v = 0; v < V; ++v)
    if (on[v]) roots.insert(uf.find(v));
  return static_cast<int>(roots.size());
}

} // namespace

MultigraphCounts build_multigraph(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  const int V = static_cast<int>(p.vertices.size());
  const int E = static_cast<int>(p.edges.size());
  MultigraphCounts m;

  std::vector<char> used(E, 0);
  int chains = 0, sCount = 0, sInterior = 0, sBoundary = 0, nuSum = 0, rhoSum = 0, sDegree = 0;
  for (int v = 0; v < V; ++v) {
    if (!singular(t, v)) continue;
    ++sCount;
    sDegree += real_degree(t, v);
    if (t.boundaryDegree[v] == 0) {
      ++sInterior;
      nuSum += t.nodalDegree[v];
    } else {
      ++sBoundary;
      rhoSum += t.nodalDegree[v];
    }
    for (int d : p.rotation[v]) {
      const int e0 = t.dartEdge[d];
      if (!is_real(p.edges[e0].kind) || used[e0]) continue;
      // Follow the arc through regular vertices until it reaches a singular point.
      int dart = d;
      while (true) {
        const int e = t.dartEdge[dart];
        used[e] = 1;
        const int other = p.edges[e].darts[0] == dart ? p.edges[e].darts[1] : p.edges[e].darts[0];
        const int w = t.dartVertex[other];
        if (singular(t, w)) break;
        int next = -1;
        for (int x : p.rotation[w])
          if (x != other && is_real(p.edges[t.dartEdge[x]].kind)) next = x;
        if (next < 0) throw MalformedEmbedding("arc ends at a regular vertex");
        dart = next;
      }
      ++chains;
    }
  }
  UnionFind circles(V);
  std::vector<char> onCircle(V, 0);
  for (int e = 0; e < E; ++e) {
    if (!is_real(p.edges[e].kind) || used[e]) continue;
    const int a = t.dartVertex[p.edges[e].darts[0]], b = t.dartVertex[p.edges[e].darts[1]];
    onCircle[a] = onCircle[b] = 1;
    circles.unite(a, b);
  }
  std::set<int> circleRoots;
  for (int v = 0; v < V; ++v)
    if (onCircle[v]) circleRoots.insert(circles.find(v));
  m.e = static_cast<int>(circleRoots.size());

  m.alpha0 = sCount + m.e;
  m.alpha1 = chains + m.e;
  m.degreeSum = sDegree + 2 * m.e;
  m.formulaAlpha0 = m.e + sInterior + sBoundary;
  const int half = nuSum + rhoSum;
  m.formulaAlpha1 = m.e + half / 2 + sBoundary;
  m.c = real_components(p, t);
  m.r = t.domainCount;
  m.rClosed = t.domainCount + boundary_components(p.surface);
  m.consistent = half % 2 == 0 && m.alpha0 == m.formulaAlpha0 && m.alpha1 == m.formulaAlpha1 && 2 * m.alpha1 == m.degreeSum;
  return m;
}

MultigraphCounts graph_counts(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  const int V = static_cast<int>(p.vertices.size());
  MultigraphCounts m = build_multigraph(p);
  const int e = m.e;
  m = MultigraphCounts{};
  m.e = e;
  for (int v = 0; v < V; ++v) {
    const int deg = real_degree(t, v);
    if (deg > 0) ++m.alpha0;
    m.degreeSum += deg;
  }
  for (const auto& edge : p.edges)
    if (is_real(edge.kind)) ++m.alpha1;
  m.formulaAlpha0 = m.alpha0;
  m.formulaAlpha1 = m.alpha1;
  m.c = real_components(p, t);
  m.r = t.domainCount;
  m.rClosed = t.domainCount + boundary_components(p.surface);
  m.consistent = 2 * m.alpha1 == m.degreeSum;
  return m;
}

std::pair<EmbeddedPartition, MultigraphCounts> simplify_to_graph(const EmbeddedPartition& p) {
  validate(p);
  PartitionEditor ed(p);
  const int E = ed.edge_count();
  for (int e = 0; e < E; ++e) {
    if (!is_real(ed.partition().edges[e].kind)) continue;
    if (ed.tail(2 * e) != ed.tail(2 * e + 1)) continue;
    ed.subdivide(e);
    ed.subdivide(ed.edge_count() - 1);
  }
  std::map<std::pair<int, int>, int> firstEdge;
  for (int e = 0; e < E; ++e) {
    if (!is_real(ed.partition().edges[e].kind)) continue;
    int a = ed.tail(2 * e), b = ed.tail(2 * e + 1);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (!firstEdge.emplace(std::make_pair(a, b), e).second) ed.subdivide(e);
  }
  EmbeddedPartition out = ed.finish();
  return {out, graph_counts(out)};
}

bool is_simple(const EmbeddedPartition& p) {
  const Topology t = analyze(p);
  std::set<std::pair<int, int>> seen;
  for (const auto& e : p.edges) {
    if (!is_real(e.kind)) continue;
    int a = t.dartVertex[e.darts[0]], b = t.dartVertex[e.darts[1]];
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) return false;
  }
  return true;
}

} // namespace nodal
