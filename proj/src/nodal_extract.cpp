#include "nodal/nodal_extract.hpp"

#include "nodal/errors.hpp"
#include "nodal/partition_edit.hpp"
#include "nodal/ray_fit.hpp"
#include "nodal/union_find.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace nodal {

namespace {

struct CellGrid {
  int cx = 0, cy = 0;
  std::vector<unsigned char> active;
  std::vector<signed char> sign;
  double threshold = 0;

  int id(int i, int j) const { return j * cx + i; }
  bool on(int i, int j) const { return i >= 0 && j >= 0 && i < cx && j < cy && active[id(i, j)]; }
};

CellGrid classify_cells(const GridField& u, double zeroTol, double residual) {
  const GridLayout& L = u.layout;
  const double maxAbs = u.max_abs();
  if (maxAbs == 0) throw AllZeroField("field is identically zero");
  CellGrid g;
  g.cx = L.nx - 1;
  g.cy = L.ny - 1;
  if (g.cx < 1 || g.cy < 1) throw DegenerateGrid("lattice has no cells");
  g.threshold = std::max(zeroTol * maxAbs, 10 * residual);
  g.active.assign(static_cast<size_t>(g.cx) * g.cy, 0);
  g.sign.assign(g.active.size(), 0);
  for (int j = 0; j < g.cy; ++j)
    for (int i = 0; i < g.cx; ++i) {
      bool closed = true, unknown = false;
      double sum = 0;
      for (auto [di, dj] : {std::pair{0, 0}, {1, 0}, {0, 1}, {1, 1}}) {
        const NodeRole r = L.role[L.node(i + di, j + dj)];
        closed = closed && r != NodeRole::Exterior;
        unknown = unknown || r == NodeRole::Unknown;
        sum += u.at(i + di, j + dj);
      }
      if (!closed || !unknown) continue;
      const double mean = sum / 4;
      g.active[g.id(i, j)] = 1;
      g.sign[g.id(i, j)] = std::abs(mean) < g.threshold ? 0 : (mean > 0 ? 1 : -1);
    }
  // Remove diagonal pinches so that the active region is a surface with boundary.
  for (bool changed = true; changed;) {
    changed = false;
    for (int j = 0; j <= g.cy; ++j)
      for (int i = 0; i <= g.cx; ++i) {
        const bool ne = g.on(i, j), nw = g.on(i - 1, j), sw = g.on(i - 1, j - 1), se = g.on(i, j - 1);
        if (ne && sw && !nw && !se) {
          g.active[g.id(i, j)] = 0;
          changed = true;
        } else if (nw && se && !ne && !sw) {
          g.active[g.id(i - 1, j)] = 0;
          changed = true;
        }
      }
  }
  return g;
}

// Union-find over nonzero active cells joined to same-sign 4-neighbours.
UnionFind sign_classes(const CellGrid& g) {
  UnionFind uf(g.cx * g.cy);
  for (int j = 0; j < g.cy; ++j)
    for (int i = 0; i < g.cx; ++i) {
      const int c = g.id(i, j);
      if (!g.active[c] || g.sign[c] == 0) continue;
      if (g.on(i + 1, j) && g.sign[g.id(i + 1, j)] == g.sign[c]) uf.unite(c, g.id(i + 1, j));
      if (g.on(i, j + 1) && g.sign[g.id(i, j + 1)] == g.sign[c]) uf.unite(c, g.id(i, j + 1));
    }
  return uf;
}

} // namespace

int count_nodal_domains(const GridField& u, double zeroTol) {
  const CellGrid g = classify_cells(u, zeroTol, 0);
  UnionFind uf = sign_classes(g);
  int count = 0;
  for (int c = 0; c < g.cx * g.cy; ++c)
    if (g.active[c] && g.sign[c] != 0 && uf.find(c) == c) ++count;
  if (count == 0) throw AllZeroField("every cell is below the zero threshold");
  return count;
}

NodalExtract extract_nodal(const GridField& u, const ExtractOptions& opt) {
  const GridLayout& L = u.layout;
  const CellGrid g = classify_cells(u, opt.zeroTol, opt.residual);
  const int C = g.cx * g.cy;
  NodalExtract out;
  out.cellsX = g.cx;
  out.cellsY = g.cy;
  out.x0 = L.x0;
  out.y0 = L.y0;
  out.h = L.h;
  out.active = g.active;
  out.signField = g.sign;
  out.zeroThreshold = g.threshold;

  // Nodal domains.
  UnionFind uf = sign_classes(g);
  std::vector<int> label(C, -1);
  int next = 0;
  for (int c = 0; c < C; ++c) {
    if (!g.active[c] || g.sign[c] == 0) continue;
    const int r = uf.find(c);
    if (label[r] < 0) {
      label[r] = next++;
      (g.sign[c] > 0 ? out.positiveDomains : out.negativeDomains)++;
    }
    label[c] = label[r];
  }
  out.kappa = next;
  if (out.kappa == 0) throw AllZeroField("every cell is below the zero threshold");

  // Zero cells join the nearest labelled region for the partition.
  std::deque<int> queue;
  for (int c = 0; c < C; ++c)
    if (label[c] >= 0) queue.push_back(c);
  while (!queue.empty()) {
    const int c = queue.front();
    queue.pop_front();
    const int i = c % g.cx, j = c / g.cx;
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      if (!g.on(i + di, j + dj)) continue;
      const int w = g.id(i + di, j + dj);
      if (label[w] < 0) {
        label[w] = label[c];
        queue.push_back(w);
      }
    }
  }
  for (int c = 0; c < C; ++c)
    if (g.active[c] && label[c] < 0) throw MalformedInput("domain is not connected");
  out.cellLabel = label;

  // Inactive regions on the cell grid extended by a one-cell frame; region 0 is the outside.
  const int ex = g.cx + 2, ey = g.cy + 2;
  const auto eid = [ex](int i, int j) { return (j + 1) * ex + (i + 1); };
  std::vector<int> hole(static_cast<size_t>(ex) * ey, -1);
  int holes = 0;
  for (int s = -1; s < ex * ey; ++s) {
    const int start = s < 0 ? eid(-1, -1) : s;
    const int si = start % ex - 1, sj = start / ex - 1;
    if (hole[start] >= 0 || g.on(si, sj)) continue;
    hole[start] = holes;
    std::deque<int> q{start};
    while (!q.empty()) {
      const int c = q.front();
      q.pop_front();
      const int i = c % ex - 1, j = c / ex - 1;
      for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
        const int a = i + di, b = j + dj;
        if (a < -1 || b < -1 || a > g.cx || b > g.cy || g.on(a, b)) continue;
        const int w = eid(a, b);
        if (hole[w] < 0) {
          hole[w] = holes;
          q.push_back(w);
        }
      }
    }
    ++holes;
  }
  const auto cellLabelAt = [&](int i, int j) { return g.on(i, j) ? label[g.id(i, j)] : -1; };
  const auto holeAt = [&](int i, int j) { return hole[eid(i, j)]; };

  // Crack complex: every lattice edge with an active cell on at least one side.
  EmbeddedPartition p;
  p.surface = SurfaceSpec::planar(holes - 1);
  const int N = L.nx * L.ny;
  std::vector<int> eEdge(N, -1), nEdge(N, -1);
  std::vector<std::array<int, 2>> sides; // cells on the two sides: (left/above, right/below)
  std::vector<int> holeDart(holes, -1);
  const auto addEdge = [&](int leftI, int leftJ, int rightI, int rightJ) {
    const int la = cellLabelAt(leftI, leftJ), lb = cellLabelAt(rightI, rightJ);
    if (la < 0 && lb < 0) return -1;
    PartitionEdge e;
    const int id = static_cast<int>(p.edges.size());
    e.darts[0] = 2 * id;
    e.darts[1] = 2 * id + 1;
    e.kind = (la < 0 || lb < 0) ? EdgeKind::Boundary : (la != lb ? EdgeKind::Nodal : EdgeKind::Virtual);
    p.edges.push_back(e);
    sides.push_back({g.on(leftI, leftJ) ? g.id(leftI, leftJ) : -1, g.on(rightI, rightJ) ? g.id(rightI, rightJ) : -1});
    if (e.kind == EdgeKind::Boundary) {
      // The dart at a sees the left cell on its counter-clockwise side.
      const int hid = la < 0 ? holeAt(leftI, leftJ) : holeAt(rightI, rightJ);
      if (holeDart[hid] < 0) holeDart[hid] = la < 0 ? 2 * id : 2 * id + 1;
    }
    return id;
  };
  for (int j = 0; j < L.ny; ++j)
    for (int i = 0; i < L.nx; ++i) {
      const int n = L.node(i, j);
      if (i + 1 < L.nx) eEdge[n] = addEdge(i, j, i, j - 1);
      if (j + 1 < L.ny) nEdge[n] = addEdge(i - 1, j, i, j);
    }
  std::vector<int> nodeVertex(N, -1);
  std::vector<std::array<double, 2>> positions;
  for (int j = 0; j < L.ny; ++j)
    for (int i = 0; i < L.nx; ++i) {
      const int n = L.node(i, j);
      std::vector<int> rot;
      if (eEdge[n] >= 0) rot.push_back(2 * eEdge[n]);
      if (nEdge[n] >= 0) rot.push_back(2 * nEdge[n]);
      if (i > 0 && eEdge[L.node(i - 1, j)] >= 0) rot.push_back(2 * eEdge[L.node(i - 1, j)] + 1);
      if (j > 0 && nEdge[L.node(i, j - 1)] >= 0) rot.push_back(2 * nEdge[L.node(i, j - 1)] + 1);
      if (rot.empty()) continue;
      nodeVertex[n] = static_cast<int>(p.vertices.size());
      p.vertices.push_back({VertexKind::Auxiliary, 0, 0});
      p.rotation.push_back(std::move(rot));
      positions.push_back({L.x(i), L.y(j)});
    }
  p.holeDarts = holeDart;

  PartitionEditor ed(p);
  // Keep one face per domain: drop virtual edges along a spanning forest of each domain's cells.
  UnionFind faces(C);
  for (int e = 0; e < static_cast<int>(p.edges.size()); ++e) {
    if (p.edges[e].kind != EdgeKind::Virtual) continue;
    if (faces.unite(sides[e][0], sides[e][1])) ed.remove_edge(e);
  }
  // Prune dangling virtual edges.
  std::vector<int> stack;
  for (int v = 0; v < ed.vertex_count(); ++v) stack.push_back(v);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (!ed.vertex_alive(v)) continue;
    const auto& rot = ed.rotation(v);
    if (rot.empty()) {
      ed.remove_vertex(v);
    } else if (rot.size() == 1 && ed.edge(rot[0] >> 1).kind == EdgeKind::Virtual) {
      const int other = ed.tail(rot[0] ^ 1);
      ed.remove_edge(rot[0] >> 1);
      ed.remove_vertex(v);
      stack.push_back(other);
    }
  }
  for (int v = 0; v < ed.vertex_count(); ++v)
    if (ed.vertex_alive(v) && ed.rotation(v).size() == 2) ed.contract(v);
  for (int v = 0; v < ed.vertex_count(); ++v)
    if (ed.vertex_alive(v)) out.vertexPositions.push_back(positions[v]);
  out.asPartition = ed.finish();
  assign_vertex_kinds(out.asPartition);
  validate(out.asPartition);

  for (int v = 0; v < static_cast<int>(out.asPartition.vertices.size()); ++v) {
    const auto& pv = out.asPartition.vertices[v];
    const auto [x, y] = out.vertexPositions[v];
    if (pv.kind == VertexKind::InteriorSingular) {
      InteriorPoint ip;
      ip.x = x;
      ip.y = y;
      ip.nu = pv.index;
      ip.status = "not-checked";
      if (opt.fitRays) {
        try {
          const RayFit fit = local_ray_fit(u, x, y, opt.fitRadiusCells * L.h, std::max(6, ip.nu));
          ip.fitOrder = fit.order;
          ip.fitResidual = fit.residual;
          ip.confirmed = 2 * fit.order == ip.nu;
        } catch (const NoFit&) {
        }
        ip.status = ip.confirmed ? "confirmed" : "unresolved";
      }
      out.interiorSingular.push_back(ip);
    } else if (pv.kind == VertexKind::BoundarySingular) {
      out.boundarySingular.push_back({x, y, pv.index, pv.boundaryComponent, pv.index > 2});
    }
  }
  return out;
}

} // namespace nodal
