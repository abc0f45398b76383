#include "nodal/json_io.hpp"

#include "nodal/errors.hpp"

#include <fstream>
#include <sstream>

namespace nodal {

namespace {

template <class T>
T get(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput(std::string("field '") + key + "': " + e.what());
  }
}

template <class T>
T get_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? get<T>(j, key) : fallback;
}

VertexKind vertex_kind_from_name(const std::string& s) {
  for (auto k : {VertexKind::InteriorSingular, VertexKind::BoundarySingular, VertexKind::CircleMarker, VertexKind::Added,
                 VertexKind::Auxiliary})
    if (kind_name(k) == s) return k;
  throw MalformedInput("unknown vertex kind '" + s + "'");
}

EdgeKind edge_kind_from_name(const std::string& s) {
  for (auto k : {EdgeKind::Boundary, EdgeKind::Nodal, EdgeKind::Virtual})
    if (kind_name(k) == s) return k;
  throw MalformedInput("unknown edge kind '" + s + "'");
}

Json rational(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return to_string(r);
}

} // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void check_format_version(const Json& j) {
  const int v = get<int>(j, "formatVersion");
  if (v != kFormatVersion) throw MalformedInput("unsupported formatVersion " + std::to_string(v));
}

Json to_json(const SurfaceSpec& s) { return {{"kind", kind_name(s.kind)}, {"param", s.param}}; }

SurfaceSpec surface_from_json(const Json& j) {
  if (j.is_string()) return surface_from_name(j.get<std::string>());
  SurfaceSpec s{kind_from_name(get<std::string>(j, "kind")), get_or<int>(j, "param", 0)};
  validate(s);
  return s;
}

Json to_json(const EmbeddedPartition& p) {
  Json j;
  j["formatVersion"] = kFormatVersion;
  j["surface"] = to_json(p.surface);
  Json vs = Json::array();
  for (const auto& v : p.vertices) {
    Json o{{"kind", kind_name(v.kind)}};
    if (v.kind == VertexKind::InteriorSingular || v.kind == VertexKind::BoundarySingular) o["index"] = v.index;
    if (v.kind == VertexKind::BoundarySingular) o["component"] = v.boundaryComponent;
    vs.push_back(o);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (const auto& e : p.edges) {
    Json o{{"darts", {e.darts[0], e.darts[1]}}, {"kind", kind_name(e.kind)}};
    if (e.twisted) o["twisted"] = true;
    es.push_back(o);
  }
  j["edges"] = es;
  j["rotation"] = p.rotation;
  j["holeDarts"] = p.holeDarts;
  return j;
}

EmbeddedPartition partition_from_json(const Json& j) {
  check_format_version(j);
  EmbeddedPartition p;
  p.surface = surface_from_json(get<Json>(j, "surface"));
  for (const auto& v : get<Json>(j, "vertices")) {
    PartitionVertex pv;
    pv.kind = vertex_kind_from_name(get<std::string>(v, "kind"));
    pv.index = get_or<int>(v, "index", 0);
    pv.boundaryComponent = get_or<int>(v, "component", 0);
    p.vertices.push_back(pv);
  }
  for (const auto& e : get<Json>(j, "edges")) {
    PartitionEdge pe;
    const auto d = get<std::vector<int>>(e, "darts");
    if (d.size() != 2) throw MalformedInput("an edge needs exactly two darts");
    pe.darts[0] = d[0];
    pe.darts[1] = d[1];
    pe.kind = edge_kind_from_name(get_or<std::string>(e, "kind", "nodal"));
    pe.twisted = get_or<bool>(e, "twisted", false);
    p.edges.push_back(pe);
  }
  p.rotation = get<std::vector<std::vector<int>>>(j, "rotation");
  p.holeDarts = get_or<std::vector<int>>(j, "holeDarts", {});
  return p;
}

Json to_json(const PartitionStats& s) {
  return {{"kappa", s.kappa},         {"beta", s.beta},   {"sigmaI", rational(s.sigmaI)}, {"sigmaB", rational(s.sigmaB)},
          {"sigma", rational(s.sigma())}, {"omega", s.omega}, {"b0Boundary", s.b0Boundary}};
}

Json to_json(const EulerReport& r) {
  return {{"stats", to_json(r.stats)}, {"chi", r.chi},   {"relation", r.relation}, {"predicted", rational(r.predicted)},
          {"formula", r.formula},      {"pass", r.pass}};
}

Json to_json(const ParityReport& r) {
  Json cs = Json::array();
  for (const auto& c : r.components)
    cs.push_back({{"component", c.component}, {"rhoSum", c.rhoSum}, {"met", c.met}, {"pass", c.pass}});
  return {{"components", cs}, {"pass", r.pass}};
}

Json to_json(const MultigraphCounts& c) {
  return {{"alpha0", c.alpha0},         {"alpha1", c.alpha1},       {"e", c.e},
          {"c", c.c},                   {"r", c.r},                 {"rClosed", c.rClosed},
          {"degreeSum", c.degreeSum},   {"formulaAlpha0", c.formulaAlpha0}, {"formulaAlpha1", c.formulaAlpha1},
          {"consistent", c.consistent}};
}

Json to_json(const InteriorType& t, IndexBase base) {
  Json pairs = Json::array();
  for (auto [a, b] : interior_pairs(t, base)) pairs.push_back({a, b});
  std::vector<int> tau;
  for (int x : t.tau) tau.push_back(x + static_cast<int>(base));
  return {{"p", t.p}, {"base", static_cast<int>(base)}, {"tau", tau}, {"pairs", pairs}};
}

Json to_json(const BoundaryType& t) {
  Json pairs = Json::array();
  for (int r = 0; r < t.ray_count(); ++r)
    if (t.tau[r] > r) pairs.push_back({r + 1, t.tau[r] + 1});
  return {{"k", t.k}, {"arc", t.arc + 1}, {"pairs", pairs}};
}

Json to_json(const DomainLabeling& d) { return d.delta; }

Json to_json(const BoundaryWords& w) {
  return {{"mTheta", word_to_string(w.mTheta)},
          {"mZero", word_to_string(w.mZero)},
          {"mPi", word_to_string(w.mPi)},
          {"plusLabel", w.plusLabel},
          {"minusLabel", w.minusLabel}};
}

Json to_json(const RotatingLimitReport& r) {
  return {{"zeroPosition", r.zeroPosition},     {"piPosition", r.piPosition},     {"predictedZero", r.predictedZero},
          {"predictedPi", r.predictedPi},       {"distinct", r.distinct},         {"differenceIsTwo", r.differenceIsTwo},
          {"matchesPrediction", r.matchesPrediction}, {"pass", r.pass}};
}

Json to_json(const BoundSet& b) {
  Json j = Json::object();
  const auto put = [&](const char* k, const std::optional<long long>& v) {
    if (v) j[k] = *v;
  };
  put("cheng", b.cheng);
  put("besson", b.besson);
  put("nadirashvili", b.nadirashvili);
  put("hhn", b.hhn);
  return j;
}

Json to_json(const EigenProblem& p) {
  Json d{{"kind", domain_name(p.domain.kind)}};
  switch (p.domain.kind) {
    case DomainKind::Rectangle: d["width"] = p.domain.width, d["height"] = p.domain.height; break;
    case DomainKind::Disk: d["radius"] = p.domain.radius; break;
    case DomainKind::Annulus: d["rIn"] = p.domain.rIn, d["rOut"] = p.domain.rOut; break;
    case DomainKind::Masked: d["rows"] = p.domain.mask; break;
  }
  Json bc{{"kind", bc_name(p.bc.kind)}};
  if (p.bc.kind == BoundaryCondition::Robin) bc["h"] = p.bc.robin;
  return {{"formatVersion", kFormatVersion}, {"domain", d}, {"gridStep", p.gridStep}, {"potential", p.potential}, {"bc", bc}};
}

EigenProblem problem_from_json(const Json& j) {
  check_format_version(j);
  EigenProblem p;
  const Json d = get<Json>(j, "domain");
  p.domain.kind = domain_from_name(get<std::string>(d, "kind"));
  switch (p.domain.kind) {
    case DomainKind::Rectangle:
      p.domain.width = get<double>(d, "width");
      p.domain.height = get<double>(d, "height");
      break;
    case DomainKind::Disk: p.domain.radius = get<double>(d, "radius"); break;
    case DomainKind::Annulus:
      p.domain.rIn = get<double>(d, "rIn");
      p.domain.rOut = get<double>(d, "rOut");
      break;
    case DomainKind::Masked: p.domain.mask = get<std::vector<std::string>>(d, "rows"); break;
  }
  p.gridStep = get<double>(j, "gridStep");
  p.potential = get_or<std::string>(j, "potential", "0");
  Expression::parse(p.potential);
  const Json bc = get_or<Json>(j, "bc", Json{{"kind", "dirichlet"}});
  p.bc.kind = bc_from_name(get<std::string>(bc, "kind"));
  p.bc.robin = get_or<double>(bc, "h", 0.0);
  validate(p);
  return p;
}

Json solution_to_json(const EigenProblem& p, const EigenSolution& s, bool withVectors) {
  Json cl = Json::array();
  for (const auto& c : s.clusters) cl.push_back({{"first", c.first}, {"size", c.size}, {"mean", c.mean}});
  Json j{{"formatVersion", kFormatVersion},
         {"problem", to_json(p)},
         {"method", s.method},
         {"iterations", s.iterations},
         {"seed", s.seed},
         {"clusterTol", s.clusterTol},
         {"eigenvalues", s.eigenvalues},
         {"residuals", s.residuals},
         {"gaps", s.gaps},
         {"clusters", cl}};
  if (withVectors) {
    Json vs = Json::array();
    for (int c = 0; c < s.vectors.cols(); ++c) {
      std::vector<double> col(s.vectors.col(c).data(), s.vectors.col(c).data() + s.vectors.rows());
      vs.push_back(col);
    }
    j["vectors"] = vs;
  }
  return j;
}

StoredSolution solution_from_json(const Json& j) {
  check_format_version(j);
  StoredSolution st;
  st.problem = problem_from_json(get<Json>(j, "problem"));
  auto& s = st.solution;
  s.method = get_or<std::string>(j, "method", "");
  s.iterations = get_or<int>(j, "iterations", 0);
  s.seed = get_or<std::uint64_t>(j, "seed", 1);
  s.clusterTol = get_or<double>(j, "clusterTol", 1e-3);
  s.eigenvalues = get<std::vector<double>>(j, "eigenvalues");
  s.residuals = get_or<std::vector<double>>(j, "residuals", std::vector<double>(s.eigenvalues.size(), 0.0));
  s.gaps = relative_gaps(s.eigenvalues);
  s.clusters = cluster_multiplicities(s.eigenvalues, s.clusterTol);
  if (j.contains("vectors")) {
    const auto vs = get<std::vector<std::vector<double>>>(j, "vectors");
    if (vs.size() != s.eigenvalues.size()) throw MalformedInput("vector count differs from eigenvalue count");
    const size_t n = vs.empty() ? 0 : vs[0].size();
    s.vectors.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(vs.size()));
    for (size_t c = 0; c < vs.size(); ++c) {
      if (vs[c].size() != n) throw MalformedInput("vectors differ in length");
      for (size_t i = 0; i < n; ++i) s.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = vs[c][i];
    }
  }
  return st;
}

std::string solution_csv(const EigenSolution& s) {
  std::ostringstream out;
  out.precision(17);
  out << "k,lambda,residual,cluster_first,cluster_size\n";
  for (const auto& c : s.clusters)
    for (int k = c.first; k < c.first + c.size; ++k)
      out << k << ',' << s.eigenvalues[k - 1] << ',' << s.residuals[k - 1] << ',' << c.first << ',' << c.size << '\n';
  return out.str();
}

Json to_json(const NodalExtract& e, bool withPartition) {
  Json in = Json::array(), bd = Json::array();
  for (const auto& p : e.interiorSingular)
    in.push_back({{"x", p.x}, {"y", p.y}, {"nu", p.nu}, {"fitOrder", p.fitOrder}, {"fitResidual", p.fitResidual}, {"status", p.status}});
  for (const auto& p : e.boundarySingular)
    bd.push_back({{"x", p.x}, {"y", p.y}, {"rho", p.rho}, {"component", p.component}, {"rhoIsLowerBound", p.lowerBound}});
  Json j{{"kappa", e.kappa},
         {"positiveDomains", e.positiveDomains},
         {"negativeDomains", e.negativeDomains},
         {"zeroThreshold", e.zeroThreshold},
         {"interiorSingular", in},
         {"boundarySingular", bd}};
  if (withPartition) j["partition"] = to_json(e.asPartition);
  return j;
}

Json to_json(const LawReport& r) {
  Json es = Json::array(), cs = Json::array();
  for (const auto& e : r.eigen) {
    Json o{{"k", e.k},
           {"lambda", e.lambda},
           {"kappa", e.kappa},
           {"clusterFirst", e.clusterFirst},
           {"courant", e.courant},
           {"lambdaArea", e.lambdaArea},
           {"weylCount", e.weylCount},
           {"weylTerm", e.weylTerm},
           {"weylDeviation", e.weylDeviation},
           {"euler", e.euler},
           {"parity", e.parity}};
    if (e.dirichletLaws) {
      o["faberKrahnFloor"] = e.faberKrahnFloor;
      o["faberKrahn"] = e.faberKrahn;
    }
    es.push_back(o);
  }
  for (const auto& c : r.clusters) {
    Json o{{"first", c.first}, {"size", c.size}, {"lambda", c.lambda}, {"truncated", c.truncated},
           {"bound2k1", c.bound2k1}, {"nadirashvili", c.nadirashvili}};
    if (c.applies2k2) o["bound2k2"] = c.bound2k2, o["multiplicity2k2"] = c.multiplicity2k2;
    if (c.pleijelApplies) o["pleijelBound"] = c.pleijelBound, o["pleijel"] = c.pleijel;
    if (c.samples) o["samples"] = c.samples, o["maxSampleKappa"] = c.maxSampleKappa, o["courantSamples"] = c.courantSamples;
    cs.push_back(o);
  }
  return {{"seed", r.seed},          {"area", r.area},         {"eigen", es},
          {"clusters", cs},          {"courant", r.courant},   {"multiplicity", r.multiplicity},
          {"faberKrahn", r.faberKrahn}, {"pleijel", r.pleijel}, {"euler", r.euler},
          {"pass", r.pass}};
}

Json to_json(const RayFit& f) {
  return {{"order", f.order}, {"a", f.a}, {"b", f.b}, {"rayAngles", f.rayAngles}, {"residual", f.residual}, {"residualByOrder", f.residualByOrder}};
}

Json to_json(const PrescribeResult& r) {
  std::vector<double> c(r.coefficients.data(), r.coefficients.data() + r.coefficients.size());
  return {{"coefficients", c}, {"jetResidual", r.jetResidual}, {"rank", r.rank}, {"jetRows", r.jet.rows()}};
}

std::string grid_to_text(const GridField& f) {
  std::ostringstream out;
  out.precision(17);
  const auto& L = f.layout;
  out << "nodalgrid 1\n" << L.nx << ' ' << L.ny << ' ' << L.x0 << ' ' << L.y0 << ' ' << L.h << '\n';
  for (int j = 0; j < L.ny; ++j) {
    for (int i = 0; i < L.nx; ++i) out << (i ? " " : "") << f.at(i, j);
    out << '\n';
  }
  return out.str();
}

} // namespace nodal
