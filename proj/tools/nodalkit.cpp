#include "nodal/bounds.hpp"
#include "nodal/comb_type.hpp"
#include "nodal/eigensolver.hpp"
#include "nodal/errors.hpp"
#include "nodal/json_io.hpp"
#include "nodal/laws.hpp"
#include "nodal/nodal_extract.hpp"
#include "nodal/nodal_graph.hpp"
#include "nodal/partition.hpp"
#include "nodal/svg.hpp"
#include "nodal/type_text.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace nodal;

namespace {

constexpr const char* kToolVersion = "1.0.0";

struct Settings {
  double tol = 1e-8;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string reportPath;
  int p = 4;
  int k = 6;
  int index = 1;
  int base = 0;
  std::string file;
  std::string output;
  std::string csvPath;
  bool laws = false;
};

struct Run {
  std::vector<std::string> command;
  std::uint64_t digest = 0xcbf29ce484222325ULL;
  Json checks = Json::array();
  Json data = Json::object();
  std::string summary;

  void absorb(const std::string& bytes) {
    for (unsigned char c : bytes) {
      digest ^= c;
      digest *= 0x100000001b3ULL;
    }
  }
  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    Json c{{"name", name}, {"pass", pass}};
    if (!detail.empty()) c["detail"] = detail;
    checks.push_back(c);
  }
  bool pass() const {
    for (const auto& c : checks)
      if (!c["pass"].get<bool>()) return false;
    return true;
  }
};

std::string read_input(Run& run, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedInput("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  run.absorb(ss.str());
  return ss.str();
}

Json parse_json(const std::string& text, const std::string& path) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedInput("'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw MalformedInput("cannot write '" + path + "'");
  out << text;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

// ---- partition

void partition_euler(Run& run, const Settings& s) {
  const auto p = partition_from_json(parse_json(read_input(run, s.file), s.file));
  validate(p);
  const auto euler = verify_euler(p);
  const auto parity = check_boundary_parity(p);
  const auto counts = build_multigraph(p);
  run.data["surface"] = describe(p.surface);
  run.data["euler"] = to_json(euler);
  run.data["parity"] = to_json(parity);
  run.data["multigraph"] = to_json(counts);
  run.data["essential"] = is_essential(p);
  run.data["nonNormalVertices"] = non_normal_vertices(p);
  run.check("euler", euler.pass, euler.formula);
  run.check("boundaryParity", parity.pass);
  run.check("multigraphCounts", counts.consistent);
  run.summary = euler.formula + (euler.pass ? " holds" : " fails");
}

void partition_normalize(Run& run, const Settings& s) {
  const auto p = partition_from_json(parse_json(read_input(run, s.file), s.file));
  validate(p);
  const auto before = partition_stats(p);
  const auto q = normalize(p);
  const auto after = partition_stats(q);
  const auto eulerAfter = verify_euler(q);
  run.data["before"] = to_json(before);
  run.data["after"] = to_json(after);
  run.data["normalized"] = to_json(q);
  run.check("betaPreserved", before.beta == after.beta);
  run.check("kappaMinusSigmaPreserved", Rational(before.kappa) - before.sigma() == Rational(after.kappa) - after.sigma());
  run.check("omegaPreserved", before.omega == after.omega);
  run.check("normal", non_normal_vertices(q).empty());
  run.check("euler", eulerAfter.pass, eulerAfter.formula);
  if (!s.output.empty()) write_output(s.output, to_json(q).dump(2) + "\n");
  run.summary = "normalized " + std::to_string(non_normal_vertices(p).size()) + " non-normal vertices";
}

// ---- types

void types_enum(Run& run, const Settings& s) {
  const auto all = enumerate_interior(s.p);
  Json list = Json::array();
  for (const auto& t : all) list.push_back(to_json(t, static_cast<IndexBase>(s.base)));
  run.data["p"] = s.p;
  run.data["count"] = all.size();
  run.data["types"] = list;
  run.check("catalanCount", static_cast<long long>(all.size()) == catalan(s.p));
  run.summary = std::to_string(all.size()) + " types for p = " + std::to_string(s.p);
}

void types_label(Run& run, const Settings& s) {
  const auto m = parse_type_matrix(read_input(run, s.file));
  IndexBase base = IndexBase::Zero;
  const auto t = interior_from_matrix(m, &base);
  const auto d = labeling_from_type(t);
  const auto back = type_from_labeling(d);
  run.data["type"] = to_json(t, base);
  run.data["delta"] = to_json(d);
  run.data["labels"] = t.p + 1;
  run.check("labelingValid", validate_labeling(d).valid);
  run.check("roundTrip", back == t);
  run.summary = "δ = " + join(d.delta);
}

void types_rotate_check(Run& run, const Settings& s) {
  const auto all = enumerate_interior(s.p);
  const auto inv = shift_invariant_types(s.p);
  Json list = Json::array();
  for (const auto& t : inv) list.push_back(to_json(t));
  run.data["p"] = s.p;
  run.data["total"] = all.size();
  run.data["invariant"] = list;
  const size_t expected = s.p == 1 ? 1 : 0;
  run.check("shiftInvariantCount", inv.size() == expected,
            "expected " + std::to_string(expected) + ", found " + std::to_string(inv.size()));
  run.summary = std::to_string(inv.size()) + " shift-invariant types among " + std::to_string(all.size());
}

void types_words(Run& run, const Settings& s) {
  const auto m = parse_type_matrix(read_input(run, s.file));
  if (classify(m) != MatrixKind::Boundary)
    throw MalformedInput(std::string("expected a boundary type matrix, got ") + kind_name(classify(m)));
  const auto t = boundary_from_matrix(m);
  const auto w = boundary_words(t);
  const auto r = rotating_limit_check(t);
  run.data["type"] = to_json(t);
  run.data["words"] = to_json(w);
  run.data["rotatingLimit"] = to_json(r);
  run.check("limitPatternsDiffer", r.pass,
            "first repeats " + std::to_string(r.zeroPosition) + " and " + std::to_string(r.piPosition));
  run.summary = "m0 = " + word_to_string(w.mZero) + " (" + std::to_string(r.zeroPosition) + "), mpi = " +
                word_to_string(w.mPi) + " (" + std::to_string(r.piPosition) + ")";
}

// ---- spectral

SolverOptions solver_options(const Settings& s) {
  SolverOptions o;
  o.count = s.k;
  o.tol = s.tol;
  o.seed = s.seed;
  o.threads = s.threads;
  return o;
}

LawOptions law_options(const Settings& s) {
  LawOptions o;
  o.seed = s.seed;
  o.threads = s.threads;
  return o;
}

void add_law_checks(Run& run, const LawReport& r) {
  run.data["laws"] = to_json(r);
  run.check("courant", r.courant);
  run.check("multiplicity", r.multiplicity);
  run.check("faberKrahn", r.faberKrahn);
  run.check("pleijel", r.pleijel);
  run.check("euler", r.euler);
}

void solve(Run& run, const Settings& s) {
  const auto problem = problem_from_json(parse_json(read_input(run, s.file), s.file));
  const auto op = assemble_operator(problem);
  const auto sol = solve_eigen(op, solver_options(s));
  run.data["size"] = op.size();
  run.data["area"] = op.area;
  run.data["solution"] = solution_to_json(problem, sol, false);
  double worst = 0;
  for (double r : sol.residuals) worst = std::max(worst, r);
  const double scale = std::max(1.0, std::abs(sol.eigenvalues.back()));
  run.check("residual", worst / scale <= std::max(s.tol, 1e-6), "max residual " + std::to_string(worst));
  if (!s.output.empty()) write_output(s.output, solution_to_json(problem, sol, true).dump() + "\n");
  if (!s.csvPath.empty()) write_output(s.csvPath, solution_csv(sol));
  if (s.laws) add_law_checks(run, verify_spectral_laws(sol, op, law_options(s)));
  std::ostringstream sum;
  sum.precision(8);
  sum << sol.eigenvalues.size() << " eigenvalues, lambda1 = " << sol.eigenvalues.front() << ", " << sol.clusters.size()
      << " clusters";
  run.summary = sum.str();
}

struct Loaded {
  StoredSolution stored;
  DiscreteOperator op;
};

Loaded load_solution(Run& run, const std::string& path) {
  Loaded l{solution_from_json(parse_json(read_input(run, path), path)), {}};
  l.op = assemble_operator(l.stored.problem);
  if (l.stored.solution.vectors.rows() != l.op.size())
    throw MalformedInput("stored vectors do not match the grid of the stored problem");
  return l;
}

NodalExtract extract_index(const Loaded& l, int index, double zeroTol) {
  const auto& sol = l.stored.solution;
  if (index < 1 || index > static_cast<int>(sol.eigenvalues.size()))
    throw MalformedInput("eigenvalue index " + std::to_string(index) + " out of range 1.." +
                         std::to_string(sol.eigenvalues.size()));
  ExtractOptions opt;
  opt.zeroTol = zeroTol;
  opt.residual = sol.residuals[index - 1];
  return extract_nodal(eigenfield(l.op, sol, index), opt);
}

void nodal_report(Run& run, const Settings& s) {
  const auto l = load_solution(run, s.file);
  const auto e = extract_index(l, s.index, s.tol);
  const auto euler = verify_euler(e.asPartition);
  const auto parity = check_boundary_parity(e.asPartition);
  const auto& sol = l.stored.solution;
  int clusterFirst = s.index;
  for (const auto& c : sol.clusters)
    if (s.index >= c.first && s.index < c.first + c.size) clusterFirst = c.first;
  run.data["index"] = s.index;
  run.data["lambda"] = sol.eigenvalues[s.index - 1];
  run.data["extract"] = to_json(e);
  run.data["euler"] = to_json(euler);
  run.data["parity"] = to_json(parity);
  run.check("courant", e.kappa <= clusterFirst,
            "kappa " + std::to_string(e.kappa) + ", cluster starts at " + std::to_string(clusterFirst));
  run.check("euler", euler.pass, euler.formula);
  run.check("boundaryParity", parity.pass);
  run.summary = "kappa = " + std::to_string(e.kappa) + ", " + std::to_string(e.interiorSingular.size()) +
                " interior and " + std::to_string(e.boundarySingular.size()) + " boundary singular points";
}

void plot(Run& run, const Settings& s) {
  if (s.output.empty()) throw MalformedInput("plot needs -o <file.svg>");
  const auto l = load_solution(run, s.file);
  const auto e = extract_index(l, s.index, s.tol);
  SvgOptions opt;
  opt.pixelsPerCell = std::max(2, 512 / std::max(e.cellsX, e.cellsY));
  opt.title = "eigenfunction " + std::to_string(s.index) + ", kappa " + std::to_string(e.kappa);
  write_output(s.output, render_svg(e, opt));
  run.data["index"] = s.index;
  run.data["kappa"] = e.kappa;
  run.data["svg"] = s.output;
  run.summary = "wrote " + s.output;
}

void laws(Run& run, const Settings& s) {
  const auto l = load_solution(run, s.file);
  const auto r = verify_spectral_laws(l.stored.solution, l.op, law_options(s));
  add_law_checks(run, r);
  run.summary = std::string("laws ") + (r.pass ? "hold" : "fail") + " on " + std::to_string(r.eigen.size()) + " eigenpairs";
}

void bounds(Run& run, const Settings& s) {
  if (s.k < 1) throw MalformedInput("k must be positive");
  const auto surface = surface_from_name(s.file);
  const auto b = classical_bounds(surface, s.k);
  run.data = to_json(b);
  if (s.k == 2) {
    if (const auto tab = tabulated_mult_lambda2(surface); tab && b.best())
      run.check("tableColumn", *b.best() == *tab,
                "formula " + std::to_string(*b.best()) + ", column " + std::to_string(*tab));
  }
  run.summary = describe(surface) + ", k = " + std::to_string(s.k) + ": " + run.data.dump();
}

int exit_code_for(const Error& e) {
  const auto& k = e.kind();
  if (k == "NoConvergence" || k == "NoRepeat" || k == "NoFit" || k == "InfeasibleOrder" || k == "AllZeroField") return 1;
  return 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"nodalkit: nodal partitions, combinatorial types and eigenfunction laws"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_option("--tol", s.tol, "solver tolerance, or relative zero threshold for nodal extraction")->check(CLI::PositiveNumber);
  app.add_option("--seed", s.seed, "random seed");
  app.add_option("--threads", s.threads, "worker threads")->check(CLI::Range(1, 256));
  app.add_option("--report", s.reportPath, "write the JSON report here instead of stdout");

  std::function<void(Run&, const Settings&)> action;
  const auto on = [&](CLI::App* sub, void (*fn)(Run&, const Settings&)) { sub->callback([&action, fn] { action = fn; }); };

  auto* part = app.add_subcommand("partition", "embedded partition checks");
  part->require_subcommand(1);
  auto* pe = part->add_subcommand("euler", "verify the Euler identity and boundary parity");
  pe->add_option("file", s.file)->required();
  on(pe, partition_euler);
  auto* pn = part->add_subcommand("normalize", "normalize a partition");
  pn->add_option("file", s.file)->required();
  pn->add_option("-o", s.output, "write the normalized partition");
  on(pn, partition_normalize);

  auto* types = app.add_subcommand("types", "combinatorial types");
  types->require_subcommand(1);
  auto* te = types->add_subcommand("enum", "enumerate interior types");
  te->add_option("-p", s.p)->required()->check(CLI::Range(1, kDefaultEnumerationCap));
  te->add_option("--base", s.base, "index base of the listed rays")->check(CLI::IsMember({0, 1}));
  on(te, types_enum);
  auto* tl = types->add_subcommand("label", "domain labeling of an interior type");
  tl->add_option("file", s.file)->required();
  on(tl, types_label);
  auto* tr = types->add_subcommand("rotate-check", "types invariant under every cyclic shift");
  tr->add_option("-p", s.p)->required()->check(CLI::Range(1, kDefaultEnumerationCap));
  on(tr, types_rotate_check);
  auto* tw = types->add_subcommand("words", "limit words of a boundary type");
  tw->add_option("file", s.file)->required();
  on(tw, types_words);

  auto* sv = app.add_subcommand("solve", "discrete eigenproblem");
  sv->add_option("problem", s.file)->required();
  sv->add_option("-k", s.k, "number of eigenpairs")->check(CLI::Range(1, 500));
  sv->add_option("-o", s.output, "write the solution with eigenvectors");
  sv->add_option("--csv", s.csvPath, "write eigenvalues as CSV");
  sv->add_flag("--laws", s.laws, "also verify the spectral laws");
  on(sv, solve);

  auto* nd = app.add_subcommand("nodal", "nodal set analysis");
  nd->require_subcommand(1);
  auto* nr = nd->add_subcommand("report", "extract the nodal partition of one eigenfunction");
  nr->add_option("solution", s.file)->required();
  nr->add_option("index", s.index)->required();
  on(nr, nodal_report);

  auto* pl = app.add_subcommand("plot", "SVG of the sign regions and nodal lines");
  pl->add_option("solution", s.file)->required();
  pl->add_option("index", s.index)->required();
  pl->add_option("-o", s.output)->required();
  on(pl, plot);

  auto* lw = app.add_subcommand("laws", "verify the spectral laws on a stored solution");
  lw->add_option("solution", s.file)->required();
  on(lw, laws);

  auto* bd = app.add_subcommand("bounds", "classical multiplicity bounds");
  bd->add_option("surface", s.file)->required();
  bd->add_option("-k", s.k)->required();
  on(bd, bounds);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Run run;
  for (int i = 1; i < argc; ++i) run.command.emplace_back(argv[i]);
  int code = 0;
  bool threw = false;
  try {
    action(run, s);
    code = run.pass() ? 0 : 1;
  } catch (const Error& e) {
    run.check(e.kind(), false, e.what());
    run.summary = e.what();
    code = exit_code_for(e);
    threw = true;
  } catch (const std::exception& e) {
    run.check("internal", false, e.what());
    run.summary = e.what();
    code = 2;
    threw = true;
  }

  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(run.digest));
  Json report{{"formatVersion", kFormatVersion},
              {"tool", "nodalkit"},
              {"version", kToolVersion},
              {"command", run.command},
              {"inputDigest", std::string("fnv1a64:") + digest},
              {"seed", s.seed},
              {"threads", s.threads},
              {"pass", code == 0},
              {"checks", run.checks},
              {"data", run.data}};
  const std::string text = report.dump(2) + "\n";
  if (s.reportPath.empty()) {
    std::cout << text;
    std::cerr << run.summary << '\n';
  } else {
    try {
      write_output(s.reportPath, text);
    } catch (const Error& e) {
      std::cerr << e.what() << '\n';
      return 2;
    }
    std::cout << run.summary << '\n';
  }
  for (const auto& c : run.checks)
    if (!threw && !c["pass"].get<bool>())
      std::cerr << "failed: " << c["name"].get<std::string>() << (c.contains("detail") ? " (" + c["detail"].get<std::string>() + ")" : "")
                << '\n';
  return code;
}
