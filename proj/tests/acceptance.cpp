// Acceptance criteria. Each run prints one [PASS]/[FAIL] line per criterion with
// its wall time; a criterion number on the command line runs only that one.

#include "fixtures.hpp"
#include "oracles.hpp"

#include "nodal/bounds.hpp"
#include "nodal/comb_type.hpp"
#include "nodal/eigensolver.hpp"
#include "nodal/errors.hpp"
#include "nodal/laws.hpp"
#include "nodal/nodal_extract.hpp"
#include "nodal/partition.hpp"
#include "nodal/prescribe.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <string>

using namespace nodal;

namespace {

const double kPi = std::numbers::pi;

// Pinned tolerances and budgets.
constexpr double kSquareLambda1Tol = 0.01;
constexpr double kClusterRelTol = 1e-3;
constexpr double kDiskLambda1Tol = 0.015;
constexpr double kFaberKrahnEqualityTol = 0.02;
constexpr double kJetResidualTol = 1e-6;
constexpr double kGamma = 0.69166;
constexpr double kGammaTol = 1e-4;

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

std::string str(const Rational& r) {
  return r.denominator() == 1 ? std::to_string(r.numerator()) : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

EigenProblem unit_square(double h) {
  EigenProblem p;
  p.domain = DomainSpec::rectangle(1, 1);
  p.gridStep = h;
  return p;
}

EigenProblem unit_disk(double h) {
  EigenProblem p;
  p.domain = DomainSpec::disk(1);
  p.gridStep = h;
  return p;
}

Outcome reference_round_trip() {
  Outcome o;
  const InteriorType tau{8, {3, 2, 1, 0, 9, 8, 7, 6, 5, 4, 15, 12, 11, 14, 13, 10}};
  const std::vector<int> delta = {1, 2, 1, 3, 4, 5, 6, 5, 4, 3, 7, 8, 7, 9, 7, 3};
  const auto d = labeling_from_type(tau);
  o.require(d.delta == delta, "labeling differs from the reference delta");
  o.require(type_from_labeling({delta}) == tau, "type_from_labeling does not invert");
  return o;
}

Outcome catalan_counts() {
  Outcome o;
  const long long expected[] = {1, 2, 5, 14, 42, 132, 429, 1430};
  for (int p = 1; p <= 8; ++p) {
    std::set<std::vector<int>> oracle;
    oracle::for_each_involution(p, [&](const std::vector<int>& t) {
      for (int j = 0; j < 2 * p; ++j)
        if ((t[j] - j) % 2 == 0) return;
      if (oracle::non_crossing(t)) oracle.insert(t);
    });
    std::set<std::vector<int>> got;
    for (const auto& t : enumerate_interior(p)) got.insert(t.tau);
    o.require(static_cast<long long>(got.size()) == expected[p - 1], "count mismatch at p = " + std::to_string(p));
    o.require(got == oracle, "enumeration differs from the brute-force oracle at p = " + std::to_string(p));
  }
  return o;
}

Outcome rotating_sphere() {
  Outcome o;
  const auto one = shift_invariant_types(1);
  o.require(one.size() == 1 && one[0] == interior_from_pairs(1, {{0, 1}}), "p = 1 should give the single matching");
  for (int p = 2; p <= 8; ++p)
    o.require(shift_invariant_types(p).empty(), "shift-invariant type found at p = " + std::to_string(p));
  return o;
}

Outcome rotating_boundary() {
  Outcome o;
  int total = 0, differenceTwo = 0;
  std::map<int, int> histogram;
  std::string firstBad;
  for (int k = 3; k <= 7; ++k)
    for (const auto& t : enumerate_boundary(k)) {
      ++total;
      const auto r = rotating_limit_check(t);
      ++histogram[r.zeroPosition - r.piPosition];
      if (r.differenceIsTwo) {
        ++differenceTwo;
      } else if (firstBad.empty()) {
        const auto w = boundary_words(t);
        firstBad = "k=" + std::to_string(k) + " m0=" + word_to_string(w.mZero) + " mpi=" + word_to_string(w.mPi) +
                   " positions (" + std::to_string(r.zeroPosition) + "," + std::to_string(r.piPosition) + ")";
      }
    }
  std::string spread;
  for (auto [d, n] : histogram) spread += (spread.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(n);
  o.note(std::to_string(differenceTwo) + "/" + std::to_string(total) + " types with difference 2 (difference:count " + spread + ")");
  o.require(differenceTwo == total, "first counterexample " + firstBad);

  const auto arc3 = boundary_words(boundary_from_pairs(4, 3, {{1, 2}, {4, 5}}));
  o.require(word_to_string(arc3.mTheta) == "121343" && word_to_string(arc3.mPi) == "1213431" &&
                word_to_string(arc3.mZero) == "3121343",
            "arc-3 type words differ");
  const auto left = boundary_words(boundary_from_pairs(4, 5, {{1, 2}, {3, 4}}));
  const auto right = boundary_words(boundary_from_pairs(4, 1, {{2, 3}, {4, 5}}));
  o.require(word_to_string(left.mTheta) == "121314", "left pattern differs");
  o.require(word_to_string(right.mTheta) == "123242", "right pattern differs");
  o.require(!compare_patterns(left.mTheta, right.mTheta).equal, "the two limit patterns compare equal");
  return o;
}

Outcome euler_identities() {
  Outcome o;
  std::mt19937_64 rng(1000);
  int failures = 0, preserved = 0;
  auto check = [&](const EmbeddedPartition& p) {
    if (!verify_euler(p).pass) ++failures;
    const auto a = partition_stats(p);
    const auto b = partition_stats(normalize(p));
    if (a.beta == b.beta && a.omega == b.omega && Rational(a.kappa) - a.sigma() == Rational(b.kappa) - b.sigma())
      ++preserved;
  };
  for (int i = 0; i < 1000; ++i) check(fixtures::random_partition(rng, i % 4 - 1, 2 + i % 10));
  for (const auto& [name, p] : fixtures::moebius_fixtures()) check(p);
  const int total = 1000 + static_cast<int>(fixtures::moebius_fixtures().size());
  o.note(std::to_string(total) + " partitions");
  o.require(failures == 0, std::to_string(failures) + " Euler failures");
  o.require(preserved == total, std::to_string(total - preserved) + " normalizations changed (beta, kappa - sigma, omega)");
  return o;
}

Outcome spectral_regression() {
  Outcome o;
  const auto sq = solve_eigen(assemble_operator(unit_square(1.0 / 128)), {.count = 3, .clusterTol = kClusterRelTol});
  const double l1 = 2 * kPi * kPi, l2 = 5 * kPi * kPi;
  const double e1 = std::abs(sq.eigenvalues[0] - l1) / l1;
  o.note(fmt("square lambda1 %.5f (rel %.2e)", sq.eigenvalues[0], e1));
  o.require(e1 < kSquareLambda1Tol, "square lambda1 off");
  bool cluster = false;
  for (const auto& c : sq.clusters)
    if (c.first == 2 && c.size == 2 && std::abs(c.mean - l2) / l2 < kClusterRelTol) cluster = true;
  o.require(cluster, "no size-2 cluster at 5 pi^2");

  const auto disk = solve_eigen(assemble_operator(unit_disk(1.0 / 128)), {.count = 1});
  const double j = j01();
  const double e2 = std::abs(disk.eigenvalues[0] - j * j) / (j * j);
  o.note(fmt("disk lambda1 %.5f (rel %.2e)", disk.eigenvalues[0], e2));
  o.require(e2 < kDiskLambda1Tol, "disk lambda1 off");
  return o;
}

Outcome nodal_extraction() {
  Outcome o;
  const auto layout = build_layout(DomainSpec::rectangle(1, 1), 1.0 / 64, true);
  const auto u = sample_field(layout, [](double x, double y) { return std::sin(2 * kPi * x) * std::sin(2 * kPi * y); });
  const auto e = extract_nodal(u);
  o.require(e.kappa == 4, "kappa " + std::to_string(e.kappa));
  o.require(e.interiorSingular.size() == 1 && e.interiorSingular[0].nu == 4, "expected one interior point of degree 4");
  bool rho = e.boundarySingular.size() == 4;
  for (const auto& b : e.boundarySingular) rho = rho && b.rho == 1;
  o.require(rho, "expected four boundary points with rho 1");
  const auto r = verify_euler(e.asPartition);
  o.note(std::to_string(r.stats.kappa) + " = 1 + " + std::to_string(r.stats.beta) + " + " + str(r.stats.sigmaI) + " + " +
         str(r.stats.sigmaB));
  o.require(r.pass && r.stats.beta == 0 && r.stats.sigmaI == Rational(1) && r.stats.sigmaB == Rational(2),
            "Euler identity does not read 4 = 1 + 0 + 1 + 2");
  return o;
}

Outcome law_report() {
  Outcome o;
  const auto op = assemble_operator(unit_square(1.0 / 64));
  const auto sol = solve_eigen(op, {.count = 10});
  LawOptions lo;
  lo.randomCombinations = 200;
  const auto r = verify_spectral_laws(sol, op, lo);
  o.require(r.courant, "Courant");
  o.require(r.multiplicity, "multiplicity bounds");
  o.require(r.faberKrahn, "Faber-Krahn");
  o.require(r.pleijel, "Pleijel");
  int samples = 0;
  for (const auto& c : r.clusters) samples += c.samples;
  o.note(std::to_string(r.clusters.size()) + " clusters, " + std::to_string(samples) + " random combinations");
  if (!r.euler) o.note("Euler check failed on some eigenvector");

  const auto dop = assemble_operator(unit_disk(1.0 / 128));
  const auto dsol = solve_eigen(dop, {.count = 1});
  const double ratio = dsol.eigenvalues[0] * dop.area / faber_krahn_floor(1);
  o.note(fmt("disk lambda1 |D| / (pi j01^2) = %.4f", ratio));
  o.require(std::abs(ratio - 1) < kFaberKrahnEqualityTol, "disk misses Faber-Krahn equality");
  return o;
}

Outcome prescribed_points() {
  Outcome o;
  const auto op = assemble_operator(unit_disk(1.0 / 64));
  const auto sol = solve_eigen(op, {.count = 3});
  const Cluster* pair = nullptr;
  for (const auto& c : sol.clusters)
    if (c.size >= 2) {
      pair = &c;
      break;
    }
  if (!pair) {
    o.require(false, "no degenerate cluster among the first eigenvalues");
    return o;
  }
  std::vector<GridField> grids;
  for (int k = pair->first; k < pair->first + pair->size; ++k) grids.push_back(eigenfield(op, sol, k));
  const auto basis = as_fields(grids);

  const double phi = 0.7, h = op.grid.h;
  const BoundarySite site{std::cos(phi), std::sin(phi), std::cos(phi), std::sin(phi), 1.0};
  const auto b = prescribe_singular(basis, site, 1, {.radius = 0.15, .inset = 2 * h});
  o.note(fmt("boundary jet residual %.1e", b.jetResidual));
  o.require(b.jetResidual < kJetResidualTol, "boundary jet residual");
  // The combination should vanish just inside the requested point.
  auto combined = [&](double x, double y) {
    double s = 0;
    for (size_t i = 0; i < basis.size(); ++i) s += b.coefficients[i] * basis[i](x, y);
    return s;
  };
  double peak = 0;
  for (int i = 0; i < 64; ++i) peak = std::max(peak, std::abs(combined(0.9 * std::cos(i * kPi / 32), 0.9 * std::sin(i * kPi / 32))));
  const double at = std::abs(combined((1 - 2 * h) * std::cos(phi), (1 - 2 * h) * std::sin(phi)));
  o.note(fmt("trace at the point %.1e of the ring peak", at / peak));
  o.require(at / peak < 1e-2, "combination does not vanish at the boundary point");

  const auto i2 = prescribe_singular(basis, 0.3, 0.2, 1);
  o.require(i2.jetResidual < kJetResidualTol, "interior m = 2");

  std::vector<ScalarField> triple;
  for (auto [m, n] : {std::pair{1, 7}, std::pair{7, 1}, std::pair{5, 5}})
    triple.push_back([m, n](double x, double y) { return std::sin(m * kPi * x) * std::sin(n * kPi * y); });
  const auto i3 = prescribe_singular(triple, 0.3, 0.45, 1);
  o.require(i3.jetResidual < kJetResidualTol, "interior m = 3");
  return o;
}

Outcome gamma_constant() {
  Outcome o;
  const double g = pleijel_gamma();
  o.note(fmt("gamma %.6f, j01 %.12f", g, j01()));
  o.require(std::abs(g - kGamma) <= kGammaTol, "gamma off");
  o.require(g < 1, "gamma >= 1");
  o.require(std::abs(j01() - oracle::bessel_zero(0, 1)) < 1e-10, "j01 disagrees with the library Bessel root");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budgetSeconds;
  std::function<Outcome()> run;
};

} // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "p = 8 labeling round trip", 0.010, reference_round_trip},
      {2, "Catalan enumeration", 1.0, catalan_counts},
      {3, "rotating argument on the sphere", 10.0, rotating_sphere},
      {4, "rotating argument at the boundary", 1.0, rotating_boundary},
      {5, "Euler identities", 5.0, euler_identities},
      {6, "spectral regression", 60.0, spectral_regression},
      {7, "nodal extraction", 5.0, nodal_extraction},
      {8, "law report", 60.0, law_report},
      {9, "prescribed singular points", 30.0, prescribed_points},
      {10, "gamma constant", 1.0, gamma_constant},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  if (argc > 1 && (only < 1 || only > 10)) {
    std::fprintf(stderr, "usage: %s [criterion 1-10]\n", argv[0]);
    return 2;
  }
  bool ok = true;
  for (const auto& c : all) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("threw ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budgetSeconds) o.require(false, fmt("over budget %.3g s", c.budgetSeconds));
    std::printf("[%s] %d %s (%.3f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.empty() ? "" : ": ",
                o.detail.c_str());
    ok = ok && o.pass;
  }
  return ok ? 0 : 1;
}
