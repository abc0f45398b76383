#include "nodal/laws.hpp"

#include "nodal/bounds.hpp"
#include "nodal/errors.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace nodal {

namespace {

// Independent stream per (cluster, sample) so results do not depend on scheduling.
std::uint64_t sample_seed(std::uint64_t seed, int cluster, int sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(cluster),
                    static_cast<std::uint32_t>(sample)};
  std::uint32_t out[2];
  seq.generate(out, out + 2);
  return (std::uint64_t(out[0]) << 32) | out[1];
}

} // namespace

LawReport verify_spectral_laws(const EigenSolution& sol, const DiscreteOperator& op, const LawOptions& opt) {
  LawReport rep;
  rep.seed = opt.seed;
  rep.area = op.area;
  const int K = static_cast<int>(sol.eigenvalues.size());
  std::vector<int> clusterOf(K + 1, 0);
  for (size_t c = 0; c < sol.clusters.size(); ++c)
    for (int k = sol.clusters[c].first; k < sol.clusters[c].first + sol.clusters[c].size; ++k) clusterOf[k] = static_cast<int>(c);

  for (int k = 1; k <= K; ++k) {
    const Cluster& cl = sol.clusters[clusterOf[k]];
    EigenLaw e;
    e.k = k;
    e.clusterFirst = cl.first;
    e.lambda = sol.eigenvalues[k - 1];
    const GridField f = eigenfield(op, sol, k);
    ExtractOptions eo = opt.extract;
    eo.residual = std::max(eo.residual, sol.residuals[k - 1]);
    if (opt.checkEuler) {
      const NodalExtract ex = extract_nodal(f, eo);
      e.kappa = ex.kappa;
      const EulerReport er = verify_euler(ex.asPartition);
      e.euler = er.pass;
      e.eulerFormula = er.formula;
      e.parity = check_boundary_parity(ex.asPartition).pass;
    } else {
      e.kappa = count_nodal_domains(f, eo.zeroTol);
    }
    e.courant = e.kappa <= cl.first;
    e.lambdaArea = e.lambda * op.area;
    e.faberKrahnFloor = faber_krahn_floor(e.kappa);
    e.dirichletLaws = op.bc.kind == BoundaryCondition::Dirichlet;
    e.faberKrahn = !e.dirichletLaws || e.lambdaArea >= (1 - opt.faberKrahnTol) * e.faberKrahnFloor;
    const int last = cl.first + cl.size - 1;
    e.weylCount = last;
    e.weylTerm = weyl_term(e.lambda, op.area);
    e.weylDeviation = e.weylTerm > 0 ? (last - e.weylTerm) / e.weylTerm : 0.0;
    rep.courant = rep.courant && e.courant;
    rep.faberKrahn = rep.faberKrahn && e.faberKrahn;
    rep.euler = rep.euler && e.euler && e.parity;
    rep.eigen.push_back(e);
  }

  for (size_t c = 0; c < sol.clusters.size(); ++c) {
    const Cluster& cl = sol.clusters[c];
    ClusterLaw r;
    r.first = cl.first;
    r.size = cl.size;
    r.lambda = cl.mean;
    r.truncated = cl.first + cl.size - 1 == K;
    const int k = cl.first;
    r.bound2k1 = 2 * k - 1;
    r.nadirashvili = r.size <= r.bound2k1;
    r.applies2k2 = k >= 3;
    r.bound2k2 = 2 * k - 2;
    r.multiplicity2k2 = !r.applies2k2 || r.size <= r.bound2k2;
    r.pleijelApplies = op.bc.kind == BoundaryCondition::Dirichlet && cl.mean > 0;
    r.pleijel = true;
    if (r.pleijelApplies) {
      r.pleijelBound = pleijel_bound(sol.eigenvalues[k - 1] * (1 + opt.pleijelTol), op.area).multBound;
      r.pleijel = r.size <= r.pleijelBound;
    }
    if (r.size > 1 && opt.randomCombinations > 0) {
      r.samples = opt.randomCombinations;
      std::vector<int> kappas(r.samples, 0);
      const int threads = std::max(1, opt.threads);
      std::vector<std::thread> pool;
      const auto work = [&](int t) {
        for (int s = t; s < r.samples; s += threads) {
          std::mt19937_64 rng(sample_seed(opt.seed, static_cast<int>(c), s));
          std::normal_distribution<double> normal;
          Eigen::VectorXd w(r.size);
          for (int i = 0; i < r.size; ++i) w[i] = normal(rng);
          w.normalize();
          const Eigen::VectorXd u = sol.vectors.middleCols(k - 1, r.size) * w;
          kappas[s] = count_nodal_domains(field_from_vector(op.grid, u), opt.extract.zeroTol);
        }
      };
      if (threads == 1) {
        work(0);
      } else {
        for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
        for (auto& th : pool) th.join();
      }
      r.maxSampleKappa = *std::max_element(kappas.begin(), kappas.end());
      r.courantSamples = r.maxSampleKappa <= k;
    }
    rep.courant = rep.courant && r.courantSamples;
    rep.multiplicity = rep.multiplicity && r.nadirashvili && r.multiplicity2k2;
    rep.pleijel = rep.pleijel && r.pleijel;
    rep.clusters.push_back(r);
  }
  rep.pass = rep.courant && rep.multiplicity && rep.faberKrahn && rep.pleijel && rep.euler;
  return rep;
}

} // namespace nodal
