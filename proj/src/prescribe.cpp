#include "nodal/prescribe.hpp"

#include "nodal/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace nodal {

namespace {

PrescribeResult null_combination(Eigen::MatrixXd J) {
  const int m = static_cast<int>(J.cols());
  PrescribeResult r;
  r.jet = J;
  // Pad to a square system so that the SVD always exposes m singular values.
  if (J.rows() < m) {
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(m, m);
    P.topRows(J.rows()) = J;
    J = P;
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(J, Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double top = s.size() ? s[0] : 0.0;
  const double tol = 1e-9 * std::max(top, 1e-300);
  r.rank = 0;
  for (int i = 0; i < s.size(); ++i) r.rank += s[i] > tol;
  if (r.rank >= m) throw InfeasibleOrder("jet matrix has full rank " + std::to_string(m) + "; no combination suppresses the jet");
  Eigen::VectorXd c = svd.matrixV().col(m - 1);
  Eigen::Index at = 0;
  c.cwiseAbs().maxCoeff(&at);
  if (c[at] < 0) c = -c;
  r.coefficients = c.normalized();
  double biggest = 0;
  for (int k = 0; k < m; ++k) biggest = std::max(biggest, r.jet.col(k).norm());
  r.jetResidual = biggest > 0 ? (r.jet * r.coefficients).norm() / biggest : 0.0;
  return r;
}

void check_basis(const std::vector<ScalarField>& basis, int order) {
  if (basis.size() < 2) throw MalformedInput("prescription needs at least two basis functions");
  if (order < 1) throw MalformedInput("target order must be positive");
}

} // namespace

std::vector<ScalarField> as_fields(const std::vector<GridField>& grids) {
  std::vector<ScalarField> out;
  for (const auto& g : grids) out.push_back([&g](double x, double y) { return g.interpolate(x, y); });
  return out;
}

PrescribeResult prescribe_singular(const std::vector<ScalarField>& basis, double x0, double y0, int order,
                                   const PrescribeOptions& opt) {
  check_basis(basis, order);
  const int m = static_cast<int>(basis.size());
  const int deg = order + 4;
  // Monomials s^a t^b (a + b <= deg) in coordinates scaled by the radius.
  std::vector<std::pair<int, int>> mono;
  for (int d = 0; d <= deg; ++d)
    for (int b = 0; b <= d; ++b) mono.emplace_back(d - b, b);
  std::vector<std::pair<double, double>> pts;
  const int n = opt.samples;
  for (int a = -n; a <= n; ++a)
    for (int b = -n; b <= n; ++b) {
      const double s = double(a) / n, t = double(b) / n;
      if (s * s + t * t <= 1.0) pts.emplace_back(s, t);
    }
  Eigen::MatrixXd A(pts.size(), mono.size());
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t k = 0; k < mono.size(); ++k)
      A(i, k) = std::pow(pts[i].first, mono[k].first) * std::pow(pts[i].second, mono[k].second);
  const auto qr = A.colPivHouseholderQr();

  Eigen::MatrixXd J(2 * order - 1, m);
  for (int f = 0; f < m; ++f) {
    Eigen::VectorXd v(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) v[i] = basis[f](x0 + opt.radius * pts[i].first, y0 + opt.radius * pts[i].second);
    const Eigen::VectorXd c = qr.solve(v);
    const auto coef = [&](int a, int b) {
      const int d = a + b;
      return c[d * (d + 1) / 2 + b];
    };
    J(0, f) = coef(0, 0);
    for (int j = 1; j < order; ++j) {
      // sum_q c_{j-q,q} (-i)^q is proportional to the j-th Wirtinger derivative d/dz.
      std::complex<double> z = 0, w = 1;
      for (int q = 0; q <= j; ++q) {
        z += coef(j - q, q) * w;
        w *= std::complex<double>(0, -1);
      }
      J(2 * j - 1, f) = z.real();
      J(2 * j, f) = z.imag();
    }
  }
  return null_combination(J);
}

PrescribeResult prescribe_singular(const std::vector<ScalarField>& basis, const BoundarySite& site, int order,
                                   const PrescribeOptions& opt) {
  check_basis(basis, order);
  const double nn = std::hypot(site.nx, site.ny);
  if (!(nn > 0)) throw MalformedInput("boundary site needs a normal");
  const double nx = site.nx / nn, ny = site.ny / nn;
  const int m = static_cast<int>(basis.size());
  const int deg = order + 4;
  const int n = std::max(opt.samples, deg + 1);
  std::vector<double> ss;
  for (int a = -n; a <= n; ++a) ss.push_back(double(a) / n);
  // Points p(s) - inset * n(s) along the osculating circle (or the tangent line).
  const auto point = [&](double s, double& x, double& y) {
    const double arc = s * opt.radius;
    double px, py, qx, qy;
    if (site.curvature == 0) {
      px = site.x - ny * arc;
      py = site.y + nx * arc;
      qx = nx;
      qy = ny;
    } else {
      const double R = 1.0 / site.curvature, th = arc * site.curvature;
      const double cx = site.x - nx * R, cy = site.y - ny * R;
      qx = nx * std::cos(th) - ny * std::sin(th);
      qy = nx * std::sin(th) + ny * std::cos(th);
      px = cx + R * qx;
      py = cy + R * qy;
    }
    x = px - opt.inset * qx;
    y = py - opt.inset * qy;
  };
  Eigen::MatrixXd A(ss.size(), deg + 1);
  for (size_t i = 0; i < ss.size(); ++i)
    for (int d = 0; d <= deg; ++d) A(i, d) = std::pow(ss[i], d);
  const auto qr = A.colPivHouseholderQr();
  Eigen::MatrixXd J(order, m);
  for (int f = 0; f < m; ++f) {
    Eigen::VectorXd v(ss.size());
    for (size_t i = 0; i < ss.size(); ++i) {
      double x, y;
      point(ss[i], x, y);
      v[i] = basis[f](x, y);
    }
    const Eigen::VectorXd c = qr.solve(v);
    for (int d = 0; d < order; ++d) J(d, f) = c[d];
  }
  return null_combination(J);
}

} // namespace nodal
