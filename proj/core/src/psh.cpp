#include "grauert/psh.hpp"

#include <algorithm>
#include <cmath>

#include "grauert/domain.hpp"
#include "grauert/error.hpp"

namespace grauert {

namespace {

constexpr double kQuarterPiSq = M_PI * M_PI / 4;

double root_value(const RationalVector& root, const std::vector<double>& xi) {
  double s = 0;
  for (std::size_t i = 0; i < xi.size(); ++i) s += to_double(root[i]) * xi[i];
  return s;
}

void check_frame(const RestrictedRootDatum& d, const std::vector<double>& xi) {
  if (static_cast<int>(xi.size()) != d.root_system.ambient_dim())
    throw InvalidArgument("vector has " + std::to_string(xi.size()) + " coordinates, frame has " +
                          std::to_string(d.root_system.ambient_dim()));
}

void check_inside(const RestrictedRootDatum& d, const std::vector<double>& xi) {
  check_frame(d, xi);
  for (const auto& r : d.root_system.roots())
    if (std::abs(root_value(r.vector.coords, xi)) >= M_PI / 2)
      throw DomainError("point lies outside omega: |alpha(xi)| >= pi/2 for a root of " + d.space.label());
}

Eigen::MatrixXd ambient_hessian(const RestrictedRootDatum& d, const std::vector<double>& xi) {
  const int n = d.root_system.ambient_dim();
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (const auto& r : d.root_system.roots()) {
    const double x = root_value(r.vector.coords, xi);
    const double gap = kQuarterPiSq - x * x;
    const double f2 = 2 * (kQuarterPiSq + 3 * x * x) / (gap * gap * gap);
    const Eigen::VectorXd a = Eigen::Map<const Eigen::VectorXd>(to_double(r.vector.coords).data(), n);
    h += r.multiplicity * f2 * a * a.transpose();
  }
  return h;
}

// Mixed second derivative of g at 0 along a and b: central differences plus one Richardson step.
template <class G>
double mixed_second(const G& g, double h) {
  auto d = [&](double s) { return (g(s, s) - g(s, -s) - g(-s, s) + g(-s, -s)) / (4 * s * s); };
  return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace

double corollary_u(const RestrictedRootDatum& d, const std::vector<double>& xi) {
  check_inside(d, xi);
  double u = 0;
  for (const auto& r : d.root_system.roots()) {
    const double x = root_value(r.vector.coords, xi);
    u += r.multiplicity / (kQuarterPiSq - x * x);
  }
  return u;
}

Eigen::MatrixXd span_basis(const RootSystem& rs) {
  const int n = rs.ambient_dim();
  std::vector<Eigen::VectorXd> cols;
  for (const auto& r : rs.positive_roots()) {
    Eigen::VectorXd v = Eigen::Map<const Eigen::VectorXd>(to_double(r.vector.coords).data(), n);
    for (const auto& c : cols) v -= c.dot(v) * c;
    if (v.norm() < 1e-9) continue;
    cols.push_back(v.normalized());
  }
  Eigen::MatrixXd b(n, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) b.col(static_cast<Eigen::Index>(k)) = cols[k];
  return b;
}

Eigen::MatrixXd hessian_u(const RestrictedRootDatum& d, const std::vector<double>& xi) {
  check_inside(d, xi);
  const Eigen::MatrixXd b = span_basis(d.root_system);
  return b.transpose() * ambient_hessian(d, xi) * b;
}

double x_cot_x(double x) {
  if (std::abs(x) < 1e-8) return 1 - x * x / 3;
  return x / std::tan(x);
}

InvariantFunction corollary_function(const RestrictedRootDatum& d) {
  return {"corollary_u", [d](const std::vector<double>& xi) { return corollary_u(d, xi); }};
}

PdCertificate certify_pd(const Eigen::MatrixXd& m) {
  PdCertificate c;
  c.scale = m.diagonal().cwiseAbs().maxCoeff();
  if (!(c.scale > 0)) return c;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(m / c.scale);
  c.min_pivot = ldlt.vectorD().minCoeff();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
  c.min_eigenvalue = es.eigenvalues()(0);
  c.positive_definite = ldlt.info() == Eigen::Success && c.min_pivot > 1e-9 && c.min_eigenvalue > 0;
  return c;
}

LeviMatrix levi_matrix(const MatrixAlgebra& alg, const InvariantFunction& f, const std::vector<double>& xi0) {
  const auto& d = alg.datum;
  check_inside(d, xi0);
  LeviMatrix out;
  out.base_point = xi0;
  out.a_dim = alg.rank();
  const int r = alg.rank(), n = alg.ambient_dim();

  const auto spaces = p_root_spaces(alg);
  std::vector<ComplexMatrix> ys;
  std::vector<double> factors;
  for (const auto& rs : spaces)
    for (const auto& y : rs.vectors) {
      ys.push_back(y);
      out.row_roots.push_back(rs.root);
      factors.push_back(x_cot_x(root_value(rs.root.coords, xi0)));
    }
  const int m = static_cast<int>(ys.size());
  out.matrix = Eigen::MatrixXd::Zero(r + m, r + m);

  if (f.name == "corollary_u") {
    Eigen::MatrixXd c(n, r);
    for (int k = 0; k < r; ++k)
      for (int i = 0; i < n; ++i) c(i, k) = alg.a_coords[k][i];
    out.matrix.topLeftCorner(r, r) = c.transpose() * ambient_hessian(d, xi0) * c;
  } else {
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        const double v = mixed_second(
            [&](double s, double t) {
              std::vector<double> x = xi0;
              for (int k = 0; k < n; ++k) x[k] += s * alg.a_coords[i][k] + t * alg.a_coords[j][k];
              return f.value(x);
            },
            kLeviStep);
        out.matrix(i, j) = out.matrix(j, i) = v;
      }
  }

  const ComplexMatrix base = alg.embed(xi0);
  auto extended = [&](const ComplexMatrix& z) { return f.value(invariant_chart(alg, z).x); };
  auto second = [&](const ComplexMatrix& a, const ComplexMatrix& b) {
    return mixed_second([&](double s, double t) { return extended(base + s * a + t * b); }, kLeviStep);
  };
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      const double v = factors[a] * factors[b] * second(ys[a], ys[b]);
      out.matrix(r + a, r + b) = out.matrix(r + b, r + a) = v;
    }
  for (int i = 0; i < r; ++i)
    for (int a = 0; a < m; ++a) out.cross_residual = std::max(out.cross_residual, std::abs(second(alg.a_basis[i], ys[a])));

  out.certificate = certify_pd(out.matrix);
  return out;
}

LeviMatrix levi_matrix(const MatrixAlgebra& alg, const std::vector<double>& xi0) {
  return levi_matrix(alg, corollary_function(alg.datum), xi0);
}

std::vector<double> interior_point(const RestrictedRootDatum& d, std::mt19937_64& rng, double max_fraction,
                                   bool on_wall) {
  std::uniform_real_distribution<double> coef(-1, 1), frac(0, max_fraction);
  const int n = d.root_system.ambient_dim();
  std::vector<double> xi(n, 0.0);
  const auto pos = d.root_system.positive_roots();
  for (const auto& r : pos) {
    const double c = coef(rng);
    for (int i = 0; i < n; ++i) xi[i] += c * to_double(r.vector.coords[i]);
  }
  if (on_wall) {
    const auto& a = pos[std::uniform_int_distribution<std::size_t>(0, pos.size() - 1)(rng)].vector.coords;
    const double t = root_value(a, xi) / to_double(dot(a, a));
    for (int i = 0; i < n; ++i) xi[i] -= t * to_double(a[i]);
  }
  const double sup = sup_norm(d.root_system, xi);
  const double f = frac(rng);
  if (sup < 1e-12) return std::vector<double>(n, 0.0);
  for (double& x : xi) x *= f * (M_PI / 2) / sup;
  return xi;
}

RayCheck exhaustion_ray(const RestrictedRootDatum& d, const std::vector<double>& h) {
  check_frame(d, h);
  RayCheck c;
  c.direction = h;
  c.s_star = boundary_parameter(d, h);
  c.monotone = true;
  for (int k = 1; k <= 9; ++k) {
    const double s = c.s_star * (1 - std::pow(10.0, -k));
    std::vector<double> x = h;
    for (double& v : x) v *= s;
    const double u = corollary_u(d, x);
    if (!c.values.empty() && !(u > c.values.back())) c.monotone = false;
    c.values.push_back(u);
  }
  c.diverges = c.values.back() > kExhaustionThreshold;
  return c;
}

}  // namespace grauert
