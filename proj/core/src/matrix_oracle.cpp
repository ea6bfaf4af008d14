#include "grauert/matrix_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "grauert/error.hpp"

namespace grauert {

namespace {

using Condition = std::function<ComplexMatrix(const ComplexMatrix&)>;
using std::complex;

constexpr double kClusterTol = 1e-6;
constexpr double kConsistencyTol = 1e-8;
constexpr std::int64_t kMaxDen = 16;

// Generic weights for a regular element of a.
constexpr double kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Realization data that does not need any linear algebra.
struct Layout {
  int size = 0;
  std::vector<Condition> conditions;
  std::vector<ComplexMatrix> frame;
  ChartKind chart_kind = ChartKind::Diagonal;
  int chart_stride = 1;
};

ComplexMatrix unit(int n, int i, int j, complex<double> v = 1.0) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, j) = v;
  return m;
}

ComplexMatrix diag_signs(const std::vector<int>& blocks) {
  // blocks alternate +1 and -1 sizes: {p, q, p, q} -> diag(I_p, -I_q, I_p, -I_q)
  int n = 0;
  for (int b : blocks) n += b;
  ComplexMatrix k = ComplexMatrix::Zero(n, n);
  int at = 0;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int i = 0; i < blocks[b]; ++i, ++at) k(at, at) = b % 2 == 0 ? 1.0 : -1.0;
  return k;
}

ComplexMatrix symplectic_form(int n) {
  ComplexMatrix j = ComplexMatrix::Zero(2 * n, 2 * n);
  j.block(0, n, n, n) = -ComplexMatrix::Identity(n, n);
  j.block(n, 0, n, n) = ComplexMatrix::Identity(n, n);
  return j;
}

Condition trace_zero() {
  return [](const ComplexMatrix& x) {
    ComplexMatrix t(1, 1);
    t(0, 0) = x.trace();
    return t;
  };
}
Condition real_entries() {
  return [](const ComplexMatrix& x) { return ComplexMatrix(x - x.conjugate()); };
}
Condition preserves_hermitian(ComplexMatrix k) {
  return [k](const ComplexMatrix& x) { return ComplexMatrix(x.adjoint() * k + k * x); };
}
Condition preserves_bilinear(ComplexMatrix j) {
  return [j](const ComplexMatrix& x) { return ComplexMatrix(x.transpose() * j + j * x); };
}

// Pairs coordinate i < r with coordinate offset + i.
std::vector<ComplexMatrix> pair_frame(int n, int offset, int r) {
  std::vector<ComplexMatrix> f;
  for (int i = 0; i < r; ++i) f.push_back(unit(n, i, offset + i) + unit(n, offset + i, i));
  return f;
}

// i * (E_{2k,2k+1} - E_{2k+1,2k}): Hermitian, complex skew-symmetric.
ComplexMatrix rotation_block(int n, int k, complex<double> c) {
  return unit(n, 2 * k, 2 * k + 1, c) - unit(n, 2 * k + 1, 2 * k, c);
}

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

Layout classical_layout(const SpaceDescriptor& s) {
  Layout l;
  auto par = [&](const char* name) { return s.param(name); };
  switch (s.cartan_label) {
    case CartanLabel::AI: {
      const int n = par("n");
      l.size = n;
      l.conditions = {real_entries(), trace_zero()};
      for (int i = 0; i < n; ++i) l.frame.push_back(unit(n, i, i));
      break;
    }
    case CartanLabel::AII: {
      const int n = par("n");
      l.size = 2 * n;
      const ComplexMatrix j = symplectic_form(n);
      l.conditions = {[j](const ComplexMatrix& x) { return ComplexMatrix(x * j - j * x.conjugate()); }, trace_zero()};
      for (int i = 0; i < n; ++i) l.frame.push_back(unit(2 * n, i, i) + unit(2 * n, n + i, n + i));
      l.chart_stride = 2;
      break;
    }
    case CartanLabel::AIII:
    case CartanLabel::BDI: {
      const int p = par("p"), q = par("q");
      l.size = p + q;
      l.conditions = {preserves_hermitian(diag_signs({p, q}))};
      if (s.cartan_label == CartanLabel::AIII)
        l.conditions.push_back(trace_zero());
      else
        l.conditions.push_back(real_entries());
      l.frame = pair_frame(p + q, p, std::min(p, q));
      l.chart_kind = ChartKind::Pair;
      break;
    }
    case CartanLabel::CI: {
      const int n = par("n");
      l.size = 2 * n;
      l.conditions = {real_entries(), preserves_bilinear(symplectic_form(n))};
      for (int i = 0; i < n; ++i) l.frame.push_back(unit(2 * n, i, i) - unit(2 * n, n + i, n + i));
      l.chart_kind = ChartKind::Pair;
      break;
    }
    case CartanLabel::CII: {
      const int p = par("p"), q = par("q"), m = p + q;
      l.size = 2 * m;
      l.conditions = {preserves_bilinear(symplectic_form(m)), preserves_hermitian(diag_signs({p, q, p, q}))};
      for (const auto& h : pair_frame(m, p, std::min(p, q))) l.frame.push_back(block_diag(h, -h));
      l.chart_kind = ChartKind::Pair;
      l.chart_stride = 2;
      break;
    }
    case CartanLabel::DIII: {
      const int n = par("n");
      l.size = 2 * n;
      // [[A, B], [-conj B, conj A]] with A skew-Hermitian and B skew-symmetric.
      l.conditions = {[n](const ComplexMatrix& x) {
        const ComplexMatrix a = x.topLeftCorner(n, n), b = x.topRightCorner(n, n);
        const ComplexMatrix c = x.bottomLeftCorner(n, n), d = x.bottomRightCorner(n, n);
        ComplexMatrix out(4 * n, n);
        out << a + a.adjoint(), b + b.transpose(), c + b.conjugate(), d - a.conjugate();
        return out;
      }};
      for (int k = 0; k < n / 2; ++k) {
        const ComplexMatrix z = rotation_block(n, k, 1.0);
        ComplexMatrix f = ComplexMatrix::Zero(2 * n, 2 * n);
        f.topRightCorner(n, n) = z;
        f.bottomLeftCorner(n, n) = -z;
        l.frame.push_back(f);
      }
      l.chart_kind = ChartKind::Pair;
      l.chart_stride = 2;
      break;
    }
    case CartanLabel::cA: {
      const int n = par("n");
      l.size = n;
      l.conditions = {trace_zero()};
      for (int i = 0; i < n; ++i) l.frame.push_back(unit(n, i, i));
      break;
    }
    case CartanLabel::cB:
    case CartanLabel::cD: {
      const int n = par("n");
      l.size = n;
      l.conditions = {[](const ComplexMatrix& x) { return ComplexMatrix(x + x.transpose()); }};
      for (int k = 0; k < n / 2; ++k) l.frame.push_back(rotation_block(n, k, {0, 1}));
      l.chart_kind = ChartKind::Pair;
      break;
    }
    case CartanLabel::cC: {
      const int n = par("n");
      l.size = 2 * n;
      l.conditions = {preserves_bilinear(symplectic_form(n))};
      for (int i = 0; i < n; ++i) l.frame.push_back(unit(2 * n, i, i) - unit(2 * n, n + i, n + i));
      l.chart_kind = ChartKind::Pair;
      break;
    }
    default:
      throw Unsupported("no matrix realization for " + s.label());
  }
  return l;
}

Layout layout_for(const Catalog& catalog, const SpaceDescriptor& s) {
  if (s.cartan_label != CartanLabel::Product) return classical_layout(s);
  // diag(X, conj Y) with X, Y in the factor.
  const Layout f = classical_layout(catalog.lookup(s.factor));
  const int n = f.size;
  Layout l;
  l.size = 2 * n;
  l.conditions.push_back([n](const ComplexMatrix& x) {
    ComplexMatrix out(2 * n, n);
    out << x.topRightCorner(n, n), x.bottomLeftCorner(n, n);
    return out;
  });
  for (const auto& c : f.conditions) {
    l.conditions.push_back([c, n](const ComplexMatrix& x) { return c(x.topLeftCorner(n, n)); });
    l.conditions.push_back(
        [c, n](const ComplexMatrix& x) { return c(ComplexMatrix(x.bottomRightCorner(n, n).conjugate())); });
  }
  const ComplexMatrix zero = ComplexMatrix::Zero(n, n);
  for (const auto& m : f.frame) l.frame.push_back(block_diag(m, zero));
  for (const auto& m : f.frame) l.frame.push_back(block_diag(zero, m.conjugate()));
  l.chart_kind = f.chart_kind;
  l.chart_stride = f.chart_stride;
  return l;
}

// Row-major real parts followed by row-major imaginary parts.
Eigen::VectorXd to_vec(const ComplexMatrix& x) {
  const int n = static_cast<int>(x.rows());
  Eigen::VectorXd v(2 * n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      v(i * n + j) = x(i, j).real();
      v(n * n + i * n + j) = x(i, j).imag();
    }
  return v;
}

ComplexMatrix from_vec(const Eigen::VectorXd& v, int n) {
  ComplexMatrix x(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = {v(i * n + j), v(n * n + i * n + j)};
  return x;
}

double inner(const ComplexMatrix& x, const ComplexMatrix& y) { return (x.cwiseProduct(y.conjugate())).sum().real(); }

ComplexMatrix bracket(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y - y * x; }

// Orthonormal basis of the span of the given matrices.
std::vector<ComplexMatrix> orthonormalize(const std::vector<ComplexMatrix>& xs, int n) {
  if (xs.empty()) return {};
  Eigen::MatrixXd m(2 * n * n, xs.size());
  for (std::size_t j = 0; j < xs.size(); ++j) m.col(j) = to_vec(xs[j]);
  // Eigenvectors of the Gram matrix, mapped back and normalized.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m.transpose() * m);
  const auto& ev = es.eigenvalues();
  std::vector<ComplexMatrix> out;
  for (Eigen::Index k = ev.size() - 1; k >= 0; --k)
    if (ev(k) > 1e-12 * std::max(1.0, ev(ev.size() - 1)))
      out.push_back(from_vec(m * es.eigenvectors().col(k) / std::sqrt(ev(k)), n));
  return out;
}

// Real-linear kernel of the stacked conditions, as an orthonormal basis.
std::vector<ComplexMatrix> kernel(const Layout& l) {
  const int n = l.size, dim = 2 * n * n;
  std::vector<Eigen::VectorXd> cols;
  for (int t = 0; t < dim; ++t) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(t) = 1;
    const ComplexMatrix x = from_vec(e, n);
    std::vector<double> col;
    for (const auto& c : l.conditions) {
      const ComplexMatrix y = c(x);
      for (Eigen::Index i = 0; i < y.size(); ++i) {
        col.push_back(y(i).real());
        col.push_back(y(i).imag());
      }
    }
    cols.push_back(Eigen::Map<Eigen::VectorXd>(col.data(), static_cast<Eigen::Index>(col.size())));
  }
  Eigen::MatrixXd a(cols.front().size(), dim);
  for (int t = 0; t < dim; ++t) a.col(t) = cols[t];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a.transpose() * a);
  std::vector<ComplexMatrix> out;
  for (int k = 0; k < dim; ++k)
    if (es.eigenvalues()(k) < 1e-9) out.push_back(from_vec(es.eigenvectors().col(k), n));
  return out;
}

// Matrix of X -> P(f(X)) on an orthonormal family, where P projects onto the same family.
Eigen::MatrixXd restrict_map(const std::vector<ComplexMatrix>& b, const std::function<ComplexMatrix(const ComplexMatrix&)>& f) {
  const auto m = static_cast<Eigen::Index>(b.size());
  Eigen::MatrixXd out(m, m);
  for (Eigen::Index j = 0; j < m; ++j) {
    const ComplexMatrix y = f(b[j]);
    for (Eigen::Index i = 0; i < m; ++i) out(i, j) = inner(b[i], y);
  }
  return out;
}

std::vector<double> frame_vector(const RationalVector& v) { return to_double(v); }

}  // namespace

ComplexMatrix MatrixAlgebra::embed(const std::vector<double>& x) const {
  if (x.size() != frame.size())
    throw InvalidArgument("vector has " + std::to_string(x.size()) + " coordinates, frame has " +
                          std::to_string(frame.size()));
  ComplexMatrix h = ComplexMatrix::Zero(size, size);
  for (std::size_t i = 0; i < x.size(); ++i) h += x[i] * frame[i];
  return h;
}

MatrixAlgebra realize(const Catalog& catalog, const SpaceDescriptor& space) {
  const Layout l = layout_for(catalog, space);
  if (l.size > kMaxOracleSize)
    throw Unsupported(space.label() + " needs matrices of size " + std::to_string(l.size) + " (limit " +
                      std::to_string(kMaxOracleSize) + ")");
  MatrixAlgebra alg;
  alg.space = space;
  alg.datum = catalog.restricted_datum(space);
  alg.size = l.size;
  alg.frame = l.frame;
  alg.chart_kind = l.chart_kind;
  alg.chart_stride = l.chart_stride;
  alg.basis = kernel(l);

  std::vector<ComplexMatrix> ks, ps;
  for (const auto& x : alg.basis) {
    ks.push_back((x - x.adjoint()) / 2.0);
    ps.push_back((x + x.adjoint()) / 2.0);
  }
  alg.k_basis = orthonormalize(ks, l.size);
  alg.p_basis = orthonormalize(ps, l.size);
  if (alg.k_basis.size() + alg.p_basis.size() != alg.basis.size())
    throw NumericalError(space.label() + ": realization is not stable under X -> -X*");
  if (static_cast<int>(alg.p_basis.size()) != space.dim)
    throw NumericalError(space.label() + ": dim p = " + std::to_string(alg.p_basis.size()) + ", expected " +
                         std::to_string(space.dim));

  // Gram-Schmidt on a spanning set of positive roots, tracking frame coordinates.
  const int d = static_cast<int>(l.frame.size());
  for (const auto& r : alg.datum.root_system.positive_roots()) {
    std::vector<double> c = frame_vector(r.vector.coords);
    ComplexMatrix h = alg.embed(c);
    for (std::size_t k = 0; k < alg.a_basis.size(); ++k) {
      const double proj = inner(alg.a_basis[k], h);
      h -= proj * alg.a_basis[k];
      for (int i = 0; i < d; ++i) c[i] -= proj * alg.a_coords[k][i];
    }
    const double norm = std::sqrt(inner(h, h));
    if (norm < 1e-9) continue;
    alg.a_basis.push_back(h / norm);
    for (double& x : c) x /= norm;
    alg.a_coords.push_back(c);
  }
  if (alg.rank() != space.rank)
    throw NumericalError(space.label() + ": a has dimension " + std::to_string(alg.rank()));
  return alg;
}

double bracket_residual(const MatrixAlgebra& alg) {
  double worst = 0;
  for (std::size_t i = 0; i < alg.basis.size(); ++i)
    for (std::size_t j = i + 1; j < alg.basis.size(); ++j) {
      ComplexMatrix z = bracket(alg.basis[i], alg.basis[j]);
      for (const auto& b : alg.basis) z -= inner(b, z) * b;
      worst = std::max(worst, std::sqrt(inner(z, z)));
    }
  return worst;
}

namespace {

struct Cluster {
  double value = 0;
  Eigen::MatrixXd vectors;
};

std::vector<Cluster> clusters(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(sym);
  const auto& ev = es.eigenvalues();
  std::vector<Cluster> out;
  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= ev.size(); ++k) {
    if (k < ev.size() && ev(k) - ev(k - 1) <= kClusterTol) continue;
    out.push_back({ev.segment(start, k - start).mean(), es.eigenvectors().middleCols(start, k - start)});
    start = k;
  }
  return out;
}

// Generic regular element of a as frame coordinates.
std::vector<double> generic_direction(const MatrixAlgebra& alg) {
  std::vector<double> h(alg.ambient_dim(), 0.0);
  for (int k = 0; k < alg.rank(); ++k)
    for (int i = 0; i < alg.ambient_dim(); ++i) h[i] += std::sqrt(kPrimes[k]) * alg.a_coords[k][i];
  return h;
}

double evaluate(const RationalVector& root, const std::vector<double>& h) {
  double s = 0;
  for (std::size_t i = 0; i < h.size(); ++i) s += to_double(root[i]) * h[i];
  return s;
}

}  // namespace

NumericRootDatum numeric_restricted_datum(const MatrixAlgebra& alg) {
  const int r = alg.rank(), d = alg.ambient_dim();
  std::vector<Eigen::MatrixXd> ads;
  for (int k = 0; k < r; ++k) {
    const ComplexMatrix h = alg.a_basis[k];
    ads.push_back(restrict_map(alg.basis, [&](const ComplexMatrix& x) { return bracket(h, x); }));
  }
  Eigen::MatrixXd generic = Eigen::MatrixXd::Zero(ads[0].rows(), ads[0].cols());
  for (int k = 0; k < r; ++k) generic += std::sqrt(kPrimes[k]) * ads[k];

  // alpha = C (C^T C)^{-1} lambda, where the columns of C are a_coords.
  Eigen::MatrixXd c(d, r);
  for (int k = 0; k < r; ++k)
    for (int i = 0; i < d; ++i) c(i, k) = alg.a_coords[k][i];
  const Eigen::MatrixXd solve = c * (c.transpose() * c).inverse();

  NumericRootDatum out;
  out.rank = r;
  std::map<RationalVector, int, std::greater<>> found;
  for (const auto& cl : clusters(generic)) {
    Eigen::VectorXd lambda(r);
    for (int k = 0; k < r; ++k) {
      lambda(k) = (cl.vectors.transpose() * ads[k] * cl.vectors).trace() / static_cast<double>(cl.vectors.cols());
      const double res = (ads[k] * cl.vectors - lambda(k) * cl.vectors).norm();
      out.max_residual = std::max(out.max_residual, res);
      if (res > kConsistencyTol) throw NumericalError(alg.space.label() + ": joint eigenvectors inconsistent");
    }
    const auto m = static_cast<int>(cl.vectors.cols());
    if (lambda.cwiseAbs().maxCoeff() < kClusterTol) {
      out.zero_weight_dim += m;
      continue;
    }
    const Eigen::VectorXd alpha = solve * lambda;
    RationalVector root(d);
    for (int i = 0; i < d; ++i)
      if (!rationalize(alpha(i), kMaxDen, kConsistencyTol, root[i]))
        throw NumericalError(alg.space.label() + ": weight coordinate " + std::to_string(alpha(i)) +
                             " is not a small rational");
    found[root] += m;
  }
  for (const auto& [v, m] : found) out.roots.push_back({{v}, m});
  return out;
}

std::vector<double> numeric_jacobi_eigenvalues(const MatrixAlgebra& alg, const std::vector<double>& h) {
  const ComplexMatrix x = alg.embed(h);
  const Eigen::MatrixXd jac =
      restrict_map(alg.p_basis, [&](const ComplexMatrix& y) { return ComplexMatrix(-bracket(x, bracket(x, y))); });
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac, Eigen::EigenvaluesOnly);
  std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<RootSpace> p_root_spaces(const MatrixAlgebra& alg) {
  const auto h = generic_direction(alg);
  const ComplexMatrix x = alg.embed(h);
  const Eigen::MatrixXd jac =
      restrict_map(alg.p_basis, [&](const ComplexMatrix& y) { return ComplexMatrix(-bracket(x, bracket(x, y))); });
  const auto cls = clusters(jac);
  std::vector<RootSpace> out;
  for (const auto& r : alg.datum.root_system.positive_roots()) {
    const double a = evaluate(r.vector.coords, h);
    RootSpace rs{r.vector, {}};
    for (const auto& cl : cls) {
      if (std::abs(cl.value + a * a) > kClusterTol * std::max(1.0, a * a)) continue;
      for (Eigen::Index j = 0; j < cl.vectors.cols(); ++j) {
        ComplexMatrix y = ComplexMatrix::Zero(alg.size, alg.size);
        for (std::size_t i = 0; i < alg.p_basis.size(); ++i) y += cl.vectors(static_cast<Eigen::Index>(i), j) * alg.p_basis[i];
        rs.vectors.push_back(y);
      }
    }
    if (static_cast<int>(rs.vectors.size()) != r.multiplicity)
      throw NumericalError(alg.space.label() + ": root space of dimension " + std::to_string(rs.vectors.size()) +
                           ", expected " + std::to_string(r.multiplicity));
    out.push_back(std::move(rs));
  }
  return out;
}

ChartResult invariant_chart(const MatrixAlgebra& alg, const ComplexMatrix& xi) {
  if (alg.space.cartan_label == CartanLabel::Product) throw Unsupported("no invariant chart for product spaces");
  const ComplexMatrix herm = (xi + xi.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(herm, Eigen::EigenvaluesOnly);
  std::vector<double> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(ev.begin(), ev.end(), std::greater<>());
  ChartResult out;
  const int count = alg.chart_kind == ChartKind::Diagonal ? alg.ambient_dim() : alg.rank();
  out.x.assign(alg.ambient_dim(), 0.0);
  for (int i = 0; i < count; ++i) out.x[i] = ev[static_cast<std::size_t>(i * alg.chart_stride)];
  for (const auto& r : alg.datum.root_system.roots())
    if (std::abs(evaluate(r.vector.coords, out.x)) < 1e-8) out.ambiguous = true;
  return out;
}

namespace {

// CII(p,q) sits in u(K) for K = diag(I_p, -I_q, I_p, -I_q); reorder so that positive
// coordinates come first and the frame pairs of both halves line up with those of AIII(2p,2q).
std::vector<int> pairing_permutation(int p, int q) {
  const int r = std::min(p, q);
  std::vector<int> pos, neg;
  for (int i = 0; i < r; ++i) pos.push_back(i);
  for (int i = 0; i < r; ++i) pos.push_back(p + q + i);
  for (int i = r; i < p; ++i) pos.push_back(i);
  for (int i = r; i < p; ++i) pos.push_back(p + q + i);
  for (int i = 0; i < r; ++i) neg.push_back(p + i);
  for (int i = 0; i < r; ++i) neg.push_back(2 * p + q + i);
  for (int i = r; i < q; ++i) neg.push_back(p + i);
  for (int i = r; i < q; ++i) neg.push_back(2 * p + q + i);
  pos.insert(pos.end(), neg.begin(), neg.end());
  return pos;
}

std::string embedding_method(const SpaceDescriptor& m, const SpaceDescriptor& n) {
  const auto ml = m.cartan_label, nl = n.cartan_label;
  if (nl == CartanLabel::Product) {
    if (!m.hermitian || n.factor != m.label())
      throw Unsupported("product envelope of " + n.factor + " does not contain " + m.label());
    return "conjugate-diagonal";
  }
  if (ml == CartanLabel::BDI && nl == CartanLabel::BDI && m.param("q") == 1 && n.param("q") == 2 &&
      n.param("p") == m.param("p"))
    return "corner";
  if (ml == CartanLabel::BDI && nl == CartanLabel::AIII && n.param("p") == m.param("p") &&
      n.param("q") == m.param("q"))
    return "identity";
  if (ml == CartanLabel::CII && nl == CartanLabel::AIII && n.param("p") == 2 * m.param("p") &&
      n.param("q") == 2 * m.param("q"))
    return "pairing-permutation";
  if (ml == CartanLabel::AI && nl == CartanLabel::CI && n.param("n") == m.param("n")) return "transpose-pair";
  throw Unsupported("no matrix inclusion " + m.label() + " -> " + n.label());
}

}  // namespace

ComplexMatrix include_matrix(const EmbeddingData& e, const ComplexMatrix& x) {
  const auto n = x.rows();
  if (e.method == "conjugate-diagonal") return block_diag(x, x.conjugate());
  if (e.method == "identity") return x;
  if (e.method == "transpose-pair") return block_diag(x, -x.transpose());
  if (e.method == "corner") return block_diag(x, ComplexMatrix::Zero(1, 1));
  if (e.method == "pairing-permutation") {
    const auto perm = pairing_permutation(e.source.param("p"), e.source.param("q"));
    ComplexMatrix y(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
      for (Eigen::Index b = 0; b < n; ++b) y(a, b) = x(perm[a], perm[b]);
    return y;
  }
  throw Unsupported("unknown inclusion '" + e.method + "'");
}

EmbeddingData embedding_map(const Catalog& catalog, const SpaceDescriptor& source, const SpaceDescriptor& target) {
  EmbeddingData e{source, target, {}, embedding_method(source, target), 0};
  if (e.method == "conjugate-diagonal") {
    // H -> (H, H); needs no realization, so exceptional Hermitian spaces are covered too.
    const auto d = static_cast<std::size_t>(catalog.restricted_datum(source).root_system.ambient_dim());
    e.iota.assign(2 * d, RationalVector(d, Rational(0)));
    for (std::size_t i = 0; i < d; ++i) e.iota[i][i] = e.iota[d + i][i] = 1;
    return e;
  }
  const Layout ls = layout_for(catalog, source), lt = layout_for(catalog, target);
  const auto dt = static_cast<Eigen::Index>(lt.frame.size());
  Eigen::MatrixXd v(2 * lt.size * lt.size, dt);
  for (Eigen::Index j = 0; j < dt; ++j) v.col(j) = to_vec(lt.frame[j]);
  const Eigen::MatrixXd pinv = (v.transpose() * v).inverse() * v.transpose();

  e.iota.assign(dt, RationalVector(ls.frame.size()));
  for (std::size_t i = 0; i < ls.frame.size(); ++i) {
    const Eigen::VectorXd y = to_vec(include_matrix(e, ls.frame[i]));
    const Eigen::VectorXd coeffs = pinv * y;
    e.residual = std::max(e.residual, (v * coeffs - y).norm());
    for (Eigen::Index k = 0; k < dt; ++k)
      if (!rationalize(coeffs(k), kMaxDen, kConsistencyTol, e.iota[k][i]))
        throw NumericalError("inclusion coefficient " + std::to_string(coeffs(k)) + " is not a small rational");
  }
  if (e.residual > kConsistencyTol)
    throw NumericalError(source.label() + " -> " + target.label() + ": image of a leaves the target flat");
  return e;
}

}  // namespace grauert
