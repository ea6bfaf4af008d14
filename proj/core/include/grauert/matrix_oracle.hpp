#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grauert/catalog.hpp"
#include "grauert/rational.hpp"
#include "grauert/rootkit.hpp"

namespace grauert {

using ComplexMatrix = Eigen::MatrixXcd;

/// Largest matrix size the oracle realizes.
inline constexpr int kMaxOracleSize = 8;

enum class ChartKind { Diagonal, Pair };

/// A classical real form g realized inside gl(size, C), with g = k + p split by X -> -X*.
/// Every basis is orthonormal for <X, Y> = Re tr(X Y*).
struct MatrixAlgebra {
  SpaceDescriptor space;
  RestrictedRootDatum datum;
  int size = 0;
  std::vector<ComplexMatrix> basis;
  std::vector<ComplexMatrix> k_basis;
  std::vector<ComplexMatrix> p_basis;
  /// frame[i] is the image of the i-th ambient coordinate vector of the catalog frame.
  /// Only combinations lying in the root span are guaranteed to be in p.
  std::vector<ComplexMatrix> frame;
  /// Orthonormal basis of a, with a_basis[k] = embed(a_coords[k]).
  std::vector<ComplexMatrix> a_basis;
  std::vector<std::vector<double>> a_coords;
  ChartKind chart_kind = ChartKind::Diagonal;
  /// Every stride-th sorted eigenvalue is read off by the chart.
  int chart_stride = 1;

  int rank() const { return static_cast<int>(a_basis.size()); }
  int ambient_dim() const { return static_cast<int>(frame.size()); }
  /// x in the catalog frame -> matrix in a.
  ComplexMatrix embed(const std::vector<double>& x) const;
};

/// Throws Unsupported for exceptional spaces or sizes above kMaxOracleSize.
MatrixAlgebra realize(const Catalog& catalog, const SpaceDescriptor& space);

/// Largest norm of the component of [X_i, X_j] orthogonal to g, over basis pairs.
double bracket_residual(const MatrixAlgebra& alg);

struct NumericRootDatum {
  /// Rationalized roots in the catalog frame, canonical order.
  std::vector<Root> roots;
  int rank = 0;
  /// Dimension of the zero joint eigenspace, i.e. dim of the centralizer of a in g.
  int zero_weight_dim = 0;
  /// Worst joint-eigenvector residual.
  double max_residual = 0;
};

/// Joint eigenvalues of ad(a) on g. Throws NumericalError when a weight fails to rationalize
/// (denominator <= 16, tolerance 1e-8) or eigenvectors are inconsistent beyond 1e-8.
NumericRootDatum numeric_restricted_datum(const MatrixAlgebra& alg);

/// Eigenvalues of -ad(H)^2 on p, descending, one entry per dimension.
std::vector<double> numeric_jacobi_eigenvalues(const MatrixAlgebra& alg, const std::vector<double>& h);

/// The p-part of a root space: orthonormal vectors spanning p_alpha = (g_alpha + g_-alpha) cap p.
struct RootSpace {
  RootVector root;
  std::vector<ComplexMatrix> vectors;
};

/// One entry per positive root of the numeric datum, in canonical order.
std::vector<RootSpace> p_root_spaces(const MatrixAlgebra& alg);

struct ChartResult {
  /// Chamber representative in the catalog frame.
  std::vector<double> x;
  /// Two representative values closer than 1e-8: the point is not regular.
  bool ambiguous = false;
};

/// K-invariant map p -> closed chamber of a, from sorted Hermitian eigenvalues.
/// For D-type root systems the representative is fixed only up to a sign flip of the last
/// coordinate, which preserves every root multiset.
ChartResult invariant_chart(const MatrixAlgebra& alg, const ComplexMatrix& xi);

/// Linear map a_M -> a_N between catalog frames induced by a matrix inclusion g_M -> g_N.
struct EmbeddingData {
  SpaceDescriptor source;
  SpaceDescriptor target;
  /// target.ambient x source.ambient; iota = matrix * x.
  RationalMatrix iota;
  std::string method;
  /// Least-squares residual of the induced map on frame vectors.
  double residual = 0;
};

/// Supported inclusions: BDI(p,1) -> BDI(p,2), BDI(p,q) -> AIII(p,q), CII(p,q) -> AIII(2p,2q),
/// AI:n -> CI:n, and M -> product(M) for Hermitian M. Throws Unsupported otherwise.
EmbeddingData embedding_map(const Catalog& catalog, const SpaceDescriptor& source, const SpaceDescriptor& target);

/// Image of a source matrix under the inclusion used by embedding_map.
ComplexMatrix include_matrix(const EmbeddingData& e, const ComplexMatrix& x);

}  // namespace grauert
