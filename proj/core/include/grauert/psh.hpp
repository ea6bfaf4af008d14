#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "grauert/catalog.hpp"
#include "grauert/matrix_oracle.hpp"

namespace grauert {

/// u(xi) = sum over roots, with multiplicity, of 1/((pi/2)^2 - alpha(xi)^2); xi in the
/// catalog frame, actual units. Throws DomainError unless |alpha(xi)| < pi/2 for every root.
double corollary_u(const RestrictedRootDatum& d, const std::vector<double>& xi);

/// Columns: a Euclidean-orthonormal basis of the root span in the catalog frame.
Eigen::MatrixXd span_basis(const RootSystem& rs);

/// Closed-form Hessian of corollary_u, r x r in the span_basis coordinates.
Eigen::MatrixXd hessian_u(const RestrictedRootDatum& d, const std::vector<double>& xi);

/// x cot x, with value 1 at 0. Positive on (-pi/2, pi/2).
double x_cot_x(double x);

/// A W-invariant function on the ambient frame of a catalog datum.
struct InvariantFunction {
  std::string name;
  std::function<double(const std::vector<double>&)> value;
};

InvariantFunction corollary_function(const RestrictedRootDatum& d);

struct PdCertificate {
  bool positive_definite = false;
  /// Smallest LDLT pivot after scaling by the largest diagonal entry.
  double min_pivot = 0;
  double min_eigenvalue = 0;
  double scale = 0;
};

/// Pivots must exceed 1e-9 after scaling and the smallest eigenvalue must be positive.
PdCertificate certify_pd(const Eigen::MatrixXd& m);

/// Finite-difference step for the K-invariant extension.
inline constexpr double kLeviStep = 1e-5;

struct LeviMatrix {
  std::vector<double> base_point;
  /// First rank() rows: a in the oracle's orthonormal basis; then one row per p_alpha vector.
  Eigen::MatrixXd matrix;
  int a_dim = 0;
  /// Root of each p' row.
  std::vector<RootVector> row_roots;
  /// Largest finite-difference mixed derivative between a and p'; the block is set to zero.
  double cross_residual = 0;
  PdCertificate certificate;
};

/// Reduced Levi matrix of f's K-invariant extension at xi0 in a. The p' block is
/// phi(alpha(xi0)) phi(beta(xi0)) Hess(f o chart)(Y_alpha, Y_beta) with phi = x cot x.
/// Throws Unsupported without a matrix realization, DomainError outside omega.
LeviMatrix levi_matrix(const MatrixAlgebra& alg, const InvariantFunction& f, const std::vector<double>& xi0);
LeviMatrix levi_matrix(const MatrixAlgebra& alg, const std::vector<double>& xi0);

/// A uniformly scaled point of omega: sup |alpha(xi)| = fraction * pi/2 for fraction drawn
/// from (0, max_fraction]. With on_wall, xi is projected to a random root hyperplane first.
std::vector<double> interior_point(const RestrictedRootDatum& d, std::mt19937_64& rng, double max_fraction,
                                   bool on_wall);

struct RayCheck {
  std::vector<double> direction;
  double s_star = 0;
  /// u(s_star (1 - 10^-k) H) for k = 1..9.
  std::vector<double> values;
  bool monotone = false;
  bool diverges = false;
};

/// Threshold u must pass before the boundary parameter.
inline constexpr double kExhaustionThreshold = 1e6;

RayCheck exhaustion_ray(const RestrictedRootDatum& d, const std::vector<double>& h);

}  // namespace grauert
