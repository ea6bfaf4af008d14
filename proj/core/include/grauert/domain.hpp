#pragma once

#include <vector>

#include "grauert/catalog.hpp"
#include "grauert/rational.hpp"
#include "grauert/rootkit.hpp"

namespace grauert {

/// Largest rank for which omega_polytope enumerates vertices.
inline constexpr int kMaxVertexRank = 4;

/// The convex set omega = {H : |alpha(H)| <= pi/2 for every restricted root alpha}.
///
/// Coordinates are those of the root system's ambient frame; vertices are stored as
/// rational multiples of pi, so (1/4, 0, -1/4) stands for (pi/4, 0, -pi/4).
struct OmegaPolytope {
  int rank = 0;
  int ambient_dim = 0;
  /// One root per irredundant constraint |alpha(H)| <= pi/2, first nonzero coordinate positive.
  std::vector<RootVector> halfspaces;
  /// Linear equalities cutting the span of the roots out of the ambient frame.
  RationalMatrix equalities;
  bool vertices_available = false;
  /// Sorted descending; empty unless vertices_available.
  std::vector<RationalVector> vertices;

  /// x in units of pi.
  bool contains(const RationalVector& x) const;
  /// Halfspaces attaining |alpha(x)| = 1/2 at x (units of pi).
  std::vector<RootVector> saturated(const RationalVector& x) const;
};

/// Irredundant halfspaces, plus exact vertices when rank <= kMaxVertexRank.
OmegaPolytope omega_polytope(const RestrictedRootDatum& datum);
OmegaPolytope omega_polytope(const RootSystem& rs);

/// max over roots of |alpha(H)|.
Rational sup_norm(const RootSystem& rs, const RationalVector& h);
double sup_norm(const RootSystem& rs, const std::vector<double>& h);
inline Rational sup_norm(const RestrictedRootDatum& d, const RationalVector& h) { return sup_norm(d.root_system, h); }
inline double sup_norm(const RestrictedRootDatum& d, const std::vector<double>& h) { return sup_norm(d.root_system, h); }

/// s* = sup{s > 0 : sH in omega} = (pi/2)/sup_norm(H). Throws InvalidArgument for H = 0 or H
/// outside the span of the roots.
PiRational boundary_parameter(const RestrictedRootDatum& d, const RationalVector& h);
double boundary_parameter(const RestrictedRootDatum& d, const std::vector<double>& h);

/// Norm of H in the metric fixed by metric_scale.
double metric_norm(const RestrictedRootDatum& d, const std::vector<double>& h);

/// Radius of the largest Grauert tube: min of s*(H) over metric-unit H, i.e.
/// (pi/2) * sqrt(metric_scale / max |alpha|^2).
PiSqrtRational max_tube_radius(const RestrictedRootDatum& d);

/// Pairwise strongly orthogonal roots gamma_1..gamma_r of a Hermitian space.
struct StronglyOrthogonalSet {
  std::vector<RootVector> gammas;
  int ambient_dim = 0;

  /// gamma^vee = 2 gamma / (gamma, gamma).
  RationalVector coroot(std::size_t j) const;
  /// H(t) = sum_j t_j gamma_j^vee.
  RationalVector point(const RationalVector& t) const;
  std::vector<double> point(const std::vector<double>& t) const;
  /// Inverse of point on span(gamma^vee): t_j = gamma_j(H) / 2.
  RationalVector coordinates(const RationalVector& h) const;
};

/// Cascade: take the highest remaining root, discard it with every root that is not strongly
/// orthogonal to it, repeat. Throws InvalidArgument for non-Hermitian spaces.
StronglyOrthogonalSet strongly_orthogonal_roots(const RestrictedRootDatum& d);
bool strongly_orthogonal(const RootSystem& rs, const RationalVector& a, const RationalVector& b);

/// The cube {|gamma_j(H)| <= pi/2} written on span(gamma^vee); its vertices are
/// sum_j (+-pi/4) gamma_j^vee.
OmegaPolytope omega_from_gamma(const StronglyOrthogonalSet& gamma, const RationalMatrix& equalities = {});

/// Vertices of {x : |a(x)| <= 1/2 for a in rows, e(x) = 0 for e in equalities}, rank <= 4 intended.
std::vector<RationalVector> enumerate_vertices(const std::vector<RationalVector>& rows,
                                               const RationalMatrix& equalities, int ambient_dim);

}  // namespace grauert
