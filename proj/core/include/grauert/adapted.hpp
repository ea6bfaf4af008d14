#pragma once

#include <array>
#include <complex>
#include <vector>

#include "grauert/catalog.hpp"
#include "grauert/rational.hpp"

namespace grauert {

struct JacobiEigenvalue {
  double value = 0;
  int multiplicity = 0;
};

/// Spectrum of Y -> -(ad H)^2 Y on p, as eigenvalues -alpha(H)^2 with root multiplicities.
struct JacobiSpectrum {
  std::vector<double> direction;
  /// Descending: 0 first, then increasingly negative values.
  std::vector<JacobiEigenvalue> eigenvalues;

  int total_multiplicity() const;
};

/// Exact grouping for rational H.
JacobiSpectrum jacobi_spectrum(const RestrictedRootDatum& d, const RationalVector& h);
/// Values closer than 1e-12 (relative) are merged.
JacobiSpectrum jacobi_spectrum(const RestrictedRootDatum& d, const std::vector<double>& h);

/// g(z) = tanh(lambda z)/lambda, or z when lambda = 0.
std::complex<double> adapted_g(double lambda, std::complex<double> z);

/// 2x2 block of the adapted complex structure on one eigenspace.
struct AdaptedBlock {
  double lambda = 0;
  std::complex<double> z;
  std::array<std::array<double, 2>, 2> matrix{};

  double trace() const { return matrix[0][0] + matrix[1][1]; }
  double determinant() const { return matrix[0][0] * matrix[1][1] - matrix[0][1] * matrix[1][0]; }
};

/// Pole distance below which evaluation is refused.
inline constexpr double kPoleTolerance = 1e-12;

/// [[-Re g/Im g, -Im g - (Re g)^2/Im g], [1/Im g, Re g/Im g]]. Throws SingularPointError when
/// lambda * Im z lies within kPoleTolerance of (pi/2)Z.
AdaptedBlock adapted_block(double lambda, std::complex<double> z);

struct SingularParameter {
  PiRational s;
  /// Positive roots alpha with alpha(sH) in (pi/2)Z.
  std::vector<RootVector> roots;
};

/// Every s in (0, s_max] with alpha(sH) in (pi/2)Z for a root alpha(H) != 0, ascending.
/// Throws InvalidArgument for H = 0.
std::vector<SingularParameter> singular_parameters(const RestrictedRootDatum& d, const RationalVector& h,
                                                   const PiRational& s_max);

}  // namespace grauert
