#include "grauert/adapted.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "grauert/error.hpp"

namespace grauert {

namespace {

void check_dim(const RestrictedRootDatum& d, std::size_t n) {
  if (static_cast<int>(n) != d.root_system.ambient_dim())
    throw InvalidArgument("vector has " + std::to_string(n) + " coordinates, frame has " +
                          std::to_string(d.root_system.ambient_dim()));
}

}  // namespace

int JacobiSpectrum::total_multiplicity() const {
  int s = 0;
  for (const auto& e : eigenvalues) s += e.multiplicity;
  return s;
}

JacobiSpectrum jacobi_spectrum(const RestrictedRootDatum& d, const RationalVector& h) {
  check_dim(d, h.size());
  std::map<Rational, int, std::greater<>> groups;
  groups[Rational(0)] += d.root_system.rank();
  for (const auto& r : d.root_system.positive_roots()) {
    const Rational a = dot(r.vector.coords, h);
    groups[-a * a] += r.multiplicity;
  }
  JacobiSpectrum out{to_double(h), {}};
  for (const auto& [v, m] : groups) out.eigenvalues.push_back({to_double(v), m});
  return out;
}

JacobiSpectrum jacobi_spectrum(const RestrictedRootDatum& d, const std::vector<double>& h) {
  check_dim(d, h.size());
  std::vector<JacobiEigenvalue> raw{{0.0, d.root_system.rank()}};
  for (const auto& r : d.root_system.positive_roots()) {
    double a = 0;
    for (std::size_t i = 0; i < h.size(); ++i) a += to_double(r.vector.coords[i]) * h[i];
    raw.push_back({-a * a, r.multiplicity});
  }
  std::sort(raw.begin(), raw.end(), [](const auto& x, const auto& y) { return x.value > y.value; });
  JacobiSpectrum out{h, {}};
  for (const auto& e : raw) {
    if (!out.eigenvalues.empty()) {
      auto& last = out.eigenvalues.back();
      if (std::abs(last.value - e.value) <= 1e-12 * std::max(1.0, std::abs(e.value))) {
        last.multiplicity += e.multiplicity;
        continue;
      }
    }
    out.eigenvalues.push_back(e);
  }
  return out;
}

std::complex<double> adapted_g(double lambda, std::complex<double> z) {
  if (lambda == 0) return z;
  return std::tanh(lambda * z) / lambda;
}

AdaptedBlock adapted_block(double lambda, std::complex<double> z) {
  const double t = z.real(), s = z.imag();
  const double phase = lambda * s;
  // lambda = 0 has the single pole s = 0.
  const double off = lambda == 0 ? std::abs(s) : std::abs(phase - std::round(phase / (M_PI / 2)) * (M_PI / 2));
  if (off <= kPoleTolerance) throw SingularPointError(lambda, z);

  double re, im;
  if (lambda == 0) {
    re = t;
    im = s;
  } else {
    // tanh(x + iy) = (sinh 2x + i sin 2y) / (cosh 2x + cos 2y), divided through by cosh 2x.
    const double sech = 1.0 / std::cosh(2 * lambda * t);
    const double denom = lambda * (1.0 + std::cos(2 * phase) * sech);
    re = std::tanh(2 * lambda * t) / denom;
    im = std::sin(2 * phase) * sech / denom;
  }
  AdaptedBlock b{lambda, z, {}};
  b.matrix[0][0] = -re / im;
  b.matrix[0][1] = -im - re * re / im;
  b.matrix[1][0] = 1.0 / im;
  b.matrix[1][1] = re / im;
  for (const auto& row : b.matrix)
    for (double x : row)
      if (!std::isfinite(x)) throw NumericalError("adapted block overflows at this (t, s)");
  return b;
}

std::vector<SingularParameter> singular_parameters(const RestrictedRootDatum& d, const RationalVector& h,
                                                   const PiRational& s_max) {
  check_dim(d, h.size());
  if (is_zero(h)) throw InvalidArgument("singular parameters undefined for H = 0");
  std::map<Rational, std::vector<RootVector>> poles;
  for (const auto& r : d.root_system.positive_roots()) {
    const Rational a = abs(dot(r.vector.coords, h));
    if (a == 0) continue;
    // s = k pi / (2 |alpha(H)|), k = 1, 2, ...
    const Rational step = Rational(1) / (2 * a);
    for (Rational s = step; s <= s_max.coeff; s += step) poles[s].push_back(r.vector);
  }
  std::vector<SingularParameter> out;
  for (auto& [s, roots] : poles) out.push_back({{s}, std::move(roots)});
  return out;
}

}  // namespace grauert
