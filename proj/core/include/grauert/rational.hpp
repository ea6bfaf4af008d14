#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

// Boost 1.74 rational == integer recurses forever under C++20 reversed candidates;
// exact non-template overloads win overload resolution and break the cycle.
namespace boost {
#define GRAUERT_RATIONAL_EQ(T)                                                   \
  inline constexpr bool operator==(const rational<std::int64_t>& a, T b) {       \
    return a.denominator() == 1 && a.numerator() == static_cast<std::int64_t>(b); \
  }                                                                              \
  inline constexpr bool operator==(T b, const rational<std::int64_t>& a) { return a == b; }
GRAUERT_RATIONAL_EQ(int)
GRAUERT_RATIONAL_EQ(long)
GRAUERT_RATIONAL_EQ(long long)
#undef GRAUERT_RATIONAL_EQ
}  // namespace boost

namespace grauert {

using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

double to_double(const Rational& q);
std::vector<double> to_double(const RationalVector& v);

// "3", "-1/2"
std::string to_string(const Rational& q);
// Accepts "3", "-1/2", "0.25" (finite decimals only).
Rational parse_rational(std::string_view text);
// Comma separated list of rationals, e.g. "1,0,-1" or "1/4,0,-1/4".
RationalVector parse_rational_list(std::string_view text);

Rational dot(const RationalVector& a, const RationalVector& b);
Rational abs(const Rational& q);
RationalVector scaled(const RationalVector& v, const Rational& s);
RationalVector add(const RationalVector& a, const RationalVector& b);
RationalVector sub(const RationalVector& a, const RationalVector& b);
bool is_zero(const RationalVector& v);

/// Closest rational with denominator <= max_den, provided it lies within tol of x.
/// Returns false when no such rational exists.
bool rationalize(double x, std::int64_t max_den, double tol, Rational& out);

// Exact dense linear algebra over the rationals. Small sizes only.
namespace exact {

std::size_t rank(RationalMatrix m);
/// Basis of {x : m x = 0}; m has `cols` columns (needed when m has no rows).
RationalMatrix nullspace(RationalMatrix m, std::size_t cols);
/// Inverse of a square matrix; returns false if singular.
bool inverse(const RationalMatrix& m, RationalMatrix& out);
RationalVector multiply(const RationalMatrix& m, const RationalVector& v);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix transpose(const RationalMatrix& m);
RationalMatrix identity(std::size_t n);

}  // namespace exact

/// q * pi, kept symbolic so that polytope coordinates compare exactly.
struct PiRational {
  Rational coeff;

  double value() const;
  friend bool operator==(const PiRational&, const PiRational&) = default;
  friend bool operator<(const PiRational& a, const PiRational& b) { return a.coeff < b.coeff; }
};

std::string to_string(const PiRational& x);  // "pi/2", "-3*pi/4", "0"

/// coeff * pi * sqrt(radicand), radicand reduced to a square-free integer.
struct PiSqrtRational {
  Rational coeff;
  std::int64_t radicand = 1;

  static PiSqrtRational make(const Rational& coeff, const Rational& radicand);
  double value() const;
  friend bool operator==(const PiSqrtRational&, const PiSqrtRational&) = default;
};

std::string to_string(const PiSqrtRational& x);  // "pi/2", "sqrt(3)*pi/2"

}  // namespace grauert
