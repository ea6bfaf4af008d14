#pragma once

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "grauert/rational.hpp"

namespace grauert {

enum class Family { A, B, C, D, BC, E6, E7, E8, F4, G2 };

std::string to_string(Family f);
Family parse_family(const std::string& name);

/// A nonzero vector of the ambient coordinate frame of its family.
struct RootVector {
  RationalVector coords;

  Rational norm2() const { return dot(coords, coords); }
  RootVector operator-() const { return {scaled(coords, Rational(-1))}; }
  friend bool operator==(const RootVector&, const RootVector&) = default;
  friend auto operator<=>(const RootVector& a, const RootVector& b) { return a.coords <=> b.coords; }
};

struct Root {
  RootVector vector;
  int multiplicity = 1;
};

/// Reflection of v in the hyperplane orthogonal to beta: v - 2(v,beta)/(beta,beta) beta.
RationalVector reflect(const RationalVector& v, const RationalVector& beta);

/// A finite (possibly non-reduced) root system with multiplicities.
///
/// Roots are held in canonical order: descending lexicographic on coordinates, so the
/// first root is the highest one. The frame is recorded by frame_name():
///   A_r   sum-zero hyperplane of R^{r+1}
///   B,C,D,BC in R^r
///   E8    R^8 (even coordinate system), E7/E6 the orthogonal complements of
///         {e7+e8} and {e7+e8, e6-e7} inside it
///   F4    R^4, G2 sum-zero hyperplane of R^3
class RootSystem {
 public:
  RootSystem() = default;

  /// Raw constructor used for deserialization and constructed counterexamples; no
  /// validation is performed (see verify_axioms).
  static RootSystem from_roots(Family family, int rank, int ambient_dim, std::vector<Root> roots);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return ambient_dim_; }
  const std::vector<Root>& roots() const { return roots_; }
  std::string frame_name() const;

  /// Roots whose first nonzero coordinate is positive.
  std::vector<Root> positive_roots() const;
  /// Multiplicity of v, or 0 when v is not a root.
  int multiplicity(const RootVector& v) const;
  bool contains(const RootVector& v) const { return multiplicity(v) > 0; }

  /// Same roots, multiplicity assigned by squared length. Throws if a length is missing.
  RootSystem with_multiplicities(const std::function<int(const Rational& norm2)>& by_norm2) const;

  /// Rational basis of the orthogonal complement of span(roots) in the ambient frame.
  const RationalMatrix& complement_basis() const { return complement_; }
  /// True when v lies in span(roots), i.e. is orthogonal to the complement.
  bool in_span(const RationalVector& v) const;

  /// Sum over all roots (both signs) of mult * alpha(h)^2, i.e. the Killing form on the span.
  Rational killing_form(const RationalVector& h) const;
  /// Largest squared root length.
  Rational max_norm2() const;

 private:
  Family family_ = Family::A;
  int rank_ = 0;
  int ambient_dim_ = 0;
  std::vector<Root> roots_;
  RationalMatrix complement_;
};

/// Full root set of the given type with unit multiplicities.
/// Throws InvalidArgument for an invalid family/rank pair.
RootSystem build_root_system(Family family, int rank);

struct AxiomCheck {
  std::string name;
  bool passed = true;
  std::vector<RootVector> witness;
  std::string detail;
};

struct AxiomReport {
  std::vector<AxiomCheck> checks;

  bool all_passed() const;
  const AxiomCheck* find(const std::string& name) const;
};

/// Checks: nonzero, negation, reflection, integrality, reducedness, span.
AxiomReport verify_axioms(const RootSystem& rs);

/// Orbit of v under the group generated by all root reflections, in canonical order.
std::vector<RationalVector> weyl_orbit(const RootSystem& rs, const RationalVector& v);

/// An element of the Weyl group acting on the ambient frame.
struct WeylElement {
  RationalMatrix matrix;

  RationalVector apply(const RationalVector& v) const { return exact::multiply(matrix, v); }
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;
};

WeylElement reflection_element(const RationalVector& beta);
/// One reflection per positive root direction.
std::vector<WeylElement> weyl_generators(const RootSystem& rs);
/// Enumerates the whole group; throws Unsupported when it exceeds max_order.
std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t max_order = 50000);

}  // namespace grauert
