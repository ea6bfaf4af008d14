#include "grauert/domain.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "grauert/error.hpp"

namespace grauert {

namespace {

const Rational kHalf(1, 2);

bool first_nonzero_positive(const RationalVector& v) {
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

// alpha = c1 beta + c2 gamma with |c1| + |c2| <= 1 makes |alpha(H)| <= 1/2 a consequence.
bool dominated(const RationalVector& alpha, const std::vector<RationalVector>& kept) {
  for (std::size_t i = 0; i < kept.size(); ++i) {
    const auto& b = kept[i];
    const Rational bb = dot(b, b), ab = dot(alpha, b);
    if (scaled(b, ab / bb) == alpha && abs(ab / bb) <= 1) return true;
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const auto& g = kept[j];
      const Rational bg = dot(b, g), gg = dot(g, g), ag = dot(alpha, g);
      const Rational det = bb * gg - bg * bg;
      if (det == 0) continue;
      const Rational c1 = (ab * gg - ag * bg) / det;
      const Rational c2 = (ag * bb - ab * bg) / det;
      if (abs(c1) + abs(c2) > 1) continue;
      if (add(scaled(b, c1), scaled(g, c2)) == alpha) return true;
    }
  }
  return false;
}

}  // namespace

bool OmegaPolytope::contains(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != ambient_dim) return false;
  for (const auto& e : equalities)
    if (dot(e, x) != 0) return false;
  for (const auto& a : halfspaces)
    if (abs(dot(a.coords, x)) > kHalf) return false;
  return true;
}

std::vector<RootVector> OmegaPolytope::saturated(const RationalVector& x) const {
  std::vector<RootVector> out;
  for (const auto& a : halfspaces)
    if (abs(dot(a.coords, x)) == kHalf) out.push_back(a);
  return out;
}

std::vector<RationalVector> enumerate_vertices(const std::vector<RationalVector>& rows,
                                               const RationalMatrix& equalities, int ambient_dim) {
  const int r = ambient_dim - static_cast<int>(equalities.size());
  const int m = static_cast<int>(rows.size());
  std::set<RationalVector, std::greater<>> found;
  if (r <= 0 || m < r) return {};

  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  while (true) {
    RationalMatrix sys;
    for (int i : pick) sys.push_back(rows[i]);
    for (const auto& e : equalities) sys.push_back(e);
    RationalMatrix inv;
    if (exact::inverse(sys, inv)) {
      for (unsigned mask = 0; mask < (1u << r); ++mask) {
        RationalVector x(ambient_dim, Rational(0));
        for (int i = 0; i < r; ++i) {
          const Rational s = (mask >> i & 1) ? -kHalf : kHalf;
          for (int k = 0; k < ambient_dim; ++k) x[k] += inv[k][i] * s;
        }
        bool feasible = std::all_of(rows.begin(), rows.end(),
                                    [&](const RationalVector& a) { return abs(dot(a, x)) <= kHalf; });
        if (feasible) found.insert(std::move(x));
      }
    }
    int i = r - 1;
    while (i >= 0 && pick[i] == m - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

OmegaPolytope omega_polytope(const RootSystem& rs) {
  OmegaPolytope p;
  p.rank = rs.rank();
  p.ambient_dim = rs.ambient_dim();
  p.equalities = rs.complement_basis();

  std::map<Rational, std::vector<RationalVector>, std::greater<>> by_length;
  for (const auto& root : rs.roots()) by_length[root.vector.norm2()].push_back(root.vector.coords);

  std::vector<RationalVector> kept;
  for (const auto& [n2, roots] : by_length) {
    // Each length class is a single Weyl orbit, so one representative decides the class.
    if (!kept.empty() && dominated(roots.front(), kept)) continue;
    kept.insert(kept.end(), roots.begin(), roots.end());
  }
  for (const auto& root : rs.roots()) {
    const auto& v = root.vector.coords;
    if (first_nonzero_positive(v) && std::find(kept.begin(), kept.end(), v) != kept.end())
      p.halfspaces.push_back(root.vector);
  }

  if (p.rank <= kMaxVertexRank) {
    std::vector<RationalVector> rows;
    for (const auto& h : p.halfspaces) rows.push_back(h.coords);
    p.vertices = enumerate_vertices(rows, p.equalities, p.ambient_dim);
    p.vertices_available = true;
  }
  return p;
}

OmegaPolytope omega_polytope(const RestrictedRootDatum& datum) { return omega_polytope(datum.root_system); }

Rational sup_norm(const RootSystem& rs, const RationalVector& h) {
  if (static_cast<int>(h.size()) != rs.ambient_dim())
    throw InvalidArgument("vector has " + std::to_string(h.size()) + " coordinates, frame has " +
                          std::to_string(rs.ambient_dim()));
  Rational m = 0;
  for (const auto& r : rs.roots()) m = std::max(m, abs(dot(r.vector.coords, h)));
  return m;
}

double sup_norm(const RootSystem& rs, const std::vector<double>& h) {
  if (static_cast<int>(h.size()) != rs.ambient_dim())
    throw InvalidArgument("vector has " + std::to_string(h.size()) + " coordinates, frame has " +
                          std::to_string(rs.ambient_dim()));
  double m = 0;
  for (const auto& r : rs.roots()) {
    double s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += to_double(r.vector.coords[i]) * h[i];
    m = std::max(m, std::abs(s));
  }
  return m;
}

PiRational boundary_parameter(const RestrictedRootDatum& d, const RationalVector& h) {
  const Rational s = sup_norm(d, h);
  if (!d.root_system.in_span(h)) throw InvalidArgument("H must lie in the span of the restricted roots");
  if (s == 0) throw InvalidArgument("boundary parameter undefined for H = 0");
  return {Rational(1) / (2 * s)};
}

double boundary_parameter(const RestrictedRootDatum& d, const std::vector<double>& h) {
  const double s = sup_norm(d, h);
  for (const auto& c : d.root_system.complement_basis()) {
    double e = 0, n = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      e += to_double(c[i]) * h[i];
      n += h[i] * h[i];
    }
    if (std::abs(e) > 1e-9 * std::max(1.0, std::sqrt(n)))
      throw InvalidArgument("H must lie in the span of the restricted roots");
  }
  if (s == 0) throw InvalidArgument("boundary parameter undefined for H = 0");
  return M_PI / 2 / s;
}

double metric_norm(const RestrictedRootDatum& d, const std::vector<double>& h) {
  double n2 = 0;
  for (double x : h) n2 += x * x;
  return std::sqrt(to_double(d.metric_scale) * n2);
}

PiSqrtRational max_tube_radius(const RestrictedRootDatum& d) {
  return PiSqrtRational::make(kHalf, d.metric_scale / d.root_system.max_norm2());
}

RationalVector StronglyOrthogonalSet::coroot(std::size_t j) const {
  const auto& g = gammas.at(j).coords;
  return scaled(g, Rational(2) / dot(g, g));
}

RationalVector StronglyOrthogonalSet::point(const RationalVector& t) const {
  if (t.size() != gammas.size()) throw InvalidArgument("t must have one coordinate per strongly orthogonal root");
  RationalVector h(ambient_dim, Rational(0));
  for (std::size_t j = 0; j < gammas.size(); ++j) h = add(h, scaled(coroot(j), t[j]));
  return h;
}

std::vector<double> StronglyOrthogonalSet::point(const std::vector<double>& t) const {
  if (t.size() != gammas.size()) throw InvalidArgument("t must have one coordinate per strongly orthogonal root");
  std::vector<double> h(ambient_dim, 0.0);
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    auto c = to_double(coroot(j));
    for (int k = 0; k < ambient_dim; ++k) h[k] += t[j] * c[k];
  }
  return h;
}

RationalVector StronglyOrthogonalSet::coordinates(const RationalVector& h) const {
  RationalVector t;
  for (const auto& g : gammas) t.push_back(dot(g.coords, h) / 2);
  return t;
}

bool strongly_orthogonal(const RootSystem& rs, const RationalVector& a, const RationalVector& b) {
  return !rs.contains({add(a, b)}) && !rs.contains({sub(a, b)}) && !is_zero(add(a, b)) && !is_zero(sub(a, b));
}

StronglyOrthogonalSet strongly_orthogonal_roots(const RestrictedRootDatum& d) {
  if (!d.space.hermitian) throw InvalidArgument(d.space.label() + " is not Hermitian");
  const auto& rs = d.root_system;
  StronglyOrthogonalSet out;
  out.ambient_dim = rs.ambient_dim();
  std::vector<RationalVector> remaining;
  for (const auto& r : rs.roots()) remaining.push_back(r.vector.coords);
  while (!remaining.empty()) {
    const RationalVector gamma = remaining.front();
    out.gammas.push_back({gamma});
    std::erase_if(remaining, [&](const RationalVector& beta) {
      const Rational c = dot(beta, gamma) / dot(gamma, gamma);
      if (scaled(gamma, c) == beta) return true;
      return !strongly_orthogonal(rs, beta, gamma);
    });
  }
  if (static_cast<int>(out.gammas.size()) != rs.rank())
    throw Error("cascade produced " + std::to_string(out.gammas.size()) + " roots for rank " +
                std::to_string(rs.rank()));
  return out;
}

OmegaPolytope omega_from_gamma(const StronglyOrthogonalSet& gamma, const RationalMatrix& equalities) {
  OmegaPolytope p;
  p.rank = static_cast<int>(gamma.gammas.size());
  p.ambient_dim = gamma.ambient_dim;
  p.equalities = equalities;
  for (const auto& g : gamma.gammas)
    p.halfspaces.push_back(first_nonzero_positive(g.coords) ? g : -g);
  std::set<RationalVector, std::greater<>> verts;
  for (unsigned mask = 0; mask < (1u << p.rank); ++mask) {
    RationalVector t(p.rank);
    for (int j = 0; j < p.rank; ++j) t[j] = (mask >> j & 1) ? Rational(-1, 4) : Rational(1, 4);
    verts.insert(gamma.point(t));
  }
  p.vertices.assign(verts.begin(), verts.end());
  p.vertices_available = true;
  return p;
}

}  // namespace grauert
