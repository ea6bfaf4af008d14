#include "grauert/rootkit.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "grauert/error.hpp"

namespace grauert {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::BC: return "BC";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  static const std::map<std::string, Family> table = {
      {"A", Family::A},   {"B", Family::B},   {"C", Family::C},   {"D", Family::D},
      {"BC", Family::BC}, {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8},
      {"F4", Family::F4}, {"G2", Family::G2}};
  auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown root system family '" + name + "'");
  return it->second;
}

RationalVector reflect(const RationalVector& v, const RationalVector& beta) {
  Rational c = Rational(2) * dot(v, beta) / dot(beta, beta);
  return sub(v, scaled(beta, c));
}

namespace {

bool is_positive(const RationalVector& v) {
  for (const auto& x : v) {
    if (x > 0) return true;
    if (x < 0) return false;
  }
  return false;
}

void canonical_sort(std::vector<Root>& roots) {
  std::sort(roots.begin(), roots.end(),
            [](const Root& a, const Root& b) { return a.vector.coords > b.vector.coords; });
}

RationalVector unit(int dim, int i, const Rational& s = 1) {
  RationalVector v(dim, Rational(0));
  v[i] = s;
  return v;
}

std::vector<RationalVector> e8_roots() {
  std::vector<RationalVector> out;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          RationalVector v(8, Rational(0));
          v[i] = si;
          v[j] = sj;
          out.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    RationalVector v(8);
    for (int i = 0; i < 8; ++i) v[i] = (mask >> i & 1) ? Rational(-1, 2) : Rational(1, 2);
    out.push_back(v);
  }
  return out;
}

std::vector<RationalVector> e8_subsystem(const std::vector<RationalVector>& orthogonal_to) {
  std::vector<RationalVector> out;
  for (auto& v : e8_roots()) {
    bool keep = true;
    for (const auto& w : orthogonal_to) keep = keep && dot(v, w) == 0;
    if (keep) out.push_back(v);
  }
  return out;
}

std::vector<RationalVector> classical_roots(Family family, int r) {
  std::vector<RationalVector> out;
  if (family == Family::A) {
    for (int i = 0; i <= r; ++i)
      for (int j = 0; j <= r; ++j)
        if (i != j) out.push_back(sub(unit(r + 1, i), unit(r + 1, j)));
    return out;
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) out.push_back(add(unit(r, i, si), unit(r, j, sj)));
  for (int i = 0; i < r; ++i)
    for (int s : {1, -1}) {
      if (family == Family::B || family == Family::BC) out.push_back(unit(r, i, s));
      if (family == Family::C || family == Family::BC) out.push_back(unit(r, i, 2 * s));
    }
  return out;
}

}  // namespace

RootSystem RootSystem::from_roots(Family family, int rank, int ambient_dim, std::vector<Root> roots) {
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  rs.ambient_dim_ = ambient_dim;
  canonical_sort(roots);
  rs.roots_ = std::move(roots);
  RationalMatrix rows;
  for (const auto& r : rs.roots_) {
    if (static_cast<int>(r.vector.coords.size()) != ambient_dim)
      throw InvalidArgument("root has wrong ambient dimension");
    rows.push_back(r.vector.coords);
  }
  rs.complement_ = exact::nullspace(rows, ambient_dim);
  return rs;
}

std::string RootSystem::frame_name() const {
  switch (family_) {
    case Family::A: return "sum-zero hyperplane of R^" + std::to_string(rank_ + 1);
    case Family::B:
    case Family::C:
    case Family::D:
    case Family::BC: return "orthonormal R^" + std::to_string(rank_);
    case Family::E8: return "even coordinate system of R^8";
    case Family::E7: return "R^8, orthogonal complement of e7+e8";
    case Family::E6: return "R^8, orthogonal complement of e7+e8 and e6-e7";
    case Family::F4: return "orthonormal R^4";
    case Family::G2: return "sum-zero hyperplane of R^3";
  }
  return "";
}

std::vector<Root> RootSystem::positive_roots() const {
  std::vector<Root> out;
  for (const auto& r : roots_)
    if (is_positive(r.vector.coords)) out.push_back(r);
  return out;
}

int RootSystem::multiplicity(const RootVector& v) const {
  auto it = std::lower_bound(roots_.begin(), roots_.end(), v.coords,
                             [](const Root& r, const RationalVector& c) { return r.vector.coords > c; });
  if (it != roots_.end() && it->vector.coords == v.coords) return it->multiplicity;
  return 0;
}

RootSystem RootSystem::with_multiplicities(const std::function<int(const Rational&)>& by_norm2) const {
  RootSystem out = *this;
  for (auto& r : out.roots_) {
    r.multiplicity = by_norm2(r.vector.norm2());
    if (r.multiplicity <= 0)
      throw InvalidArgument("no positive multiplicity for root length^2 " + to_string(r.vector.norm2()));
  }
  return out;
}

bool RootSystem::in_span(const RationalVector& v) const {
  if (static_cast<int>(v.size()) != ambient_dim_) return false;
  for (const auto& c : complement_)
    if (dot(c, v) != 0) return false;
  return true;
}

Rational RootSystem::killing_form(const RationalVector& h) const {
  Rational s = 0;
  for (const auto& r : roots_) {
    Rational a = dot(r.vector.coords, h);
    s += Rational(r.multiplicity) * a * a;
  }
  return s;
}

Rational RootSystem::max_norm2() const {
  Rational m = 0;
  for (const auto& r : roots_) m = std::max(m, r.vector.norm2());
  return m;
}

RootSystem build_root_system(Family family, int rank) {
  std::vector<RationalVector> vecs;
  int ambient = rank;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok)
      throw InvalidArgument("invalid root system " + to_string(family) + "_" + std::to_string(rank) +
                            ": " + what);
  };
  switch (family) {
    case Family::A:
      need(rank >= 1, "rank must be >= 1");
      ambient = rank + 1;
      vecs = classical_roots(family, rank);
      break;
    case Family::B:
    case Family::C:
    case Family::BC:
      need(rank >= 1, "rank must be >= 1");
      vecs = classical_roots(family, rank);
      break;
    case Family::D:
      need(rank >= 2, "rank must be >= 2");
      vecs = classical_roots(family, rank);
      break;
    case Family::E8:
      need(rank == 8, "rank must be 8");
      vecs = e8_roots();
      break;
    case Family::E7: {
      need(rank == 7, "rank must be 7");
      ambient = 8;
      RationalVector w(8, Rational(0));
      w[6] = 1;
      w[7] = 1;
      vecs = e8_subsystem({w});
      break;
    }
    case Family::E6: {
      need(rank == 6, "rank must be 6");
      ambient = 8;
      RationalVector w1(8, Rational(0)), w2(8, Rational(0));
      w1[6] = 1;
      w1[7] = 1;
      w2[5] = 1;
      w2[6] = -1;
      vecs = e8_subsystem({w1, w2});
      break;
    }
    case Family::F4:
      need(rank == 4, "rank must be 4");
      vecs = classical_roots(Family::B, 4);
      for (int mask = 0; mask < 16; ++mask) {
        RationalVector v(4);
        for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? Rational(-1, 2) : Rational(1, 2);
        vecs.push_back(v);
      }
      break;
    case Family::G2:
      need(rank == 2, "rank must be 2");
      ambient = 3;
      vecs = classical_roots(Family::A, 2);
      for (int i = 0; i < 3; ++i)
        for (int s : {1, -1}) {
          RationalVector v(3, Rational(-s));
          v[i] = 2 * s;
          vecs.push_back(v);
        }
      break;
  }
  std::vector<Root> roots;
  roots.reserve(vecs.size());
  for (auto& v : vecs) roots.push_back({{std::move(v)}, 1});
  return RootSystem::from_roots(family, rank, ambient, std::move(roots));
}

bool AxiomReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.passed; });
}

const AxiomCheck* AxiomReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

AxiomReport verify_axioms(const RootSystem& rs) {
  AxiomReport report;
  const auto& roots = rs.roots();

  AxiomCheck nonzero{"nonzero", true, {}, ""};
  for (const auto& r : roots)
    if (is_zero(r.vector.coords) && nonzero.passed) {
      nonzero.passed = false;
      nonzero.witness = {r.vector};
    }
  report.checks.push_back(nonzero);

  AxiomCheck negation{"negation", true, {}, ""};
  for (const auto& r : roots) {
    if (rs.multiplicity(-r.vector) != r.multiplicity) {
      negation.passed = false;
      negation.witness = {r.vector};
      negation.detail = "-alpha missing or has a different multiplicity";
      break;
    }
  }
  report.checks.push_back(negation);

  AxiomCheck reflection{"reflection", true, {}, ""};
  AxiomCheck integrality{"integrality", true, {}, ""};
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      if (is_zero(b.vector.coords)) continue;
      Rational c = Rational(2) * dot(a.vector.coords, b.vector.coords) / b.vector.norm2();
      if (integrality.passed && c.denominator() != 1) {
        integrality.passed = false;
        integrality.witness = {a.vector, b.vector};
        integrality.detail = "2(a,b)/(b,b) = " + to_string(c);
      }
      if (reflection.passed) {
        RootVector img{reflect(a.vector.coords, b.vector.coords)};
        if (rs.multiplicity(img) != a.multiplicity) {
          reflection.passed = false;
          reflection.witness = {a.vector, b.vector};
          reflection.detail = "s_b(a) missing or has a different multiplicity";
        }
      }
    }
  }
  report.checks.push_back(reflection);
  report.checks.push_back(integrality);

  AxiomCheck reduced{"reducedness", true, {}, ""};
  Rational min_norm = roots.empty() ? Rational(0) : roots.front().vector.norm2();
  for (const auto& r : roots) min_norm = std::min(min_norm, r.vector.norm2());
  for (const auto& a : roots) {
    for (const auto& b : roots) {
      // b = c a with c > 0, c != 1?
      if (!reduced.passed || &a == &b) continue;
      std::size_t k = 0;
      while (k < a.vector.coords.size() && a.vector.coords[k] == 0) ++k;
      if (k == a.vector.coords.size()) continue;
      Rational c = b.vector.coords[k] / a.vector.coords[k];
      if (c <= 0 || c == 1 || b.vector.coords != scaled(a.vector.coords, c)) continue;
      bool allowed = rs.family() == Family::BC && (c == 2 || c == Rational(1, 2));
      if (!allowed) {
        reduced.passed = false;
        reduced.witness = {a.vector, b.vector};
        reduced.detail = "root is a positive multiple of another root";
      }
    }
  }
  if (reduced.passed && rs.family() == Family::BC) {
    for (const auto& r : roots) {
      if (r.vector.norm2() != min_norm) continue;
      if (!rs.contains(RootVector{scaled(r.vector.coords, Rational(2))})) {
        reduced.passed = false;
        reduced.witness = {r.vector};
        reduced.detail = "short root alpha without 2*alpha";
        break;
      }
    }
  }
  report.checks.push_back(reduced);

  AxiomCheck span{"span", true, {}, ""};
  RationalMatrix rows;
  for (const auto& r : roots) rows.push_back(r.vector.coords);
  auto rk = exact::rank(rows);
  if (static_cast<int>(rk) != rs.rank()) {
    span.passed = false;
    span.detail = "roots span dimension " + std::to_string(rk) + ", expected " + std::to_string(rs.rank());
  }
  report.checks.push_back(span);
  return report;
}

std::vector<RationalVector> weyl_orbit(const RootSystem& rs, const RationalVector& v) {
  std::vector<RationalVector> mirrors;
  for (const auto& r : rs.positive_roots()) mirrors.push_back(r.vector.coords);
  std::set<RationalVector, std::greater<>> seen{v};
  std::deque<RationalVector> frontier{v};
  // Fixed-point iteration: stop once no reflection produces a new vector.
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& m : mirrors) {
      auto img = reflect(cur, m);
      if (seen.insert(img).second) frontier.push_back(std::move(img));
    }
  }
  return {seen.begin(), seen.end()};
}

WeylElement reflection_element(const RationalVector& beta) {
  const std::size_t n = beta.size();
  WeylElement w{exact::identity(n)};
  Rational nb = dot(beta, beta);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.matrix[i][j] -= Rational(2) * beta[i] * beta[j] / nb;
  return w;
}

std::vector<WeylElement> weyl_generators(const RootSystem& rs) {
  std::vector<WeylElement> gens;
  std::set<RationalVector> directions;
  for (const auto& r : rs.positive_roots()) {
    // 2a and a give the same reflection.
    auto dir = r.vector.coords;
    Rational g = 0;
    for (const auto& x : dir)
      if (x != 0) {
        g = abs(x);
        break;
      }
    dir = scaled(dir, Rational(1) / g);
    if (directions.insert(dir).second) gens.push_back(reflection_element(r.vector.coords));
  }
  return gens;
}

std::vector<WeylElement> weyl_group(const RootSystem& rs, std::size_t max_order) {
  auto gens = weyl_generators(rs);
  WeylElement id{exact::identity(rs.ambient_dim())};
  std::set<WeylElement> seen{id};
  std::deque<WeylElement> frontier{id};
  while (!frontier.empty()) {
    auto cur = std::move(frontier.front());
    frontier.pop_front();
    for (const auto& g : gens) {
      WeylElement next{exact::multiply(g.matrix, cur.matrix)};
      if (seen.insert(next).second) {
        if (seen.size() > max_order)
          throw Unsupported("Weyl group order exceeds " + std::to_string(max_order));
        frontier.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace grauert
