// One line per criterion: PASS/FAIL, label, detail, wall time. Exit status is the number of failures.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "grauert/adapted.hpp"
#include "grauert/catalog.hpp"
#include "grauert/domain.hpp"
#include "grauert/error.hpp"
#include "grauert/hermitian.hpp"
#include "grauert/matrix_oracle.hpp"
#include "grauert/psh.hpp"

using namespace grauert;

namespace {

const Catalog& cat() { return Catalog::instance(); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

// Collects the first few failure messages; anything further is only counted.
class Failures {
 public:
  void add(const std::string& msg) {
    if (count_++ < 3) (first_.empty() ? first_ : first_ += "; ") += msg;
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const { return std::to_string(count_) + " failures: " + first_; }

 private:
  std::size_t count_ = 0;
  std::string first_;
};

Outcome finish(const Failures& f, const std::string& ok_detail) {
  return f.empty() ? Outcome{true, ok_detail} : Outcome{false, f.summary()};
}

std::set<RationalVector> as_set(const std::vector<RationalVector>& v) { return {v.begin(), v.end()}; }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

Outcome golden_table() {
  Failures f;
  const auto r = reproduce_golden_table(cat());
  if (r.row_ok.size() != 17) f.add("expected 17 rows, got " + std::to_string(r.row_ok.size()));
  for (std::size_t i = 0; i < r.row_ok.size(); ++i)
    if (!r.row_ok[i]) f.add("row " + std::to_string(i));
  for (const auto& inst : r.instances)
    if (!inst.match)
      f.add(inst.space + ": expected " + to_string(inst.expected) + " " + inst.expected_envelope + ", got " +
            to_string(inst.got) + " " + inst.got_envelope);
  return finish(f, "17/17 rows, " + std::to_string(r.instances.size()) + " instances, 0 mismatches");
}

Outcome rank_one_radii() {
  Failures f;
  const auto m = cat().lookup("BDI:p=2,q=1");
  const auto r = to_string(max_tube_radius(cat().restricted_datum(m)));
  if (r != "pi/2") f.add("r_max = " + r);
  const auto t = theorem7_check(cat(), embedding_map(cat(), m, cat().lookup("AIII:p=2,q=1")));
  if (t.holds) f.add("theorem7_check holds");
  if (!t.separating_vertex) {
    f.add("no separating vertex");
  } else {
    // Units of pi: the vertex of omega_M has |alpha(H)| = 1/2, the root of N reads 1 there.
    const auto& d = cat().restricted_datum(m);
    if (sup_norm(d, *t.separating_vertex) != Rational(1, 2)) f.add("vertex not at |alpha(H)| = pi/2");
    if (t.separating_value <= Rational(1, 2)) f.add("vertex not separated");
  }
  return finish(f, "r_max = pi/2; separating vertex |alpha(H)| = pi/2, root of N reads " +
                       (t.separating_vertex ? to_string(t.separating_value) : std::string("?")) + "*pi");
}

bool hermitian_equality_target(const SpaceDescriptor& s) {
  if (!s.hermitian || s.rank > kMaxVertexRank) return false;
  if (s.cartan_label == CartanLabel::AIII) return s.param("p") <= 4 && s.param("q") <= 4;
  return true;
}

Outcome hermitian_omega() {
  Failures f;
  prop::Gen g(3);
  int spaces = 0;
  for (const auto& s : cat().all_spaces({6, 8})) {
    if (!hermitian_equality_target(s)) continue;
    ++spaces;
    const auto d = cat().restricted_datum(s);
    const auto gamma = strongly_orthogonal_roots(d);
    const auto omega = omega_polytope(d);
    if (as_set(omega_from_gamma(gamma, omega.equalities).vertices) != as_set(omega.vertices))
      f.add(s.label() + ": vertex sets differ");
    for (int trial = 0; trial < 1000; ++trial) {
      const RationalVector t = g.rational_vector(gamma.gammas.size(), 3, 7);
      Rational m = 0;
      for (const auto& x : t) m = std::max(m, abs(x));
      const auto h = gamma.point(t);
      if (sup_norm(d, h) != 2 * m || gamma.coordinates(h) != t) {
        f.add(s.label() + ": sup-norm identity fails at trial " + std::to_string(trial));
        break;
      }
    }
  }
  return finish(f, std::to_string(spaces) + " Hermitian spaces, 1000 rational samples each");
}

Outcome oracle_concordance() {
  Failures f;
  prop::Gen g(4);
  int spaces = 0;
  double worst = 0;
  for (const auto& s : cat().all_spaces({8, 8})) {
    if (!is_classical(s.cartan_label)) continue;
    MatrixAlgebra a;
    try {
      a = realize(cat(), s);
    } catch (const Unsupported&) {
      continue;
    }
    ++spaces;
    const auto nd = numeric_restricted_datum(a);
    const auto& roots = a.datum.root_system.roots();
    bool same = nd.roots.size() == roots.size();
    for (std::size_t i = 0; same && i < roots.size(); ++i)
      same = nd.roots[i].vector == roots[i].vector && nd.roots[i].multiplicity == roots[i].multiplicity;
    if (!same) f.add(s.label() + ": restricted roots differ");
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> h(a.ambient_dim(), 0.0);
      for (int k = 0; k < a.rank(); ++k) {
        const double c = g.real(-1, 1);
        for (int i = 0; i < a.ambient_dim(); ++i) h[i] += c * a.a_coords[k][i];
      }
      const auto num = numeric_jacobi_eigenvalues(a, h);
      std::vector<double> exact;
      for (const auto& e : jacobi_spectrum(a.datum, h).eigenvalues) exact.insert(exact.end(), e.multiplicity, e.value);
      if (num.size() != exact.size()) {
        f.add(s.label() + ": spectrum sizes differ");
        break;
      }
      for (std::size_t i = 0; i < num.size(); ++i) worst = std::max(worst, std::abs(num[i] - exact[i]));
    }
  }
  if (worst > 1e-9) f.add("Jacobi spectra differ by " + fmt(worst));
  return finish(f, std::to_string(spaces) + " spaces, max spectrum error " + fmt(worst));
}

double j_squared_residual(const AdaptedBlock& b) {
  const auto& m = b.matrix;
  const double r = std::max({std::abs(m[0][0] * m[0][0] + m[0][1] * m[1][0] + 1), std::abs(m[0][0] * m[0][1] + m[0][1] * m[1][1]),
                             std::abs(m[1][0] * m[0][0] + m[1][1] * m[1][0]), std::abs(m[1][0] * m[0][1] + m[1][1] * m[1][1] + 1)});
  return r / std::max(1.0, m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1]);
}

Outcome adapted_blocks() {
  Failures f;
  const std::pair<const char*, RationalVector> cases[] = {
      {"BDI:p=2,q=1", {1}},
      {"AI:n=3", {1, 0, -1}},
      {"AI:n=3", {1, Rational(1, 3), Rational(-4, 3)}},
      {"CI:n=2", {1, 0}},
      {"AIII:p=2,q=1", {1}},
      {"CII:p=1,q=2", {1}},
      {"G", {}},
  };
  double worst = 0;
  int pairs = 0;
  for (const auto& [label, given] : cases) {
    const auto d = cat().restricted_datum(label);
    const RationalVector h = given.empty() ? d.root_system.roots().front().vector.coords : given;
    ++pairs;
    const auto sstar = boundary_parameter(d, h);
    const auto poles = singular_parameters(d, h, PiRational{sstar.coeff * 2});
    if (poles.empty() || !(poles.front().s == sstar))
      f.add(std::string(label) + ": first singular parameter is not the boundary parameter");
    // 10^4 points split over the nonzero eigenvalues, plus lambda = 0.
    const auto spec = jacobi_spectrum(d, h);
    const int n = 100;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto& e = spec.eigenvalues[(i * n + j) % spec.eigenvalues.size()];
        const double lambda = std::sqrt(-e.value);
        const double t = -1 + 2.0 * i / (n - 1), s = sstar.value() * (j + 0.5) / n;
        try {
          worst = std::max(worst, j_squared_residual(adapted_block(lambda, {t, s})));
        } catch (const SingularPointError&) {
          f.add(std::string(label) + ": singular inside the tube");
        }
      }
  }
  if (worst > 1e-10) f.add("J^2 + I residual " + fmt(worst));

  double jump = 0;
  prop::Gen g(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::complex<double> z(g.real(-1, 1), g.real(0.05, 1));
    const auto b0 = adapted_block(0, z);
    for (double lambda : {1e-4, 1e-5, 1e-6}) {
      const auto b = adapted_block(lambda, z);
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) jump = std::max(jump, std::abs(b.matrix[r][c] - b0.matrix[r][c]));
    }
  }
  if (jump > 1e-6) f.add("lambda -> 0 jump " + fmt(jump));
  return finish(f, std::to_string(pairs) + " (space, H) pairs x 10^4 points, max relative J^2 + I residual " +
                       fmt(worst) + ", lambda -> 0 gap " + fmt(jump));
}

Outcome steinness() {
  Failures f;
  int spaces = 0, levi_spaces = 0, non_regular = 0;
  double min_h = INFINITY, min_l = INFINITY, max_cross = 0;
  for (const auto& s : cat().all_spaces({3, 4})) {
    if (s.rank > kMaxVertexRank) continue;
    ++spaces;
    const auto d = cat().restricted_datum(s);
    std::optional<MatrixAlgebra> alg;
    try {
      alg = realize(cat(), s);
      ++levi_spaces;
    } catch (const Unsupported&) {
    }
    std::mt19937_64 rng(6);
    for (int i = 0; i < 100; ++i) {
      const bool wall = i % 10 == 0;
      non_regular += wall;
      const auto xi = interior_point(d, rng, 0.9, wall);
      const auto h = certify_pd(hessian_u(d, xi));
      min_h = std::min(min_h, h.min_eigenvalue);
      if (!h.positive_definite) f.add(s.label() + ": hessian not positive definite");
      if (alg) {
        const auto l = levi_matrix(*alg, xi);
        min_l = std::min(min_l, l.certificate.min_eigenvalue);
        max_cross = std::max(max_cross, l.cross_residual);
        if (!l.certificate.positive_definite) f.add(s.label() + ": Levi matrix not positive definite");
      }
    }
    for (int i = 0; i < 20; ++i) {
      const auto ray = exhaustion_ray(d, interior_point(d, rng, 1.0, false));
      if (!ray.diverges || !ray.monotone) f.add(s.label() + ": exhaustion ray " + std::to_string(i));
    }
  }
  return finish(f, std::to_string(spaces) + " spaces (" + std::to_string(levi_spaces) + " with Levi matrix), " +
                       std::to_string(non_regular / std::max(spaces, 1)) + " non-regular points each, min eigenvalue hessian " +
                       fmt(min_h) + " Levi " + fmt(min_l) + ", cross-block residual " + fmt(max_cross) + ", 20 rays each");
}

Outcome criterion_agreement() {
  Failures f;
  const auto pairs = supported_embeddings(cat());
  int holds = 0;
  for (const auto& e : pairs) {
    const auto r = theorem7_check(cat(), e);
    holds += r.holds;
    if (r.holds != rank_condition(e.source, e.target))
      f.add(e.source.label() + " -> " + e.target.label() + ": " + r.reason);
  }
  if (pairs.empty()) f.add("no supported pairs");
  return finish(f, std::to_string(pairs.size()) + " embeddings, " + std::to_string(holds) + " hold, all agree");
}

}  // namespace

int main() {
  const Criterion criteria[] = {
      {1, "golden table", 10, golden_table},
      {2, "rank-one radii", 0, rank_one_radii},
      {3, "Hermitian omega equality", 30, hermitian_omega},
      {4, "oracle concordance", 60, oracle_concordance},
      {5, "adapted blocks", 0, adapted_blocks},
      {6, "Steinness machinery", 120, steinness},
      {7, "criterion agreement", 0, criterion_agreement},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += "; over the " + fmt(c.budget_seconds) + " s budget";
    }
    failed += !o.pass;
    std::printf("%s [%d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failed;
}
