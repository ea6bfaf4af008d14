#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "generators.hpp"
#include "grauert/adapted.hpp"
#include "grauert/error.hpp"
#include "grauert/matrix_oracle.hpp"

using namespace grauert;

namespace {

const Catalog& cat() { return Catalog::instance(); }

MatrixAlgebra alg(const std::string& label) { return realize(cat(), cat().lookup(label)); }

std::vector<double> random_in_span(const MatrixAlgebra& a, prop::Gen& g) {
  std::vector<double> h(a.ambient_dim(), 0.0);
  for (int k = 0; k < a.rank(); ++k) {
    const double c = g.real(-1, 1);
    for (int i = 0; i < a.ambient_dim(); ++i) h[i] += c * a.a_coords[k][i];
  }
  return h;
}

}  // namespace

TEST(Realize, Dimensions) {
  auto a = alg("AI:n=3");
  EXPECT_EQ(a.basis.size(), 8u);
  EXPECT_EQ(a.k_basis.size(), 3u);
  EXPECT_EQ(a.p_basis.size(), 5u);
  EXPECT_EQ(alg("AIII:p=2,q=1").p_basis.size(), 4u);
  EXPECT_EQ(alg("CII:p=1,q=1").rank(), 1);
  EXPECT_THROW(alg("EI"), Unsupported);
  EXPECT_THROW(alg("AI:n=9"), Unsupported);
}

TEST(Realize, BracketClosureAndCommutingFlat) {
  for (const char* label : {"AI:n=4", "AII:n=2", "AIII:p=2,q=3", "BDI:p=3,q=2", "CI:n=2", "CII:p=1,q=2",
                            "DIII:n=3", "cA:n=3", "cB:n=5", "cC:n=2", "product(CI:n=1)"}) {
    auto a = alg(label);
    EXPECT_LT(bracket_residual(a), 1e-10) << label;
    for (const auto& x : a.a_basis)
      for (const auto& y : a.a_basis) EXPECT_LT((x * y - y * x).norm(), 1e-12) << label;
  }
}

TEST(NumericDatum, Examples) {
  auto d = numeric_restricted_datum(alg("cA:n=2"));
  ASSERT_EQ(d.roots.size(), 2u);
  EXPECT_EQ(d.roots[0].multiplicity, 2);
  EXPECT_EQ(d.roots[0].vector.coords, RationalVector({1, -1}));
}

TEST(NumericDatum, MatchesCatalogForSmallSpaces) {
  prop::Gen g(21);
  for (const auto& s : cat().all_spaces({4, 4})) {
    MatrixAlgebra a;
    try {
      a = realize(cat(), s);
    } catch (const Unsupported&) {
      continue;
    }
    auto nd = numeric_restricted_datum(a);
    const auto& roots = a.datum.root_system.roots();
    ASSERT_EQ(nd.roots.size(), roots.size()) << s.label();
    for (std::size_t i = 0; i < roots.size(); ++i) {
      EXPECT_EQ(nd.roots[i].vector, roots[i].vector) << s.label();
      EXPECT_EQ(nd.roots[i].multiplicity, roots[i].multiplicity) << s.label();
    }
    for (int trial = 0; trial < 5; ++trial) {
      auto h = random_in_span(a, g);
      auto num = numeric_jacobi_eigenvalues(a, h);
      std::vector<double> exact;
      for (const auto& e : jacobi_spectrum(a.datum, h).eigenvalues) exact.insert(exact.end(), e.multiplicity, e.value);
      ASSERT_EQ(num.size(), exact.size()) << s.label();
      for (std::size_t i = 0; i < num.size(); ++i) EXPECT_NEAR(num[i], exact[i], 1e-9) << s.label();
    }
  }
}

TEST(RootSpaces, DimensionsAndOrthogonality) {
  auto a = alg("AIII:p=3,q=1");
  auto spaces = p_root_spaces(a);
  std::size_t total = a.a_basis.size();
  for (const auto& rs : spaces) total += rs.vectors.size();
  EXPECT_EQ(total, a.p_basis.size());
  for (const auto& rs : spaces)
    for (const auto& y : rs.vectors) {
      EXPECT_LT((y - y.adjoint()).norm(), 1e-10);
      for (const auto& x : a.a_basis) EXPECT_NEAR((x.cwiseProduct(y.conjugate())).sum().real(), 0, 1e-10);
    }
}

TEST(Chart, Examples) {
  auto a = alg("AI:n=2");
  ComplexMatrix xi(2, 2);
  xi << 0, 0.2, 0.2, 0;
  auto c = invariant_chart(a, xi);
  EXPECT_NEAR(c.x[0], 0.2, 1e-14);
  EXPECT_NEAR(c.x[1], -0.2, 1e-14);
  EXPECT_FALSE(c.ambiguous);
  EXPECT_TRUE(invariant_chart(a, ComplexMatrix::Zero(2, 2)).ambiguous);
}

TEST(Chart, IdempotentOnChamberAndInvariantUnderK) {
  prop::Gen g(5);
  for (const char* label : {"AI:n=3", "AII:n=3", "AIII:p=3,q=2", "BDI:p=4,q=2", "CI:n=3", "CII:p=2,q=1",
                            "DIII:n=4", "DIII:n=3", "cA:n=3", "cB:n=5", "cD:n=6", "cC:n=2"}) {
    auto a = alg(label);
    for (int trial = 0; trial < 10; ++trial) {
      auto h = random_in_span(a, g);
      auto rep = invariant_chart(a, a.embed(h)).x;
      auto again = invariant_chart(a, a.embed(rep)).x;
      for (std::size_t i = 0; i < rep.size(); ++i) EXPECT_NEAR(rep[i], again[i], 1e-12) << label;

      ComplexMatrix z = ComplexMatrix::Zero(a.size, a.size);
      for (const auto& k : a.k_basis) z += g.real(-1, 1) * k;
      const ComplexMatrix kk = z.exp();
      ComplexMatrix xi = ComplexMatrix::Zero(a.size, a.size);
      for (const auto& p : a.p_basis) xi += g.real(-1, 1) * p;
      auto before = invariant_chart(a, xi).x;
      auto after = invariant_chart(a, ComplexMatrix(kk * xi * kk.inverse())).x;
      for (std::size_t i = 0; i < before.size(); ++i) EXPECT_NEAR(before[i], after[i], 1e-10) << label;
    }
  }
}

TEST(Embedding, Examples) {
  auto e = embedding_map(cat(), cat().lookup("BDI:p=3,q=1"), cat().lookup("BDI:p=3,q=2"));
  EXPECT_EQ(e.iota, RationalMatrix({{1}, {0}}));
  auto f = embedding_map(cat(), cat().lookup("CII:p=1,q=2"), cat().lookup("AIII:p=2,q=4"));
  EXPECT_EQ(f.iota, RationalMatrix({{1}, {-1}}));
  auto h = embedding_map(cat(), cat().lookup("AI:n=3"), cat().lookup("CI:n=3"));
  EXPECT_EQ(h.iota, exact::identity(3));
  auto m = cat().lookup("CI:n=2");
  auto p = embedding_map(cat(), m, cat().product_descriptor(m));
  EXPECT_EQ(p.iota, RationalMatrix({{1, 0}, {0, 1}, {1, 0}, {0, 1}}));
  EXPECT_THROW(embedding_map(cat(), cat().lookup("AI:n=3"), cat().lookup("CI:n=4")), Unsupported);
}

TEST(Embedding, InclusionIsALieMapIntoTarget) {
  prop::Gen g(9);
  const std::pair<const char*, const char*> pairs[] = {
      {"BDI:p=3,q=1", "BDI:p=3,q=2"}, {"BDI:p=3,q=2", "AIII:p=3,q=2"}, {"CII:p=2,q=1", "AIII:p=4,q=2"},
      {"CII:p=1,q=1", "AIII:p=2,q=2"}, {"AI:n=3", "CI:n=3"}};
  for (const auto& [ms, ns] : pairs) {
    auto a = alg(ms), b = alg(ns);
    auto e = embedding_map(cat(), a.space, b.space);
    for (const auto& x : a.basis) {
      ComplexMatrix y = include_matrix(e, x);
      ComplexMatrix rest = y;
      for (const auto& bb : b.basis) rest -= (bb.cwiseProduct(y.conjugate())).sum().real() * bb;
      EXPECT_LT(rest.norm(), 1e-10) << ms << " -> " << ns;
    }
    auto h = random_in_span(a, g);
    auto img = include_matrix(e, a.embed(h));
    std::vector<double> ih(b.ambient_dim(), 0.0);
    for (int k = 0; k < b.ambient_dim(); ++k)
      for (std::size_t i = 0; i < h.size(); ++i) ih[k] += to_double(e.iota[k][i]) * h[i];
    EXPECT_LT((img - b.embed(ih)).norm(), 1e-12) << ms;
  }
}
