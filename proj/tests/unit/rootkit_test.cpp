#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "generators.hpp"
#include "grauert/error.hpp"
#include "grauert/rootkit.hpp"

using namespace grauert;

namespace {

RationalVector v(std::initializer_list<Rational> xs) { return RationalVector(xs); }

std::multiset<std::pair<RationalVector, int>> as_multiset(const RootSystem& rs) {
  std::multiset<std::pair<RationalVector, int>> out;
  for (const auto& r : rs.roots()) out.insert({r.vector.coords, r.multiplicity});
  return out;
}

struct Case {
  Family family;
  int rank;
  std::size_t count;
};

const std::vector<Case> kCases = {
    {Family::A, 1, 2},   {Family::A, 2, 6},   {Family::A, 4, 20},  {Family::B, 1, 2},
    {Family::B, 3, 18},  {Family::C, 1, 2},   {Family::C, 2, 8},   {Family::C, 4, 32},
    {Family::D, 2, 4},   {Family::D, 4, 24},  {Family::BC, 1, 4},  {Family::BC, 2, 12},
    {Family::BC, 3, 24}, {Family::E6, 6, 72}, {Family::E7, 7, 126}, {Family::E8, 8, 240},
    {Family::F4, 4, 48}, {Family::G2, 2, 12},
};

}  // namespace

TEST(BuildRootSystem, RootCountsAndAxioms) {
  for (const auto& c : kCases) {
    auto rs = build_root_system(c.family, c.rank);
    EXPECT_EQ(rs.roots().size(), c.count) << to_string(c.family) << c.rank;
    auto report = verify_axioms(rs);
    for (const auto& check : report.checks)
      EXPECT_TRUE(check.passed) << to_string(c.family) << c.rank << " " << check.name << ": " << check.detail;
  }
}

TEST(BuildRootSystem, SmallExamples) {
  auto a1 = build_root_system(Family::A, 1);
  ASSERT_EQ(a1.roots().size(), 2u);
  EXPECT_EQ(a1.roots()[0].vector.coords, v({1, -1}));

  auto c2 = build_root_system(Family::C, 2);
  std::set<RationalVector> expected{v({2, 0}), v({-2, 0}), v({0, 2}), v({0, -2}),
                                    v({1, 1}), v({1, -1}), v({-1, 1}), v({-1, -1})};
  std::set<RationalVector> got;
  for (const auto& r : c2.roots()) got.insert(r.vector.coords);
  EXPECT_EQ(got, expected);

  auto bc2 = build_root_system(Family::BC, 2);
  EXPECT_TRUE(bc2.contains({v({1, 0})}));
  EXPECT_TRUE(bc2.contains({v({2, 0})}));
  EXPECT_FALSE(bc2.contains({v({2, 2})}));
}

TEST(BuildRootSystem, RejectsInvalidRank) {
  EXPECT_THROW(build_root_system(Family::D, 1), InvalidArgument);
  EXPECT_THROW(build_root_system(Family::BC, 0), InvalidArgument);
  EXPECT_THROW(build_root_system(Family::E6, 5), InvalidArgument);
  EXPECT_THROW(build_root_system(Family::G2, 3), InvalidArgument);
}

TEST(BuildRootSystem, DeterministicDescendingOrder) {
  for (const auto& c : kCases) {
    auto a = build_root_system(c.family, c.rank);
    auto b = build_root_system(c.family, c.rank);
    ASSERT_EQ(a.roots().size(), b.roots().size());
    for (std::size_t i = 0; i < a.roots().size(); ++i) EXPECT_EQ(a.roots()[i].vector, b.roots()[i].vector);
    for (std::size_t i = 1; i < a.roots().size(); ++i) EXPECT_GT(a.roots()[i - 1].vector, a.roots()[i].vector);
  }
}

TEST(BuildRootSystem, ReflectionsPermuteTheRootMultiset) {
  for (const auto& c : kCases) {
    auto rs = build_root_system(c.family, c.rank).with_multiplicities([](const Rational& n2) {
      return static_cast<int>(boost::rational_cast<double>(n2) * 2) + 1;
    });
    const auto original = as_multiset(rs);
    for (const auto& beta : rs.roots()) {
      std::multiset<std::pair<RationalVector, int>> image;
      for (const auto& r : rs.roots()) image.insert({reflect(r.vector.coords, beta.vector.coords), r.multiplicity});
      EXPECT_EQ(image, original) << to_string(c.family) << c.rank;
    }
  }
}

TEST(VerifyAxioms, CounterexampleFailsNegationWithWitness) {
  auto rs = RootSystem::from_roots(Family::A, 2, 2, {{{v({1, 0})}, 1}, {{v({0, 1})}, 1}});
  auto report = verify_axioms(rs);
  EXPECT_FALSE(report.all_passed());
  const auto* neg = report.find("negation");
  ASSERT_NE(neg, nullptr);
  EXPECT_FALSE(neg->passed);
  ASSERT_FALSE(neg->witness.empty());
  EXPECT_EQ(neg->witness[0].coords, v({1, 0}));
}

TEST(VerifyAxioms, DetectsNonReducedInReducedFamily) {
  auto b1 = build_root_system(Family::B, 1);
  std::vector<Root> roots = b1.roots();
  roots.push_back({{v({2})}, 1});
  roots.push_back({{v({-2})}, 1});
  auto report = verify_axioms(RootSystem::from_roots(Family::B, 1, 1, roots));
  const auto* red = report.find("reducedness");
  ASSERT_NE(red, nullptr);
  EXPECT_FALSE(red->passed);
}

TEST(VerifyAxioms, DetectsMismatchedMultiplicity) {
  auto a2 = build_root_system(Family::A, 2);
  std::vector<Root> roots = a2.roots();
  roots[0].multiplicity = 3;
  EXPECT_FALSE(verify_axioms(RootSystem::from_roots(Family::A, 2, 3, roots)).all_passed());
}

TEST(WeylOrbit, Examples) {
  auto a2 = build_root_system(Family::A, 2);
  EXPECT_EQ(weyl_orbit(a2, v({1, -1, 0})).size(), 6u);

  auto c2 = build_root_system(Family::C, 2);
  auto orbit = weyl_orbit(c2, v({1, 0}));
  std::set<RationalVector> got(orbit.begin(), orbit.end());
  EXPECT_EQ(got, (std::set<RationalVector>{v({1, 0}), v({-1, 0}), v({0, 1}), v({0, -1})}));

  auto a1 = build_root_system(Family::A, 1);
  auto zero = weyl_orbit(a1, v({0, 0}));
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(is_zero(zero[0]));
}

TEST(WeylGroup, OrdersAndOrbitDivisibility) {
  const std::map<std::pair<Family, int>, std::size_t> orders{
      {{Family::A, 1}, 2},  {{Family::A, 2}, 6},  {{Family::A, 3}, 24}, {{Family::B, 2}, 8},
      {{Family::B, 3}, 48}, {{Family::C, 3}, 48}, {{Family::D, 3}, 24}, {{Family::BC, 2}, 8},
      {{Family::G2, 2}, 12},
  };
  prop::Gen g(7);
  for (const auto& [key, order] : orders) {
    auto rs = build_root_system(key.first, key.second);
    auto group = weyl_group(rs);
    EXPECT_EQ(group.size(), order) << to_string(key.first) << key.second;
    for (int trial = 0; trial < 10; ++trial) {
      RationalVector x = g.rational_vector(rs.ambient_dim(), 3, 2);
      auto orbit = weyl_orbit(rs, x);
      EXPECT_EQ(order % orbit.size(), 0u) << to_string(key.first) << key.second << " trial " << trial;
    }
    for (const auto& w : group)
      for (const auto& r : rs.roots()) EXPECT_TRUE(rs.contains({w.apply(r.vector.coords)}));
  }
}

TEST(WeylGroup, RefusesHugeGroups) {
  EXPECT_THROW(weyl_group(build_root_system(Family::E8, 8), 1000), Unsupported);
}

TEST(RootSystem, KillingFormIsWeylInvariant) {
  prop::Gen g(3);
  for (const auto& c : kCases) {
    if (c.rank > 4) continue;
    auto rs = build_root_system(c.family, c.rank);
    for (int trial = 0; trial < 5; ++trial) {
      RationalVector h = g.rational_vector(rs.ambient_dim(), 2, 3);
      for (const auto& w : weyl_generators(rs)) EXPECT_EQ(rs.killing_form(w.apply(h)), rs.killing_form(h));
    }
  }
}

TEST(RootSystem, ComplementIsOrthogonalToRoots) {
  auto e6 = build_root_system(Family::E6, 6);
  EXPECT_EQ(e6.complement_basis().size(), 2u);
  for (const auto& c : e6.complement_basis())
    for (const auto& r : e6.roots()) EXPECT_EQ(dot(c, r.vector.coords), 0);
  EXPECT_TRUE(e6.in_span(e6.roots()[5].vector.coords));
  EXPECT_FALSE(e6.in_span(e6.complement_basis()[0]));
}
