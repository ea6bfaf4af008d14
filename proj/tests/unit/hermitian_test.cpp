#include <gtest/gtest.h>

#include "grauert/error.hpp"
#include "grauert/hermitian.hpp"

using namespace grauert;

namespace {

const Catalog& cat() { return Catalog::instance(); }
SpaceDescriptor sp(const std::string& l) { return cat().lookup(l); }

Theorem7Result check(const std::string& m, const std::string& n) {
  return theorem7_check(cat(), embedding_map(cat(), sp(m), sp(n)));
}

}  // namespace

TEST(RankCondition, Examples) {
  EXPECT_TRUE(rank_condition(sp("BDI:p=3,q=1"), sp("BDI:p=3,q=2")));
  EXPECT_TRUE(rank_condition(sp("CII:p=1,q=2"), sp("AIII:p=2,q=4")));
  EXPECT_FALSE(rank_condition(sp("BDI:p=3,q=3"), sp("AIII:p=3,q=3")));
  EXPECT_THROW(rank_condition(sp("CI:n=2"), sp("AI:n=3")), InvalidArgument);
}

TEST(VertexCheck, Examples) {
  auto a = check("BDI:p=3,q=1", "BDI:p=3,q=2");
  EXPECT_TRUE(a.holds) << a.reason;
  EXPECT_EQ(a.certificate.size(), 2u);
  for (const auto& v : a.certificate) EXPECT_FALSE(v.saturating.empty());

  auto b = check("BDI:p=2,q=1", "AIII:p=2,q=1");
  EXPECT_FALSE(b.holds);
  ASSERT_TRUE(b.separating_vertex.has_value());
  // The vertex sits at |alpha(H)| = pi/2 for the root of M; the long root of N doubles it.
  EXPECT_EQ(abs((*b.separating_vertex)[0]), Rational(1, 2));
  EXPECT_EQ(b.separating_value, 1);

  auto m = sp("CI:n=3");
  auto c = theorem7_check(cat(), embedding_map(cat(), m, cat().product_descriptor(m)));
  EXPECT_TRUE(c.holds) << c.reason;

  EXPECT_TRUE(check("CII:p=1,q=2", "AIII:p=2,q=4").holds);
  EXPECT_FALSE(check("AI:n=3", "CI:n=3").holds);
  EXPECT_TRUE(check("AI:n=2", "CI:n=2").holds);
}

TEST(VertexCheck, AgreesWithRankConditionOnEverySupportedPair) {
  auto pairs = supported_embeddings(cat(), {5, 6});
  EXPECT_GT(pairs.size(), 20u);
  for (const auto& e : pairs) {
    auto r = theorem7_check(cat(), e);
    EXPECT_EQ(r.holds, rank_condition(e.source, e.target)) << e.source.label() << " -> " << e.target.label() << ": " << r.reason;
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(cat(), sp("AI:n=3")).verdict, Verdict::rigid);
  auto f = classify(cat(), sp("FII"));
  EXPECT_EQ(f.verdict, Verdict::envelope);
  EXPECT_EQ(f.envelope_space->label(), "EIII");
  EXPECT_EQ(classify(cat(), sp("DIII:n=4")).verdict, Verdict::product);
  auto c = classify(cat(), sp("CII:p=1,q=2"));
  EXPECT_EQ(c.envelope_space->label(), "AIII:p=2,q=4");
  auto e = classify(cat(), sp("AII:n=4"));
  EXPECT_EQ(e.verdict, Verdict::rigid);
  ASSERT_FALSE(e.evidence.empty());
  bool saw = false;
  for (const auto& ev : e.evidence)
    if (ev.envelope == "EVII") {
      saw = true;
      EXPECT_FALSE(ev.passes);
    }
  EXPECT_TRUE(saw);
}

TEST(Classify, EvenParameterRemarkForBDI) {
  auto c = classify(cat(), sp("BDI:p=4,q=4"));
  EXPECT_EQ(c.verdict, Verdict::rigid);
  ASSERT_EQ(c.remarks.size(), 1u);
  EXPECT_NE(c.remarks[0].find("CII:p=2,q=2"), std::string::npos);
  EXPECT_TRUE(classify(cat(), sp("BDI:p=5,q=4")).remarks.empty());
}

TEST(Classify, InvariantsOverGrid) {
  for (const auto& s : cat().all_spaces()) {
    auto c = classify(cat(), s);
    if (c.verdict == Verdict::product) EXPECT_TRUE(s.hermitian) << s.label();
    if (c.verdict == Verdict::envelope) EXPECT_EQ(c.envelope_space->rank, 2 * s.rank) << s.label();
  }
}

TEST(GoldenTable, ReproducedWithoutMismatch) {
  auto r = reproduce_golden_table(cat());
  ASSERT_EQ(r.row_ok.size(), 17u);
  for (std::size_t i = 0; i < r.row_ok.size(); ++i) EXPECT_TRUE(r.row_ok[i]) << "row " << i;
  for (const auto& inst : r.instances) EXPECT_TRUE(inst.match) << inst.space;
  EXPECT_EQ(r.mismatches(), 0u);
}

TEST(Audit, ShippedDataIsClean) {
  auto a = audit(cat());
  EXPECT_TRUE(a.ok());
  for (const auto& v : a.violations) ADD_FAILURE() << v;
  EXPECT_GT(a.spaces, 50u);
}
