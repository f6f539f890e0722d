#include <gtest/gtest.h>

#include "reid/theorem.hpp"
#include "support.hpp"

namespace reid {
namespace {

const TheoremRun& run() {
  static const TheoremRun r = run_theorem({Letter::a, Letter::A});
  return r;
}

TEST(TheoremTest, LemmaSuiteCoversEveryPairBothWays) {
  const auto& lemmas = run().lemmas;
  ASSERT_EQ(lemmas.size(), 16u);
  std::set<std::pair<Letter, Letter>> pairs;
  for (const auto& e : lemmas) {
    pairs.insert({e.x, e.y});
    EXPECT_EQ(e.certificate.steps.size(), 3u);
    EXPECT_LE(e.search_length, 3);
  }
  for (auto [x, y] : pairs) EXPECT_TRUE(pairs.contains({y, x}));
}

TEST(TheoremTest, TwoClassesWithNoCrossingEdge) {
  const auto& c = run().classes;
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], (std::set{Letter::a, Letter::b, Letter::c, Letter::d}));
  EXPECT_EQ(c[1], (std::set{Letter::A, Letter::B, Letter::C, Letter::D}));
  for (const auto& e : run().lemmas) EXPECT_EQ(is_lowercase(e.x), is_lowercase(e.y));
}

TEST(TheoremTest, ClassesFromHandMadeEdges) {
  auto cert = run().lemmas[0].certificate;
  std::vector<LemmaEntry> chain{{Letter::a, Letter::b, {}, cert, 3}, {Letter::b, Letter::a, {}, cert, 3},
                                {Letter::c, Letter::b, {}, cert, 3}};
  auto classes = equivalence_classes(chain);
  EXPECT_EQ(classes.size(), 7u);
  EXPECT_EQ(classes[0], (std::set{Letter::a, Letter::b}));
}

TEST(TheoremTest, BridgeAndMirrorHaveEqualLength) {
  const auto& b = run().bridge;
  EXPECT_EQ(b.A_to_c.steps.size(), b.a_to_C.steps.size());
  EXPECT_TRUE(verify_certificate(b.A_to_c, basis_with(Letter::A)).ok);
  EXPECT_TRUE(verify_certificate(b.a_to_C, basis_with(Letter::a)).ok);
}

TEST(TheoremTest, GraphWithoutBridgesIsNotConnected) {
  ImplicationGraph g;
  for (const auto& e : run().lemmas) g.emplace(std::pair{e.y, e.x}, e.certificate);
  EXPECT_FALSE(strongly_connected(g));
  EXPECT_THROW(full_theorem(Letter::a, g), Error);
  EXPECT_TRUE(run().connected);
}

TEST(TheoremTest, SevenVerifiedDerivationsPerBasis) {
  for (const auto& [basis, row] : run().derivations) {
    ASSERT_EQ(row.size(), 7u);
    for (const auto& [x, d] : row) {
      EXPECT_TRUE(verify_certificate(d.certificate, basis_with(basis)).ok);
      EXPECT_EQ(d.path.front(), basis);
      EXPECT_EQ(d.path.back(), x);
      for (const auto& s : d.certificate.steps)
        if (s.move.is_r3()) EXPECT_EQ(s.move.letter, basis);
    }
  }
}

TEST(TheoremTest, ReportIsDeterministic) {
  auto text = report(run());
  EXPECT_EQ(text, report(run_theorem({Letter::a, Letter::A})));
  EXPECT_NE(text.find("Theta configurations: 16"), std::string::npos);
  EXPECT_NE(text.find("Equivalence classes: 2"), std::string::npos);
  EXPECT_NE(text.find("theorem/A/c.cert"), std::string::npos);
}

}  // namespace
}  // namespace reid
