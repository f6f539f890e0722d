#include <gtest/gtest.h>

#include <map>
#include <set>

#include "reid/search.hpp"
#include "reid/theta.hpp"
#include "support.hpp"

namespace reid {
namespace {

const std::vector<ThetaConfig>& configs() {
  static const auto all = enumerate_theta_configs();
  return all;
}

TEST(ThetaTest, SixteenDistinctConfigurations) {
  ASSERT_EQ(configs().size(), 16u);
  std::set<std::string> codes;
  std::set<ThetaParams> params;
  for (const auto& t : configs()) {
    codes.insert(canonical_code(t.tangle));
    params.insert(t.params);
    EXPECT_EQ(t.tangle.leg_count(), 6);
    EXPECT_EQ(t.tangle.crossing_count(), 4);
  }
  EXPECT_EQ(codes.size(), 16u);
  EXPECT_EQ(params.size(), 16u);
  EXPECT_TRUE(std::is_sorted(configs().begin(), configs().end(),
                             [](const auto& a, const auto& b) { return a.params < b.params; }));
}

TEST(ThetaTest, DigonCrossingsHaveOppositeSigns) {
  // Writhe of a consistent digon is 0, so the total writhe comes from the
  // transversal's two crossings alone.
  for (const auto& t : configs()) {
    int total = writhe(t.tangle);
    EXPECT_TRUE(total == 2 || total == 0 || total == -2) << t.params.name();
  }
}

// Flags follow from the geometry: a transversal over both arcs gives one ↑ and
// one ↓ triangle; under both arcs, both triangles share a flag.
TEST(ThetaTest, FlagsFollowTransversalLevel) {
  for (const auto& t : configs()) {
    SCOPED_TRACE(t.params.name());
    if (t.params.transversal == Level::over) {
      EXPECT_EQ(t.upper.flag, Flag::down);
      EXPECT_EQ(t.lower.flag, Flag::up);
    } else {
      EXPECT_EQ(t.upper.flag, t.lower.flag);
    }
  }
}

TEST(ThetaTest, RelationIsSymmetricWithinCase) {
  auto r = theta_relation(configs());
  EXPECT_EQ(r.size(), 16u);
  for (auto [x, y] : r) {
    EXPECT_TRUE(r.contains({y, x})) << letter_char(x) << letter_char(y);
    EXPECT_EQ(is_lowercase(x), is_lowercase(y));
  }
}

TEST(ThetaTest, SwappedFlippedPairsExist) {
  std::set<std::pair<TriangleCode, TriangleCode>> pairs;
  for (const auto& t : configs()) pairs.insert({t.upper, t.lower});
  for (auto [x, y] : pairs) EXPECT_TRUE(pairs.contains({y.flipped(), x.flipped()})) << x.name() << y.name();
}

TEST(ThetaTest, MirrorTransportsConfigurations) {
  std::map<std::string, const ThetaConfig*> by_code;
  for (const auto& t : configs()) by_code[canonical_code(t.tangle)] = &t;
  for (const auto& t : configs()) {
    auto it = by_code.find(canonical_code(mirror(t.tangle)));
    ASSERT_NE(it, by_code.end()) << t.params.name();
    EXPECT_EQ(it->second->upper, mirror_code(t.upper));
    EXPECT_EQ(it->second->lower, mirror_code(t.lower));
  }
}

TEST(ThetaTest, FactorizationIsThreeVerifiedSteps) {
  for (const auto& t : configs()) {
    SCOPED_TRACE(t.params.name());
    auto c = factor_via_theta(t);
    ASSERT_EQ(c.steps.size(), 3u);
    EXPECT_TRUE(c.steps[0].move.is_r2() && c.steps[0].move.expand);
    EXPECT_EQ(c.steps[1].move.letter, t.lower.letter);
    EXPECT_TRUE(c.steps[2].move.is_r2() && !c.steps[2].move.expand);
    EXPECT_TRUE(verify_certificate(c, basis_with(t.lower.letter)).ok);
    auto x_up = build_triangle({t.upper.letter, Flag::up});
    EXPECT_EQ(canonical_code(c.start), canonical_code(x_up));
    auto x_tri = testing::triangles(x_up);
    EXPECT_EQ(canonical_code(c.end()), canonical_code(r3_image(x_up, x_tri.at(0))));
    // Step 2 acts on a triangle of the lower letter.
    bool found = false;
    for (auto& f : testing::triangles(c.steps[0].result)) {
      try {
        found |= classify_triangle(c.steps[0].result, f).letter == t.lower.letter;
      } catch (const Error&) {
      }
    }
    EXPECT_TRUE(found);
  }
}

TEST(ThetaTest, TableMatchesGolden) { EXPECT_EQ(theta_table(configs()), read_file(GOLDEN_DIR "/thetas.txt")); }

TEST(ThetaTest, TableIsStable) {
  auto text = theta_table(configs());
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 16);
  EXPECT_EQ(text, theta_table(enumerate_theta_configs()));
}

}  // namespace
}  // namespace reid
