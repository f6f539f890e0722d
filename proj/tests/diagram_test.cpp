#include <gtest/gtest.h>

#include "reid/diagram.hpp"
#include "reid/moves.hpp"
#include "reid/sketch.hpp"
#include "support.hpp"

namespace reid {
namespace {

using testing::isomorphic;
using testing::relabel;
using testing::single_strand;
using testing::two_strands;

int euler(const TangleDiagram& d) {
  return (d.crossing_count() + 1) - static_cast<int>(d.edges().size()) + static_cast<int>(faces(d).size());
}

TEST(DiagramTest, SingleStrandHasTwoRegions) {
  auto d = single_strand();
  EXPECT_TRUE(validate(d).empty());
  EXPECT_EQ(faces(d).size(), 2u);
  EXPECT_EQ(euler(d), 2);
  EXPECT_EQ(writhe(d), 0);
}

TEST(DiagramTest, TwoChordsHaveThreeRegions) {
  auto d = two_strands();
  EXPECT_TRUE(validate(d).empty());
  EXPECT_EQ(faces(d).size(), 3u);
}

TEST(DiagramTest, CrossedChordsAreGenusViolation) {
  // 1 -> 3 and 2 -> 4 would have to cross in the disk.
  TangleDiagram d({LegFlag::in, LegFlag::in, LegFlag::out, LegFlag::out}, {},
                  {{Port::leg(1), Port::leg(3)}, {Port::leg(2), Port::leg(4)}});
  auto v = validate(d);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v.front().tag, ViolationTag::genus);
}

TEST(DiagramTest, EveryTriangleIsPlanarWithOneInteriorTriangle) {
  for (auto code : all_triangle_codes()) {
    SCOPED_TRACE(code.ascii());
    auto d = build_triangle(code);
    EXPECT_TRUE(validate(d).empty());
    EXPECT_EQ(d.leg_count(), 6);
    EXPECT_EQ(d.crossing_count(), 3);
    EXPECT_EQ(euler(d), 2);
    EXPECT_EQ(faces(d).size(), 7u);
    EXPECT_EQ(testing::triangles(d).size(), 1u);
    EXPECT_EQ(interior_faces(d).size(), 1u);
  }
}

TEST(DiagramTest, ReversedEdgeIsOrientationMismatch) {
  auto d = build_triangle({Letter::a, Flag::up});
  auto edges = d.edges();
  std::swap(edges[0].from, edges[0].to);
  auto v = validate(TangleDiagram(d.legs(), d.crossings(), edges));
  ASSERT_FALSE(v.empty());
  bool found = false;
  for (auto& x : v) found |= x.tag == ViolationTag::orientation_mismatch;
  EXPECT_TRUE(found);
}

TEST(DiagramTest, MissingEdgeIsReported) {
  auto d = build_triangle({Letter::a, Flag::up});
  auto edges = d.edges();
  edges.pop_back();
  EXPECT_FALSE(validate(TangleDiagram(d.legs(), d.crossings(), edges)).empty());
  EXPECT_THROW(require_valid(TangleDiagram(d.legs(), d.crossings(), edges)), Error);
}

TEST(DiagramTest, UnbalancedLegsAreReported) {
  TangleDiagram d({LegFlag::in, LegFlag::in}, {}, {{Port::leg(1), Port::leg(2)}});
  EXPECT_FALSE(validate(d).empty());
}

TEST(DiagramTest, SingleCrossingSignFollowsGeometry) {
  // under west to east, over north to south
  std::vector<SketchStrand> s{{{{-2, 0.1}, {2, 0.1}}, 0}, {{{0.1, 2}, {0.1, -2}}, 1}};
  auto d = sketch_tangle(s).diagram;
  ASSERT_EQ(d.crossing_count(), 1);
  EXPECT_EQ(to_int(d.crossings()[0].sign), testing::sign_of({1, 0}, {0, -1}));
  s[1].level = -1;
  auto e = sketch_tangle(s).diagram;
  EXPECT_EQ(to_int(e.crossings()[0].sign), testing::sign_of({0, -1}, {1, 0}));
  EXPECT_NE(d.crossings()[0].sign, e.crossings()[0].sign);
}

TEST(DiagramTest, TriangleWritheMatchesArrowOracle) {
  for (auto code : all_triangle_codes()) {
    SCOPED_TRACE(code.ascii());
    EXPECT_EQ(writhe(build_triangle(code)), testing::triangle_writhe_oracle(code));
  }
}

TEST(DiagramTest, TriangleHasThreeStrandsEachThroughTwoCrossings) {
  for (auto code : all_triangle_codes()) {
    auto ss = strands(build_triangle(code));
    ASSERT_EQ(ss.size(), 3u);
    for (auto& s : ss) {
      EXPECT_EQ(s.crossings.size(), 2u);
      EXPECT_EQ(s.edges.size(), 3u);
    }
  }
}

TEST(DiagramTest, MirrorIsAnInvolutionThatNegatesWrithe) {
  for (auto code : all_triangle_codes()) {
    auto d = build_triangle(code);
    auto m = mirror(d);
    EXPECT_TRUE(validate(m).empty());
    EXPECT_EQ(writhe(m), -writhe(d));
    EXPECT_EQ(mirror(m), d);
    EXPECT_EQ(faces(m).size(), faces(d).size());
    EXPECT_EQ(strand_pairing(m), strand_pairing(d));
  }
}

TEST(DiagramTest, RotationPreservesValidityAndComposes) {
  auto d = build_triangle({Letter::C, Flag::down});
  EXPECT_EQ(canonical_code(rotate_boundary(d, 0)), canonical_code(d));
  EXPECT_EQ(canonical_code(rotate_boundary(d, 6)), canonical_code(d));
  auto r = rotate_boundary(rotate_boundary(d, 2), 3);
  EXPECT_TRUE(validate(r).empty());
  EXPECT_EQ(canonical_code(r), canonical_code(rotate_boundary(d, 5)));
}

TEST(DiagramTest, CanonicalCodeIgnoresLabels) {
  for (auto code : all_triangle_codes()) {
    auto d = build_triangle(code);
    auto r = relabel(d, 40);
    ASSERT_TRUE(isomorphic(d, r));
    EXPECT_EQ(canonical_code(d), canonical_code(r));
    EXPECT_EQ(canonical_form(r), canonical_form(d));
  }
}

TEST(DiagramTest, CanonicalCodeAgreesWithIsomorphismOracle) {
  std::vector<TangleDiagram> ds;
  for (auto code : all_triangle_codes()) {
    ds.push_back(build_triangle(code));
    ds.push_back(mirror(ds.back()));
    ds.push_back(rotate_boundary(ds.back(), 1));
  }
  for (size_t i = 0; i < ds.size(); ++i)
    for (size_t j = 0; j < ds.size(); ++j)
      EXPECT_EQ(canonical_code(ds[i]) == canonical_code(ds[j]), isomorphic(ds[i], ds[j])) << i << " " << j;
}

}  // namespace
}  // namespace reid
