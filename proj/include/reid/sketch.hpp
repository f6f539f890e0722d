#pragma once

#include <span>
#include <vector>

#include "reid/diagram.hpp"

namespace reid {

struct Point {
  double x = 0;
  double y = 0;
};

// A strand drawn as a polyline from its in-leg to its out-leg. Where two strands
// cross, the one with the higher level passes over.
struct SketchStrand {
  std::vector<Point> path;
  int level = 0;
};

struct SketchCrossing {
  int id = 0;
  int over_strand = 0;
  int under_strand = 0;
  Point at;
};

struct Sketch {
  TangleDiagram diagram;
  std::vector<SketchCrossing> crossings;
};

// Builds the combinatorial map of a straight-line drawing. Polyline endpoints are
// the legs; they are numbered counterclockwise starting from the direction
// `first_leg_angle` (radians, measured from east). Intersections must be transversal
// and lie in segment interiors; crossing ids follow the order in which strands
// meet them.
Sketch sketch_tangle(std::span<const SketchStrand> strands, double first_leg_angle = 0.0);

}  // namespace reid
