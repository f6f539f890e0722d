#include "reid/theta.hpp"

#include <algorithm>
#include <cmath>

#include "reid/search.hpp"
#include "reid/sketch.hpp"

namespace reid {

std::string ThetaParams::name() const {
  std::string s = "digon-over=";
  s += digon_over == Side::left ? "left" : "right";
  s += transversal == Level::over ? " transversal=over" : " transversal=under";
  s += left == Direction::up ? " left=up" : " left=down";
  s += right == Direction::up ? " right=up" : " right=down";
  return s;
}

namespace {

constexpr double transversal_y = 0.3;

// Arcs are drawn top to bottom; `up` reverses them.
SketchStrand arc(std::vector<Point> top_down, Direction dir, int level) {
  if (dir == Direction::up) std::reverse(top_down.begin(), top_down.end());
  return {std::move(top_down), level};
}

// Shapes: 0 = the digon alone (crossings at y = ±2), 1 = the arcs crossing once
// above the transversal, 2 = three crossings at y = 2, -2, -5.
std::vector<SketchStrand> drawing(const ThetaParams& p, int shape) {
  std::vector<Point> l, r;
  switch (shape) {
    case 0:
      l = {{1, 4}, {-1, 0}, {1, -4}};
      r = {{-1, 4}, {1, 0}, {-1, -4}};
      break;
    case 1:
      l = {{1, 4}, {-1, 0}, {-1, -6}};
      r = {{-1, 4}, {1, 0}, {1, -6}};
      break;
    default:
      l = {{1, 4}, {-1, 0}, {1, -4}, {-1, -6}};
      r = {{-1, 4}, {1, 0}, {-1, -4}, {1, -6}};
      break;
  }
  const bool left_over = p.digon_over == Side::left;
  return {
      arc(l, p.left, left_over ? 2 : 1),
      arc(r, p.right, left_over ? 1 : 2),
      {{{5, transversal_y}, {-5, transversal_y}}, p.transversal == Level::over ? 3 : 0},
  };
}

Sketch draw(const ThetaParams& p, int shape) {
  auto strands = drawing(p, shape);
  return sketch_tangle(strands);
}

int crossing_at(const Sketch& s, double y) {
  for (const auto& c : s.crossings)
    if (std::abs(c.at.y - y) < 1e-6 && std::abs(c.at.x) < 1e-6) return c.id;
  throw ThetaError("no crossing at height " + std::to_string(y));
}

// The triangular face with `apex` as a corner, and its index in faces(d).
int triangle_at(const TangleDiagram& d, int apex) {
  const auto fs = faces(d);
  for (int i = 0; i < static_cast<int>(fs.size()); ++i) {
    const auto& f = fs[i];
    if (f.sides.size() != 3 || f.touches_boundary()) continue;
    for (const auto& c : f.corners)
      if (c && *c == apex) return i;
  }
  throw ThetaError("no triangle at crossing " + std::to_string(apex));
}

}  // namespace

std::vector<ThetaConfig> enumerate_theta_configs() {
  std::vector<ThetaConfig> out;
  for (Side over : {Side::left, Side::right})
    for (Level level : {Level::over, Level::under})
      for (Direction l : {Direction::up, Direction::down})
        for (Direction r : {Direction::up, Direction::down}) {
          ThetaParams p{over, level, l, r};
          Sketch s = draw(p, 0);
          const TangleDiagram& d = s.diagram;
          require_valid(d);
          const int top = crossing_at(s, 2);
          const int bottom = crossing_at(s, -2);
          if (d.crossing(top).sign == d.crossing(bottom).sign)
            throw ThetaError(p.name() + ": digon crossings have equal signs");
          int over_count = 0, under_count = 0;
          for (const auto& c : s.crossings) {
            if (c.over_strand == 2) ++over_count;
            if (c.under_strand == 2) ++under_count;
          }
          if (!((over_count == 2 && under_count == 0) || (over_count == 0 && under_count == 2)))
            throw ThetaError(p.name() + ": transversal is not consistent");
          ThetaConfig t{p, d, {}, {}, triangle_at(d, top), triangle_at(d, bottom)};
          const auto fs = faces(d);
          t.upper = classify_triangle(d, fs[t.upper_face]);
          t.lower = classify_triangle(d, fs[t.lower_face]);
          out.push_back(std::move(t));
        }
  return out;
}

ThetaRelation theta_relation(const std::vector<ThetaConfig>& configs) {
  ThetaRelation r;
  for (const auto& t : configs) r.insert({t.upper.letter, t.lower.letter});
  return r;
}

ThetaRelation theta_relation() { return theta_relation(enumerate_theta_configs()); }

std::string theta_table(const std::vector<ThetaConfig>& configs) {
  std::string out;
  for (const auto& t : configs) out += t.params.name() + " → " + t.upper.name() + " , " + t.lower.name() + "\n";
  return out;
}

Certificate factor_via_theta(const ThetaConfig& t) {
  const MoveSet basis = basis_with(t.lower.letter);
  // Step 0: the arcs cross once, above the transversal (the x triangle).
  Sketch s0 = draw(t.params, 1);
  // Step 1: push the arcs through each other below the transversal.
  Sketch s1 = draw(t.params, 2);
  const TangleDiagram& start = s0.diagram;
  const TangleDiagram& expanded = s1.diagram;
  const int lower_apex = crossing_at(s1, -2);
  const auto f1 = faces(expanded);
  const Face& lower = f1[triangle_at(expanded, lower_apex)];
  if (classify_triangle(expanded, lower) != t.lower)
    throw ThetaError(t.params.name() + ": lower triangle after expansion is not " + t.lower.name());
  const TangleDiagram moved = r3_image(expanded, lower);
  const auto f0 = faces(start);
  const TangleDiagram goal = r3_image(start, f0[triangle_at(start, crossing_at(s0, 2))]);

  auto step = [&](const TangleDiagram& from, const TangleDiagram& to, auto accept) -> CertificateStep {
    const std::string want = canonical_code(to);
    for (auto& app : enumerate_applications(from, basis))
      if (accept(app.move) && app.result_code == want) return {app.move, app.result};
    throw ThetaError(t.params.name() + ": no move reaches the expected diagram");
  };
  Certificate c{basis, start, {}};
  c.steps.push_back(step(start, expanded, [](const MoveName& m) { return m.is_r2() && m.expand; }));
  c.steps.push_back(step(expanded, moved, [](const MoveName& m) { return m.is_r3(); }));
  c.steps.push_back(step(moved, goal, [](const MoveName& m) { return m.is_r2() && !m.expand; }));

  if (classify_triangle(start, f0[triangle_at(start, crossing_at(s0, 2))]).flag == Flag::down)
    c = reverse_certificate(c);
  c = align_certificate(c, build_triangle({t.upper.letter, Flag::up}));
  auto v = verify_certificate(c, basis);
  if (!v.ok) throw ThetaError(t.params.name() + ": step " + std::to_string(v.step) + ": " + v.reason);
  return c;
}

}  // namespace reid
