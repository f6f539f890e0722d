#pragma once

// Test-only oracles. Nothing here calls into the move engine.

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <vector>

#include "reid/diagram.hpp"
#include "reid/moves.hpp"
#include "reid/sketch.hpp"

namespace reid::testing {

inline Point unit(Arrow a) {
  const double h = std::sqrt(3.0) / 2;
  switch (a) {
    case Arrow::east: return {1, 0};
    case Arrow::west: return {-1, 0};
    case Arrow::north_east: return {0.5, h};
    case Arrow::north_west: return {-0.5, h};
    case Arrow::south_west: return {-0.5, -h};
    case Arrow::south_east: return {0.5, -h};
  }
  return {};
}

// Sign convention restated from scratch: positive when the over-strand turns
// clockwise from the under-strand.
inline int sign_of(Point under, Point over) { return under.x * over.y - under.y * over.x < 0 ? 1 : -1; }

// Writhe of the Δ triangle for `code`, straight from the three arrows.
inline int triangle_writhe_oracle(TriangleCode code) {
  auto arrows = code.arrows();
  // levels: top 2, middle 1, bottom 0; every pair crosses once.
  int w = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) w += sign_of(unit(arrows[j]), unit(arrows[i]));
  return w;
}

inline bool slanted_up(Arrow a) { return a == Arrow::north_east || a == Arrow::south_west; }

inline SketchStrand straight(Point anchor, Arrow a, int level) {
  Point v = unit(a);
  bool rising = v.y > 0 || (v.y == 0 && v.x > 0);
  Point up = rising ? v : Point{-v.x, -v.y};
  double lo = v.y == 0 ? -4 : -3;
  Point p0{anchor.x + lo * up.x, anchor.y + lo * up.y};
  Point p1{anchor.x + 4 * up.x, anchor.y + 4 * up.y};
  if (!rising) std::swap(p0, p1);
  return {{p0, p1}, level};
}

// The three lines of the Δ for `code`, with the base either in place or lifted
// above the apex (the R3 image). Endpoints stay put, so legs are unchanged.
inline TangleDiagram triangle_lines(TriangleCode code, bool base_lifted) {
  auto arrows = code.arrows();
  bool middle_left = slanted_up(arrows[1]);
  SketchStrand base;
  if (!base_lifted) {
    base = straight({0, 0}, arrows[0], 3);
  } else {
    const double y = 1.5 * std::sqrt(3.0);
    base.path = {{-4, 0}, {-3, y}, {3, y}, {4, 0}};
    base.level = 3;
    if (arrows[0] == Arrow::west) std::reverse(base.path.begin(), base.path.end());
  }
  std::vector<SketchStrand> strands{
      base,
      straight({middle_left ? -1.0 : 1.0, 0}, arrows[1], 2),
      straight({middle_left ? 1.0 : -1.0, 0}, arrows[2], 1),
  };
  return sketch_tangle(strands, std::numbers::pi).diagram;
}

// Brute-force isomorphism of leg-labelled maps: try every crossing bijection.
inline bool isomorphic(const TangleDiagram& x, const TangleDiagram& y) {
  if (x.legs() != y.legs() || x.crossing_count() != y.crossing_count() || x.edges().size() != y.edges().size())
    return false;
  std::vector<int> perm(x.crossing_count());
  std::iota(perm.begin(), perm.end(), 0);
  auto target_edges = y.edges();
  std::sort(target_edges.begin(), target_edges.end());
  do {
    bool ok = true;
    std::map<int, int> to;
    for (int k = 0; k < x.crossing_count(); ++k) {
      const auto& cx = x.crossings()[k];
      const auto& cy = y.crossings()[perm[k]];
      if (cx.sign != cy.sign) {
        ok = false;
        break;
      }
      to[cx.id] = cy.id;
    }
    if (!ok) continue;
    std::vector<Edge> mapped;
    for (auto e : x.edges()) {
      if (!e.from.is_leg()) e.from.index = to[e.from.index];
      if (!e.to.is_leg()) e.to.index = to[e.to.index];
      mapped.push_back(e);
    }
    std::sort(mapped.begin(), mapped.end());
    if (mapped == target_edges) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Swaps over and under at a single crossing.
inline TangleDiagram flip_crossing(const TangleDiagram& d, int id) {
  auto cs = d.crossings();
  CrossingSign old = d.crossing(id).sign;
  for (auto& c : cs)
    if (c.id == id) c.sign = negate(c.sign);
  int shift = old == CrossingSign::positive ? 1 : 3;
  std::vector<Edge> es;
  for (auto e : d.edges()) {
    if (!e.from.is_leg() && e.from.index == id) e.from.slot = (e.from.slot + shift) % 4;
    if (!e.to.is_leg() && e.to.index == id) e.to.slot = (e.to.slot + shift) % 4;
    es.push_back(e);
  }
  return TangleDiagram(d.legs(), cs, es);
}

// Gives crossings fresh ids (reversed order plus an offset).
inline TangleDiagram relabel(const TangleDiagram& d, int offset) {
  std::map<int, int> to;
  int k = d.crossing_count();
  for (const auto& c : d.crossings()) to[c.id] = offset + (--k);
  std::vector<Crossing> cs;
  for (const auto& c : d.crossings()) cs.push_back({to[c.id], c.sign});
  std::vector<Edge> es;
  for (auto e : d.edges()) {
    if (!e.from.is_leg()) e.from.index = to[e.from.index];
    if (!e.to.is_leg()) e.to.index = to[e.to.index];
    es.push_back(e);
  }
  return TangleDiagram(d.legs(), cs, es);
}

inline std::vector<Face> triangles(const TangleDiagram& d) {
  std::vector<Face> out;
  for (auto& f : interior_faces(d))
    if (f.sides.size() == 3) out.push_back(f);
  return out;
}

inline TangleDiagram single_strand() {
  return TangleDiagram({LegFlag::in, LegFlag::out}, {}, {{Port::leg(1), Port::leg(2)}});
}

// Two parallel chords: 1 -> 2 and 3 -> 4.
inline TangleDiagram two_strands() {
  return TangleDiagram({LegFlag::in, LegFlag::out, LegFlag::in, LegFlag::out}, {},
                       {{Port::leg(1), Port::leg(2)}, {Port::leg(3), Port::leg(4)}});
}

}  // namespace reid::testing
