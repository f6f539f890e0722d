#include "reid/sketch.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace reid {

namespace {

constexpr double eps = 1e-9;

double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
Point sub(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }

struct Hit {
  int strand;
  double position;  // segment index + parameter
  int crossing;     // index into raw crossings
};

struct RawCrossing {
  int a, b;  // strands
  Point dir_a, dir_b;
  Point at;
};

}  // namespace

Sketch sketch_tangle(std::span<const SketchStrand> strands, double first_leg_angle) {
  const int n = static_cast<int>(strands.size());
  std::vector<RawCrossing> raw;
  std::vector<Hit> hits;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const auto& pa = strands[a].path;
      const auto& pb = strands[b].path;
      for (std::size_t i = 0; i + 1 < pa.size(); ++i) {
        for (std::size_t j = 0; j + 1 < pb.size(); ++j) {
          Point r = sub(pa[i + 1], pa[i]);
          Point s = sub(pb[j + 1], pb[j]);
          double denom = cross(r, s);
          if (std::abs(denom) < eps) continue;
          Point qp = sub(pb[j], pa[i]);
          double t = cross(qp, s) / denom;
          double u = cross(qp, r) / denom;
          if (t <= eps || t >= 1 - eps || u <= eps || u >= 1 - eps) {
            if (t >= -eps && t <= 1 + eps && u >= -eps && u <= 1 + eps)
              throw Error("sketch: intersection at a polyline vertex");
            continue;
          }
          if (strands[a].level == strands[b].level) throw Error("sketch: crossing strands share a level");
          int k = static_cast<int>(raw.size());
          raw.push_back({a, b, r, s, {pa[i].x + t * r.x, pa[i].y + t * r.y}});
          hits.push_back({a, static_cast<double>(i) + t, k});
          hits.push_back({b, static_cast<double>(j) + u, k});
        }
      }
    }
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) {
    return std::tie(x.strand, x.position) < std::tie(y.strand, y.position);
  });

  std::vector<int> id_of(raw.size(), -1);
  int next_id = 0;
  for (const auto& h : hits)
    if (id_of[h.crossing] < 0) id_of[h.crossing] = next_id++;

  Sketch out;
  std::vector<Crossing> crossings;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    const auto& c = raw[k];
    bool a_over = strands[c.a].level > strands[c.b].level;
    Point over_dir = a_over ? c.dir_a : c.dir_b;
    Point under_dir = a_over ? c.dir_b : c.dir_a;
    CrossingSign sign = cross(under_dir, over_dir) < 0 ? CrossingSign::positive : CrossingSign::negative;
    crossings.push_back({id_of[k], sign});
    out.crossings.push_back({id_of[k], a_over ? c.a : c.b, a_over ? c.b : c.a, c.at});
  }
  std::sort(out.crossings.begin(), out.crossings.end(),
            [](const SketchCrossing& x, const SketchCrossing& y) { return x.id < y.id; });

  // Legs: polyline endpoints sorted counterclockwise from the reference direction.
  struct End {
    double angle;
    int strand;
    bool start;
  };
  std::vector<End> ends;
  for (int a = 0; a < n; ++a) {
    for (bool start : {true, false}) {
      Point p = start ? strands[a].path.front() : strands[a].path.back();
      double ang = std::atan2(p.y, p.x) - first_leg_angle;
      ang = std::fmod(ang + 4 * std::numbers::pi + 1e-7, 2 * std::numbers::pi);
      ends.push_back({ang, a, start});
    }
  }
  std::sort(ends.begin(), ends.end(), [](const End& x, const End& y) { return x.angle < y.angle; });
  std::vector<LegFlag> legs(ends.size());
  std::map<std::pair<int, bool>, int> leg_of;
  for (std::size_t i = 0; i < ends.size(); ++i) {
    legs[i] = ends[i].start ? LegFlag::in : LegFlag::out;
    leg_of[{ends[i].strand, ends[i].start}] = static_cast<int>(i) + 1;
  }

  // Ids are 0..k-1, so both lists are now indexable by id.
  std::sort(crossings.begin(), crossings.end());
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a) {
    Port current = Port::leg(leg_of[{a, true}]);
    for (const auto& h : hits) {
      if (h.strand != a) continue;
      int id = id_of[h.crossing];
      bool over = out.crossings[id].over_strand == a;
      CrossingSign sign = crossings[id].sign;
      int in = over ? slot::over_in(sign) : slot::under_in;
      int outs = over ? slot::over_out(sign) : slot::under_out;
      edges.push_back({current, Port::at(id, in)});
      current = Port::at(id, outs);
    }
    edges.push_back({current, Port::leg(leg_of[{a, false}])});
  }
  out.diagram = TangleDiagram(std::move(legs), std::move(crossings), std::move(edges));
  return out;
}

}  // namespace reid
