#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "port_table.hpp"
#include "reid/moves.hpp"
#include "reid/sketch.hpp"

namespace reid {

namespace {

Point arrow_vector(Arrow a) {
  const double h = std::sqrt(3.0);
  switch (a) {
    case Arrow::east: return {1, 0};
    case Arrow::west: return {-1, 0};
    case Arrow::north_east: return {0.5, h / 2};
    case Arrow::north_west: return {-0.5, h / 2};
    case Arrow::south_west: return {-0.5, -h / 2};
    case Arrow::south_east: return {0.5, -h / 2};
  }
  return {};
}

bool positive_slope(Arrow a) { return a == Arrow::north_east || a == Arrow::south_west; }

// Straight line through `anchor` along `a`, long enough to leave the picture.
// Lower ends sit at t = -3 and upper ends at t = 4 so the legs come out in the
// documented order.
SketchStrand line(Point anchor, Arrow a, int level) {
  const Point v = arrow_vector(a);
  const bool rising = v.y > 0 || (v.y == 0 && v.x > 0);
  const Point up = rising ? v : Point{-v.x, -v.y};
  const double lo = v.y == 0 ? -4 : -3;
  const double hi = 4;
  Point p0{anchor.x + lo * up.x, anchor.y + lo * up.y};
  Point p1{anchor.x + hi * up.x, anchor.y + hi * up.y};
  if (!rising) std::swap(p0, p1);
  return {{p0, p1}, level};
}

struct TriangleWalk {
  std::array<int, 3> edge;
  std::array<bool, 3> forward;
  std::array<int, 3> corner;     // crossing after side i
  std::array<Port, 3> start;     // port of side i's edge at its starting corner
  std::array<Port, 3> finish;    // port at its finishing corner
  std::array<Port, 3> arrival;
};

TriangleWalk walk_triangle(const TangleDiagram& d, const Face& f) {
  if (f.sides.size() != 3) throw Error("face is not triangular");
  TriangleWalk w{};
  for (int i = 0; i < 3; ++i) {
    if (!f.corners[i]) throw Error("triangle touches the boundary");
    w.corner[i] = *f.corners[i];
    w.edge[i] = f.sides[i].edge;
    w.forward[i] = f.sides[i].forward;
    const Edge& e = d.edges()[w.edge[i]];
    w.start[i] = w.forward[i] ? e.from : e.to;
    w.finish[i] = w.forward[i] ? e.to : e.from;
    w.arrival[i] = f.arrivals[i];
  }
  if (w.corner[0] == w.corner[1] || w.corner[1] == w.corner[2] || w.corner[0] == w.corner[2])
    throw Error("triangle corners are not distinct crossings");
  return w;
}

}  // namespace

TangleDiagram build_triangle(TriangleCode code) {
  auto arrows = code.arrows();
  const bool middle_left = positive_slope(arrows[1]);
  std::array<SketchStrand, 3> strands{
      line({0, 0}, arrows[0], 3),
      line({middle_left ? -1.0 : 1.0, 0}, arrows[1], 2),
      line({middle_left ? 1.0 : -1.0, 0}, arrows[2], 1),
  };
  return sketch_tangle(strands, std::numbers::pi).diagram;
}

TriangleCode classify_triangle(const TangleDiagram& d, const Face& f) {
  auto w = walk_triangle(d, f);
  int top = -1, middle = -1, bottom = -1;
  for (int i = 0; i < 3; ++i) {
    bool a = slot::is_over(w.start[i].slot);
    bool b = slot::is_over(w.finish[i].slot);
    if (a && b) top = i;
    else if (!a && !b) bottom = i;
    else middle = i;
  }
  if (top < 0 || bottom < 0 || middle < 0) throw IncoherentTriangle("incoherent triangle, no R3 applies");

  // The counterclockwise walk runs along the base west to east, up the right side
  // (north-west) and down the left side (south-west).
  auto arrow = [&](int i) {
    int rel = (i - top + 3) % 3;
    if (rel == 0) return w.forward[i] ? Arrow::east : Arrow::west;
    if (rel == 1) return w.forward[i] ? Arrow::north_west : Arrow::south_east;
    return w.forward[i] ? Arrow::south_west : Arrow::north_east;
  };
  auto code = code_from_arrows({arrow(top), arrow(middle), arrow(bottom)});
  if (!code) throw Error("triangle arrows match no table row");
  return *code;
}

TriangleRegion triangle_region(const TangleDiagram& d, const Face& f) {
  auto w = walk_triangle(d, f);
  TriangleRegion r{};
  for (int i = 0; i < 3; ++i) {
    r.crossings[i] = w.corner[i];
    int s = w.arrival[i].slot;
    r.boundary[2 * i] = Port::at(w.corner[i], (s + 1) % 4);
    r.boundary[2 * i + 1] = Port::at(w.corner[i], (s + 2) % 4);
  }
  return r;
}

TangleDiagram r3_image(const TangleDiagram& d, const Face& f) {
  classify_triangle(d, f);
  auto w = walk_triangle(d, f);
  auto sign_of = [&](int id) { return d.crossing(id).sign; };
  auto partner = [](Port p) { return Port::at(p.index, slot::straight(p.slot)); };

  // Side i runs from corner[i-1] to corner[i]. New crossing j pairs sides j and
  // j+1 (as corner[j] did) but picks up their far outside ends: side j's end at
  // corner[j-1] and side j+1's end at corner[j+1].
  std::map<Port, Port> moved;
  std::array<Port, 3> inner_at_new{};      // side j's inner port at new crossing j
  std::array<Port, 3> inner_at_prev{};     // side j's inner port at new crossing j-1
  for (int j = 0; j < 3; ++j) {
    const int id = w.corner[j];
    const CrossingSign sg = sign_of(id);
    auto place = [&](Port old_ext, bool over) {
      bool entering = slot::is_in(old_ext.slot, sign_of(old_ext.index));
      int s = entering ? (over ? slot::over_in(sg) : slot::under_in) : (over ? slot::over_out(sg) : slot::under_out);
      moved[old_ext] = Port::at(id, s);
      return Port::at(id, slot::straight(s));
    };
    const int next = (j + 1) % 3;
    inner_at_new[j] = place(partner(w.start[j]), slot::is_over(w.finish[j].slot));
    inner_at_prev[next] = place(partner(w.finish[next]), slot::is_over(w.start[next].slot));
  }

  std::vector<Edge> edges;
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e) {
    if (e == w.edge[0] || e == w.edge[1] || e == w.edge[2]) continue;
    Edge copy = d.edges()[e];
    if (auto it = moved.find(copy.from); it != moved.end()) copy.from = it->second;
    if (auto it = moved.find(copy.to); it != moved.end()) copy.to = it->second;
    edges.push_back(copy);
  }
  for (int j = 0; j < 3; ++j) {
    Port a = inner_at_new[j];
    Port b = inner_at_prev[j];
    if (slot::is_in(a.slot, sign_of(a.index))) std::swap(a, b);
    edges.push_back({a, b});
  }
  return TangleDiagram(d.legs(), d.crossings(), std::move(edges));
}

std::optional<TangleDiagram> remove_crossings(const TangleDiagram& d, const std::vector<int>& ids) {
  detail::PortTable t(d);
  auto removed = [&](int q) { return q >= t.legs() && std::find(ids.begin(), ids.end(), t.port(q).index) != ids.end(); };
  std::vector<char> used(d.edges().size(), 0);
  std::vector<Edge> edges;
  for (int p = 0; p < t.size(); ++p) {
    if (!t.is_out(p) || removed(p)) continue;
    used[t.edge_of(p)] = 1;
    int q = t.opposite(p);
    while (removed(q)) {
      int r = t.straight(q);
      used[t.edge_of(r)] = 1;
      q = t.opposite(r);
    }
    edges.push_back({t.port(p), t.port(q)});
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) return std::nullopt;
  std::vector<Crossing> cs;
  for (const auto& c : d.crossings())
    if (std::find(ids.begin(), ids.end(), c.id) == ids.end()) cs.push_back(c);
  return TangleDiagram(d.legs(), std::move(cs), std::move(edges));
}

std::optional<TangleDiagram> replace_disk(const TangleDiagram& host, const std::vector<int>& region,
                                          const std::vector<Port>& boundary, const TangleDiagram& patch,
                                          int offset) {
  const int m = static_cast<int>(boundary.size());
  if (patch.leg_count() != m || m == 0) return std::nullopt;
  detail::PortTable th(host);
  detail::PortTable tp(patch);
  auto in_region = [&](int q) {
    return q >= th.legs() && std::find(region.begin(), region.end(), th.port(q).index) != region.end();
  };

  // patch leg j (0-based) <-> boundary[(j + offset) % m]
  std::vector<int> leg_of_host(th.size(), -1);
  for (int j = 0; j < m; ++j) {
    int b = th.dense(boundary[(j + offset) % m]);
    if (b < 0) return std::nullopt;
    bool enters = !th.is_out(b);
    if (enters != (patch.legs()[j] == LegFlag::in)) return std::nullopt;
    leg_of_host[b] = j;
  }

  const int base = host.next_crossing_id();
  std::map<int, int> fresh;
  for (int k = 0; k < patch.crossing_count(); ++k) fresh[patch.crossings()[k].id] = base + k;

  const int guard = th.size() + tp.size() + 4;
  // Follows a strand from a host in-port (or a patch in-port) to the first port of
  // the glued diagram.
  auto follow = [&](int q, bool in_patch) -> std::optional<Port> {
    for (int step = 0; step < guard; ++step) {
      if (!in_patch) {
        if (!in_region(q)) return th.port(q);
        int j = leg_of_host[q];
        if (j < 0) return std::nullopt;
        q = tp.opposite(j);
        in_patch = true;
      } else {
        if (q >= tp.legs()) {
          Port p = tp.port(q);
          return Port::at(fresh.at(p.index), p.slot);
        }
        int b = th.dense(boundary[(q + offset) % m]);
        q = th.opposite(b);
        in_patch = false;
      }
    }
    return std::nullopt;
  };

  std::vector<Edge> edges;
  for (int p = 0; p < th.size(); ++p) {
    if (!th.is_out(p) || in_region(p)) continue;
    auto to = follow(th.opposite(p), false);
    if (!to) return std::nullopt;
    edges.push_back({th.port(p), *to});
  }
  for (int p = tp.legs(); p < tp.size(); ++p) {
    if (!tp.is_out(p)) continue;
    auto to = follow(tp.opposite(p), true);
    if (!to) return std::nullopt;
    Port from = tp.port(p);
    edges.push_back({Port::at(fresh.at(from.index), from.slot), *to});
  }
  std::vector<Crossing> cs;
  for (const auto& c : host.crossings())
    if (std::find(region.begin(), region.end(), c.id) == region.end()) cs.push_back(c);
  for (const auto& c : patch.crossings()) cs.push_back({fresh.at(c.id), c.sign});
  TangleDiagram out(host.legs(), std::move(cs), std::move(edges));
  if (!validate(out).empty()) return std::nullopt;
  return out;
}

}  // namespace reid
