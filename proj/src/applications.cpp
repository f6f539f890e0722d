#include <unordered_set>

#include "reid/moves.hpp"

namespace reid {

namespace {

struct Vec {
  int x, y;
};

CrossingSign sign_from(Vec under, Vec over) {
  return under.x * over.y - under.y * over.x < 0 ? CrossingSign::positive : CrossingSign::negative;
}

R2Variant variant_of(bool parallel, CrossingSign entry) {
  if (parallel) return entry == CrossingSign::positive ? R2Variant::par_over : R2Variant::par_under;
  return entry == CrossingSign::positive ? R2Variant::anti_over : R2Variant::anti_under;
}

// Finger move of side `ia` across side `ib` of a face. In a local frame the walk
// runs east along side a (face above) and west along side b (face below); the
// finger leaves side a northwards, crosses side b at X (west) and returns at Y
// (east).
struct Expansion {
  int a1, a2;  // +1 when the walk follows the edge direction
  bool a_over;
  CrossingSign sign_x, sign_y;
  bool x_first_on_1, x_first_on_2;

  Expansion(bool forward_a, bool forward_b, bool over) : a1(forward_a ? 1 : -1), a2(forward_b ? 1 : -1), a_over(over) {
    Vec d1x{0, a1}, d1y{0, -a1}, d2{-a2, 0};
    sign_x = a_over ? sign_from(d2, d1x) : sign_from(d1x, d2);
    sign_y = a_over ? sign_from(d2, d1y) : sign_from(d1y, d2);
    x_first_on_1 = a1 > 0;
    x_first_on_2 = a2 < 0;
  }

  R2Variant variant() const {
    bool parallel = x_first_on_1 == x_first_on_2;
    bool over_enters_at_x = a_over ? x_first_on_1 : x_first_on_2;
    return variant_of(parallel, over_enters_at_x ? sign_x : sign_y);
  }
};

std::optional<TangleDiagram> expand(const TangleDiagram& d, const Face& f, int ia, int ib, bool a_over) {
  const EdgeSide sa = f.sides[ia];
  const EdgeSide sb = f.sides[ib];
  if (sa.edge == sb.edge) return std::nullopt;
  Expansion ex(sa.forward, sb.forward, a_over);
  const int x = d.next_crossing_id();
  const int y = x + 1;
  auto slots_for = [](bool over, CrossingSign s) {
    return over ? std::pair{slot::over_in(s), slot::over_out(s)} : std::pair{slot::under_in, slot::under_out};
  };

  std::vector<Edge> edges;
  edges.reserve(d.edges().size() + 4);
  for (int e = 0; e < static_cast<int>(d.edges().size()); ++e)
    if (e != sa.edge && e != sb.edge) edges.push_back(d.edges()[e]);

  auto split = [&](const Edge& old, bool over, bool x_first) {
    int c1 = x_first ? x : y;
    int c2 = x_first ? y : x;
    auto [in1, out1] = slots_for(over, c1 == x ? ex.sign_x : ex.sign_y);
    auto [in2, out2] = slots_for(over, c2 == x ? ex.sign_x : ex.sign_y);
    edges.push_back({old.from, Port::at(c1, in1)});
    edges.push_back({Port::at(c1, out1), Port::at(c2, in2)});
    edges.push_back({Port::at(c2, out2), old.to});
  };
  split(d.edges()[sa.edge], a_over, ex.x_first_on_1);
  split(d.edges()[sb.edge], !a_over, ex.x_first_on_2);

  std::vector<Crossing> cs = d.crossings();
  cs.push_back({x, ex.sign_x});
  cs.push_back({y, ex.sign_y});
  return TangleDiagram(d.legs(), std::move(cs), std::move(edges));
}

std::optional<TangleDiagram> execute(const TangleDiagram& d, const std::vector<Face>& fs, const MoveName& m,
                                     const MoveLocation& at) {
  if (at.face < 0 || at.face >= static_cast<int>(fs.size())) return std::nullopt;
  const Face& f = fs[at.face];
  if (m.is_r3()) {
    try {
      auto code = classify_triangle(d, f);
      if (code.letter != m.letter || code.flag != m.from) return std::nullopt;
    } catch (const Error&) {
      return std::nullopt;
    }
    return r3_image(d, f);
  }
  if (!m.expand) {
    auto v = digon_variant(d, f);
    if (!v || *v != m.variant) return std::nullopt;
    return remove_crossings(d, {*f.corners[0], *f.corners[1]});
  }
  const int n = static_cast<int>(f.sides.size());
  if (at.side_a < 0 || at.side_a >= n || at.side_b < 0 || at.side_b >= n || at.side_a == at.side_b) return std::nullopt;
  Expansion ex(f.sides[at.side_a].forward, f.sides[at.side_b].forward, at.a_over);
  if (ex.variant() != m.variant) return std::nullopt;
  return expand(d, f, at.side_a, at.side_b, at.a_over);
}

}  // namespace

std::optional<R2Variant> digon_variant(const TangleDiagram& d, const Face& f) {
  if (f.sides.size() != 2 || !f.corners[0] || !f.corners[1] || *f.corners[0] == *f.corners[1]) return std::nullopt;
  const Edge& ea = d.edges()[f.sides[0].edge];
  const Edge& eb = d.edges()[f.sides[1].edge];
  auto over_both = [](const Edge& e) { return slot::is_over(e.from.slot) && slot::is_over(e.to.slot); };
  auto under_both = [](const Edge& e) { return !slot::is_over(e.from.slot) && !slot::is_over(e.to.slot); };
  const Edge* over = nullptr;
  const Edge* under = nullptr;
  if (over_both(ea) && under_both(eb)) {
    over = &ea;
    under = &eb;
  } else if (over_both(eb) && under_both(ea)) {
    over = &eb;
    under = &ea;
  } else {
    return std::nullopt;
  }
  bool parallel = over->from.index == under->from.index;
  return variant_of(parallel, d.crossing(over->from.index).sign);
}

std::vector<MoveApplication> enumerate_applications(const TangleDiagram& d, const MoveSet& allowed,
                                                    int max_crossings) {
  bool any_reduce = false, any_expand = false, any_r3 = false;
  for (const auto& m : allowed) {
    if (m.is_r3()) any_r3 = true;
    else if (m.expand) any_expand = true;
    else any_reduce = true;
  }
  const auto fs = faces(d);
  std::vector<MoveApplication> out;
  std::unordered_set<std::string> seen;
  auto push = [&](const MoveName& m, const MoveLocation& at, std::optional<TangleDiagram> result) {
    if (!result || result->crossing_count() > max_crossings) return;
    auto code = canonical_code(*result);
    if (!seen.insert(code).second) return;
    out.push_back({m, at, std::move(*result), std::move(code)});
  };

  for (int fi = 0; fi < static_cast<int>(fs.size()); ++fi) {
    const Face& f = fs[fi];
    const int n = static_cast<int>(f.sides.size());
    if (any_reduce && n == 2) {
      if (auto v = digon_variant(d, f)) {
        auto m = MoveName::r2(*v, false);
        if (allowed.contains(m)) push(m, {fi}, remove_crossings(d, {*f.corners[0], *f.corners[1]}));
      }
    }
    if (any_r3 && n == 3 && !f.touches_boundary()) {
      try {
        auto code = classify_triangle(d, f);
        auto m = MoveName::r3(code.letter, code.flag);
        if (allowed.contains(m)) push(m, {fi}, r3_image(d, f));
      } catch (const Error&) {
        // Incoherent or degenerate triangles admit no R3.
      }
    }
    if (any_expand && d.crossing_count() + 2 <= max_crossings) {
      for (int ia = 0; ia < n; ++ia) {
        for (int ib = 0; ib < n; ++ib) {
          if (ia == ib || f.sides[ia].edge == f.sides[ib].edge) continue;
          for (bool a_over : {false, true}) {
            Expansion ex(f.sides[ia].forward, f.sides[ib].forward, a_over);
            auto m = MoveName::r2(ex.variant(), true);
            if (!allowed.contains(m)) continue;
            push(m, {fi, ia, ib, a_over}, expand(d, f, ia, ib, a_over));
          }
        }
      }
    }
  }
  return out;
}

TangleDiagram apply(const TangleDiagram& source, const MoveApplication& app) {
  auto result = execute(source, faces(source), app.move, app.where);
  if (!result) throw Error("stale application: " + app.move.spelling() + " does not fit the source diagram");
  if (canonical_code(*result) != app.result_code)
    throw Error("stale application: " + app.move.spelling() + " reproduces a different diagram");
  return *result;
}

}  // namespace reid
