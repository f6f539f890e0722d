#include "reid/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

namespace reid {

SearchBounds SearchBounds::defaults_for(const TangleDiagram& start) {
  return {start.crossing_count() + 4, 24, 5'000'000};
}

std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::exhausted: return "exhausted";
    case SearchStatus::bounds_hit: return "bounds-hit";
  }
  return "?";
}

SearchResult derive(const TangleDiagram& start, const TangleDiagram& goal, const MoveSet& basis,
                    const SearchBounds& bounds) {
  if (start.legs() != goal.legs()) throw Error("leg-signature mismatch between start and goal");
  if (bounds.max_crossings <= 0 || bounds.max_depth <= 0 || bounds.max_states == 0)
    throw Error("search bounds must be positive");
  require_valid(start);
  require_valid(goal);

  struct Node {
    TangleDiagram diagram;
    int parent;
    MoveName move;
  };
  std::vector<Node> nodes;
  std::unordered_map<std::string, int> seen;
  const std::string target = canonical_code(goal);
  const bool expands = std::any_of(basis.begin(), basis.end(), [](const MoveName& m) { return m.is_r2() && m.expand; });

  auto finish = [&](int index, SearchResult r) {
    Certificate c{basis, start, {}};
    for (int i = index; i > 0; i = nodes[i].parent) c.steps.push_back({nodes[i].move, nodes[i].diagram});
    std::reverse(c.steps.begin(), c.steps.end());
    r.status = SearchStatus::found;
    r.certificate = std::move(c);
    return r;
  };

  SearchResult r;
  nodes.push_back({start, -1, {}});
  seen.emplace(canonical_code(start), 0);
  r.states = 1;
  if (seen.begin()->first == target) return finish(0, r);
  if (start.crossing_count() > bounds.max_crossings) {
    r.status = SearchStatus::bounds_hit;
    return r;
  }

  bool pruned = false;
  std::vector<int> frontier{0};
  for (int depth = 1; !frontier.empty(); ++depth) {
    if (depth > bounds.max_depth) {
      r.status = SearchStatus::bounds_hit;
      return r;
    }
    r.depth = depth;
    std::vector<int> next;
    for (int index : frontier) {
      // Copy: nodes may reallocate while we push successors.
      const TangleDiagram here = nodes[index].diagram;
      if (expands && here.crossing_count() + 2 > bounds.max_crossings) pruned = true;
      for (auto& app : enumerate_applications(here, basis, bounds.max_crossings)) {
        if (seen.contains(app.result_code)) continue;
        const int id = static_cast<int>(nodes.size());
        seen.emplace(app.result_code, id);
        nodes.push_back({std::move(app.result), index, app.move});
        r.states = nodes.size();
        if (app.result_code == target) return finish(id, r);
        if (r.states >= bounds.max_states) {
          r.status = SearchStatus::bounds_hit;
          return r;
        }
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  r.status = pruned ? SearchStatus::bounds_hit : SearchStatus::exhausted;
  return r;
}

namespace {

Verification failure(int step, std::string reason) { return {false, step, std::move(reason)}; }

}  // namespace

Verification verify_certificate(const Certificate& c) {
  if (auto v = validate(c.start); !v.empty()) return failure(0, "start diagram invalid: " + v.front().detail);
  const TangleDiagram* prev = &c.start;
  for (std::size_t k = 0; k < c.steps.size(); ++k) {
    const int step = static_cast<int>(k) + 1;
    const auto& s = c.steps[k];
    if (!c.basis.contains(s.move)) return failure(step, "basis violation: " + s.move.spelling() + " not declared");
    if (auto v = validate(s.result); !v.empty()) return failure(step, "diagram invalid: " + v.front().detail);
    if (s.result.legs() != c.start.legs()) return failure(step, "leg signature changed");
    const std::string want = canonical_code(s.result);
    bool matched = false;
    for (const auto& app : enumerate_applications(*prev, {s.move}))
      if (app.result_code == want) {
        matched = true;
        break;
      }
    if (!matched) return failure(step, s.move.spelling() + " does not produce the recorded diagram");
    prev = &s.result;
  }
  return {};
}

Verification verify_certificate(const Certificate& c, const MoveSet& basis) {
  for (const auto& m : c.basis)
    if (!basis.contains(m)) return failure(0, "basis violation: " + m.spelling() + " outside the required basis");
  return verify_certificate(c);
}

Certificate reverse_certificate(const Certificate& c) {
  Certificate out{c.basis, c.end(), {}};
  for (std::size_t k = c.steps.size(); k-- > 0;)
    out.steps.push_back({c.steps[k].move.inverse(), k == 0 ? c.start : c.steps[k - 1].result});
  return out;
}

Certificate mirror_certificate(const Certificate& c) {
  Certificate out{{}, mirror(c.start), {}};
  for (const auto& m : c.basis) out.basis.insert(mirror_move(m));
  for (const auto& s : c.steps) out.steps.push_back({mirror_move(s.move), mirror(s.result)});
  return out;
}

Certificate align_certificate(const Certificate& c, const TangleDiagram& start) {
  const std::string want = canonical_code(start);
  for (int k = 0; k < c.start.leg_count(); ++k) {
    if (canonical_code(rotate_boundary(c.start, k)) != want) continue;
    Certificate out{c.basis, rotate_boundary(c.start, k), {}};
    for (const auto& s : c.steps) out.steps.push_back({s.move, rotate_boundary(s.result, k)});
    return out;
  }
  throw Error("certificate start does not match the requested diagram under any leg rotation");
}

namespace {

// Embeds `local` at a triangle of `host` so that its start reproduces `host` and
// its end reproduces `target`.
std::optional<std::vector<CertificateStep>> embed(const TangleDiagram& host, const TriangleCode& code,
                                                  const Certificate& local, const std::string& target) {
  const std::string here = canonical_code(host);
  for (const auto& f : interior_faces(host)) {
    if (f.sides.size() != 3) continue;
    try {
      if (classify_triangle(host, f) != code) continue;
    } catch (const Error&) {
      continue;
    }
    auto region = triangle_region(host, f);
    std::vector<int> ids(region.crossings.begin(), region.crossings.end());
    std::vector<Port> boundary(region.boundary.begin(), region.boundary.end());
    for (int offset = 0; offset < 6; ++offset) {
      auto first = replace_disk(host, ids, boundary, local.start, offset);
      if (!first || canonical_code(*first) != here) continue;
      std::vector<CertificateStep> steps;
      bool ok = true;
      for (const auto& s : local.steps) {
        auto d = replace_disk(host, ids, boundary, s.result, offset);
        if (!d) {
          ok = false;
          break;
        }
        steps.push_back({s.move, std::move(*d)});
      }
      if (ok && !steps.empty() && canonical_code(steps.back().result) == target) return steps;
    }
  }
  return std::nullopt;
}

}  // namespace

Certificate splice(const Certificate& outer, const std::map<MoveName, Certificate>& dictionary, const MoveSet& basis) {
  Certificate out{basis, outer.start, {}};
  const TangleDiagram* prev = &outer.start;
  for (std::size_t k = 0; k < outer.steps.size(); ++k) {
    const auto& s = outer.steps[k];
    if (basis.contains(s.move)) {
      out.steps.push_back(s);
    } else {
      auto it = dictionary.find(s.move);
      if (it == dictionary.end()) throw Error("splice: no dictionary entry for " + s.move.spelling());
      if (!s.move.is_r3()) throw Error("splice: only R3 steps can be substituted");
      auto steps = embed(*prev, {s.move.letter, s.move.from}, it->second, canonical_code(s.result));
      if (!steps)
        throw Error("splice: embedding not found for step " + std::to_string(k + 1) + " (" + s.move.spelling() + ")");
      for (auto& x : *steps) out.steps.push_back(std::move(x));
    }
    prev = &s.result;
  }
  return out;
}

}  // namespace reid
