#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include "reid/codec.hpp"
#include "reid/diagram.hpp"
#include "reid/moves.hpp"

namespace reid {

struct SearchBounds {
  int max_crossings = 0;
  int max_depth = 24;
  std::size_t max_states = 5'000'000;

  // start + 4 crossings, depth 24, five million states.
  static SearchBounds defaults_for(const TangleDiagram& start);
};

enum class SearchStatus { found, exhausted, bounds_hit };
std::string to_string(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<Certificate> certificate;
  std::size_t states = 0;  // distinct diagrams discovered
  int depth = 0;           // deepest level expanded
};

// Breadth-first search for a shortest derivation. `exhausted` means every
// reachable diagram was expanded without pruning; any pruning or limit gives
// `bounds_hit`. Throws Error when the leg signatures differ.
SearchResult derive(const TangleDiagram& start, const TangleDiagram& goal, const MoveSet& basis,
                    const SearchBounds& bounds);

struct Verification {
  bool ok = true;
  int step = 0;  // first failing step, 0 for the start diagram
  std::string reason;
};

// Replays every step by enumerating the applications of its move.
Verification verify_certificate(const Certificate& c);
// As above, and additionally requires c.basis to lie within `basis`.
Verification verify_certificate(const Certificate& c, const MoveSet& basis);

Certificate reverse_certificate(const Certificate& c);
// Mirrors every diagram and maps every move name accordingly.
Certificate mirror_certificate(const Certificate& c);
// Renumbers the legs of every diagram so that the start matches `start` exactly
// up to crossing labels. Throws Error when no rotation does.
Certificate align_certificate(const Certificate& c, const TangleDiagram& start);

// Replaces each R3 step outside `basis` by the matching dictionary derivation,
// embedded at the triangle the step acts on. Dictionary entries are 6-leg local
// certificates keyed by the move they replace.
Certificate splice(const Certificate& outer, const std::map<MoveName, Certificate>& dictionary, const MoveSet& basis);

}  // namespace reid
