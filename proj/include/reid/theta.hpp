#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reid/codec.hpp"
#include "reid/diagram.hpp"
#include "reid/moves.hpp"

namespace reid {

enum class Side : std::uint8_t { left, right };
enum class Level : std::uint8_t { over, under };
enum class Direction : std::uint8_t { up, down };

// A vertical digon (arcs left and right, crossings top and bottom) crossed by a
// horizontal transversal running east to west.
struct ThetaParams {
  Side digon_over = Side::left;         // arc passing over at both digon crossings
  Level transversal = Level::over;      // transversal over or under both arcs
  Direction left = Direction::up;
  Direction right = Direction::up;

  std::string name() const;  // "digon-over=left transversal=over left=up right=up"
  friend auto operator<=>(const ThetaParams&, const ThetaParams&) = default;
};

struct ThetaConfig {
  ThetaParams params;
  TangleDiagram tangle;  // 6 legs, 4 crossings
  TriangleCode upper;    // triangle between the top digon crossing and the transversal
  TriangleCode lower;
  int upper_face = -1;   // indices into faces(tangle)
  int lower_face = -1;
};

class ThetaError : public Error {
 public:
  using Error::Error;
};

// The 16 configurations in parameter order. Throws ThetaError if a candidate has
// an inconsistent digon or transversal.
std::vector<ThetaConfig> enumerate_theta_configs();

// Letter pairs (upper, lower) read off the configurations.
using ThetaRelation = std::set<std::pair<Letter, Letter>>;
ThetaRelation theta_relation(const std::vector<ThetaConfig>& configs);
ThetaRelation theta_relation();

// One line per configuration: "<params> → <upper> , <lower>".
std::string theta_table(const std::vector<ThetaConfig>& configs);

// Three-step derivation of the R3 move on the upper letter x from the lower
// letter y: expand a digon below the x triangle, apply move y at the lower
// triangle, reduce the digon above it. The certificate starts at
// build_triangle(x↑), ends at its R3 image and uses basis_with(y).
Certificate factor_via_theta(const ThetaConfig& t);

}  // namespace reid
