#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reid {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LegFlag : std::uint8_t { in, out };

// +1 when the over-strand runs slot 3 -> 1 (N to S while the under-strand runs W to E).
enum class CrossingSign : std::int8_t { negative = -1, positive = 1 };

inline int to_int(CrossingSign s) { return static_cast<int>(s); }
inline CrossingSign negate(CrossingSign s) {
  return s == CrossingSign::positive ? CrossingSign::negative : CrossingSign::positive;
}

// Slots are counterclockwise: 0 = W, 1 = S, 2 = E, 3 = N.
// The under-strand enters at 0 and exits at 2.
namespace slot {
constexpr int under_in = 0;
constexpr int under_out = 2;
constexpr int over_in(CrossingSign s) { return s == CrossingSign::positive ? 3 : 1; }
constexpr int over_out(CrossingSign s) { return s == CrossingSign::positive ? 1 : 3; }
constexpr int straight(int s) { return (s + 2) % 4; }
constexpr bool is_over(int s) { return s % 2 == 1; }
constexpr bool is_in(int s, CrossingSign sign) { return s == under_in || s == over_in(sign); }
}  // namespace slot

struct Port {
  enum class Kind : std::uint8_t { leg, crossing };
  Kind kind = Kind::leg;
  int index = 0;  // leg number (1-based) or crossing id
  int slot = 0;   // unused for legs

  static Port leg(int number) { return {Kind::leg, number, 0}; }
  static Port at(int crossing_id, int s) { return {Kind::crossing, crossing_id, s}; }
  bool is_leg() const { return kind == Kind::leg; }

  friend auto operator<=>(const Port&, const Port&) = default;
};

std::string to_string(const Port& p);

struct Crossing {
  int id = 0;
  CrossingSign sign = CrossingSign::positive;
  friend auto operator<=>(const Crossing&, const Crossing&) = default;
};

// Directed edge from an out-port (interior side of an in-leg, or a crossing exit slot)
// to an in-port.
struct Edge {
  Port from;
  Port to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One side of an edge as seen from a face: forward when the face walk runs along
// the edge's direction.
struct EdgeSide {
  int edge = 0;
  bool forward = true;
  friend bool operator==(const EdgeSide&, const EdgeSide&) = default;
};

struct Face {
  std::vector<EdgeSide> sides;
  // Crossing id at the corner *after* each side, or nullopt where the walk passes
  // through the virtual boundary vertex.
  std::vector<std::optional<int>> corners;
  // Port through which the walk arrives at each corner.
  std::vector<Port> arrivals;

  bool touches_boundary() const;
};

enum class ViolationTag { port_reuse, port_unused, unknown_port, orientation_mismatch, genus, closed_component, leg_balance };

struct Violation {
  ViolationTag tag;
  std::string detail;
};

std::string to_string(ViolationTag tag);

struct Strand {
  int in_leg = 0;
  int out_leg = 0;
  std::vector<int> edges;      // edge indices in travel order
  std::vector<int> crossings;  // crossing ids in travel order
};

// Oriented tangle in a disk, stored as a planar combinatorial map. Values are
// immutable once built; all queries are pure.
class TangleDiagram {
 public:
  TangleDiagram() = default;
  TangleDiagram(std::vector<LegFlag> legs, std::vector<Crossing> crossings, std::vector<Edge> edges);

  int leg_count() const { return static_cast<int>(legs_.size()); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  const std::vector<LegFlag>& legs() const { return legs_; }
  LegFlag leg(int number) const { return legs_.at(number - 1); }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_crossing(int id) const;
  const Crossing& crossing(int id) const;
  int crossing_position(int id) const;
  int next_crossing_id() const;

  // True for in-legs and crossing exit slots.
  bool is_out_port(const Port& p) const;
  // Index of the edge using port p, or -1.
  int edge_at(const Port& p) const;
  // Port at the far end of the edge using p.
  Port opposite(const Port& p) const;

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

 private:
  std::vector<LegFlag> legs_;
  std::vector<Crossing> crossings_;  // sorted by id
  std::vector<Edge> edges_;          // sorted by source port
};

std::vector<Violation> validate(const TangleDiagram& d);
void require_valid(const TangleDiagram& d);

std::vector<Face> faces(const TangleDiagram& d);
// Faces that do not pass through the virtual boundary vertex.
std::vector<Face> interior_faces(const TangleDiagram& d);

CrossingSign crossing_sign(const TangleDiagram& d, int crossing_id);
int writhe(const TangleDiagram& d);

// Throws reid::Error on a closed component.
std::vector<Strand> strands(const TangleDiagram& d);
// out_leg of the strand starting at each in-leg, keyed by in-leg number (0 where n/a).
std::vector<int> strand_pairing(const TangleDiagram& d);

TangleDiagram mirror(const TangleDiagram& d);
TangleDiagram rotate_boundary(const TangleDiagram& d, int k);

// Deterministic string equal for two diagrams iff they are isomorphic as
// leg-labelled planar maps with identical crossing data.
std::string canonical_code(const TangleDiagram& d);

// Relabels crossings 0..k-1 in canonical discovery order.
TangleDiagram canonical_form(const TangleDiagram& d);

}  // namespace reid
