#pragma once

#include <array>
#include <compare>
#include <climits>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "reid/diagram.hpp"

namespace reid {

// ---------------------------------------------------------------------------
// Triangle codes
// ---------------------------------------------------------------------------

enum class Letter : std::uint8_t { a, b, c, d, A, B, C, D };
enum class Flag : std::uint8_t { up, down };
enum class Arrow : std::uint8_t { east, west, north_east, north_west, south_west, south_east };

constexpr std::array<Letter, 8> all_letters{Letter::a, Letter::b, Letter::c, Letter::d,
                                            Letter::A, Letter::B, Letter::C, Letter::D};

char letter_char(Letter l);
std::optional<Letter> parse_letter(char ch);
bool is_lowercase(Letter l);
Arrow reversed(Arrow a);
std::string arrow_glyph(Arrow a);

// A triangular region of an R3 move: letter plus ↑/↓. The three arrows give the
// directions of the top (over at both crossings), middle and bottom (under at both)
// strands once the top strand is horizontal and the region sits above it (Δ).
struct TriangleCode {
  Letter letter = Letter::a;
  Flag flag = Flag::up;

  std::array<Arrow, 3> arrows() const;
  std::string name() const;   // "a↑"
  std::string ascii() const;  // "a-up"
  TriangleCode flipped() const { return {letter, flag == Flag::up ? Flag::down : Flag::up}; }

  friend auto operator<=>(const TriangleCode&, const TriangleCode&) = default;
};

// The 16 codes, ↑ then ↓ for each letter in the order a b c d A B C D.
std::array<TriangleCode, 16> all_triangle_codes();
std::optional<TriangleCode> code_from_arrows(const std::array<Arrow, 3>& arrows);
// Accepts "a-up", "a-dn", "a^", "av", "a↑", "a↓".
std::optional<TriangleCode> parse_code(std::string_view text);

// Case swap on {a,c,A,C}; case swap plus flag swap on {b,d,B,D}.
TriangleCode mirror_code(TriangleCode code);

// ---------------------------------------------------------------------------
// Move names
// ---------------------------------------------------------------------------

enum class R2Variant : std::uint8_t { par_over, par_under, anti_over, anti_under };

// The variant of a digon is read from its over-strand: "par"/"anti" by relative
// orientation of the two strands, "over" when the crossing where the over-strand
// enters the digon is positive.
struct MoveName {
  enum class Type : std::uint8_t { r2, r3 };
  Type type = Type::r2;
  R2Variant variant = R2Variant::par_over;  // r2
  bool expand = true;                       // r2
  Letter letter = Letter::a;                // r3
  Flag from = Flag::up;                     // r3: flag of the triangle the move starts from

  static MoveName r2(R2Variant v, bool expand) { return {Type::r2, v, expand, Letter::a, Flag::up}; }
  static MoveName r3(Letter l, Flag from) { return {Type::r3, R2Variant::par_over, true, l, from}; }

  bool is_r2() const { return type == Type::r2; }
  bool is_r3() const { return type == Type::r3; }
  MoveName inverse() const;
  // r2-par-over-expand, r2-anti-under-reduce, r3-a-dn (↑→↓), r3-A-up (↓→↑), ...
  std::string spelling() const;
  static std::optional<MoveName> parse(std::string_view text);

  friend auto operator<=>(const MoveName&, const MoveName&) = default;
};

using MoveSet = std::set<MoveName>;

std::vector<MoveName> all_r2_moves();
std::vector<MoveName> r3_moves(Letter l);
// R2 moves plus both directions of move `l`.
MoveSet basis_with(Letter l);
// The move performed by the mirror image of an application of `m`.
MoveName mirror_move(const MoveName& m);

// ---------------------------------------------------------------------------
// Triangles and R3
// ---------------------------------------------------------------------------

class IncoherentTriangle : public Error {
 public:
  using Error::Error;
};

// Leg convention: 1 = west end of the base, then counterclockwise: 2 lower end of
// the left side, 3 lower end of the right side, 4 east end of the base, 5 upper
// end of the left side, 6 upper end of the right side.
TangleDiagram build_triangle(TriangleCode code);

// Throws Error for a face that is not a triangle on three distinct crossings, and
// IncoherentTriangle when the three strands have no top/bottom order.
TriangleCode classify_triangle(const TangleDiagram& d, const Face& f);

// The other planar realisation of the three strands: same endpoints, same
// over-strand and sign for each pair, triangle turned upside down.
TangleDiagram r3_image(const TangleDiagram& d, const Face& f);

// Crossing ids of a triangular face and its six outside ports, counterclockwise.
struct TriangleRegion {
  std::array<int, 3> crossings;
  std::array<Port, 6> boundary;
};
TriangleRegion triangle_region(const TangleDiagram& d, const Face& f);

// Cuts out `region` and glues `patch` in: patch leg j is attached to
// boundary[(j - 1 + offset) % size]. nullopt when leg flags disagree or a closed
// component would appear.
std::optional<TangleDiagram> replace_disk(const TangleDiagram& host, const std::vector<int>& region,
                                          const std::vector<Port>& boundary, const TangleDiagram& patch,
                                          int offset = 0);

// Removes crossings through which every strand passes straight; nullopt if a
// closed component would be left behind.
std::optional<TangleDiagram> remove_crossings(const TangleDiagram& d, const std::vector<int>& ids);

// ---------------------------------------------------------------------------
// Move applications
// ---------------------------------------------------------------------------

struct MoveLocation {
  int face = 0;          // index into faces(source)
  int side_a = -1;       // R2 expand: the two sides of the face
  int side_b = -1;
  bool a_over = false;   // R2 expand: side_a's strand passes over
  friend bool operator==(const MoveLocation&, const MoveLocation&) = default;
};

struct MoveApplication {
  MoveName move;
  MoveLocation where;
  TangleDiagram result;
  std::string result_code;
};

// R2 variant of a digon face, or nullopt if the face is not a reducible digon.
std::optional<R2Variant> digon_variant(const TangleDiagram& d, const Face& f);

// Every application of an allowed move, deduplicated by outcome. Results with
// more than `max_crossings` crossings are skipped. Order: by face, then location.
std::vector<MoveApplication> enumerate_applications(const TangleDiagram& d, const MoveSet& allowed,
                                                    int max_crossings = INT_MAX);

// Re-executes `app` on `source`; throws Error if the application does not fit
// the source or reproduces a different outcome.
TangleDiagram apply(const TangleDiagram& source, const MoveApplication& app);

}  // namespace reid
