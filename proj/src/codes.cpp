#include <algorithm>
#include <cctype>

#include "reid/moves.hpp"

namespace reid {

namespace {

using enum Arrow;

// ↑ rows of the encoding table; each ↓ row is the arrow-wise reversal.
constexpr std::array<std::array<Arrow, 3>, 8> up_rows{{
    {east, north_east, north_west},  // a
    {east, north_west, north_east},  // b
    {east, south_west, north_west},  // c
    {east, south_east, north_east},  // d
    {east, south_east, south_west},  // A
    {east, north_east, south_east},  // B
    {east, north_west, south_west},  // C
    {east, south_west, south_east},  // D
}};

}  // namespace

char letter_char(Letter l) { return "abcdABCD"[static_cast<int>(l)]; }

std::optional<Letter> parse_letter(char ch) {
  static constexpr std::string_view names = "abcdABCD";
  auto pos = names.find(ch);
  if (pos == std::string_view::npos) return std::nullopt;
  return static_cast<Letter>(pos);
}

bool is_lowercase(Letter l) { return static_cast<int>(l) < 4; }

Arrow reversed(Arrow a) {
  switch (a) {
    case east: return west;
    case west: return east;
    case north_east: return south_west;
    case south_west: return north_east;
    case north_west: return south_east;
    case south_east: return north_west;
  }
  return a;
}

std::string arrow_glyph(Arrow a) {
  switch (a) {
    case east: return "→";
    case west: return "←";
    case north_east: return "↗";
    case north_west: return "↖";
    case south_west: return "↙";
    case south_east: return "↘";
  }
  return "?";
}

std::array<Arrow, 3> TriangleCode::arrows() const {
  auto row = up_rows[static_cast<int>(letter)];
  if (flag == Flag::down)
    for (auto& a : row) a = reversed(a);
  return row;
}

std::string TriangleCode::name() const {
  return std::string(1, letter_char(letter)) + (flag == Flag::up ? "↑" : "↓");
}

std::string TriangleCode::ascii() const {
  return std::string(1, letter_char(letter)) + (flag == Flag::up ? "-up" : "-dn");
}

std::array<TriangleCode, 16> all_triangle_codes() {
  std::array<TriangleCode, 16> out;
  for (int i = 0; i < 8; ++i) {
    out[2 * i] = {all_letters[i], Flag::up};
    out[2 * i + 1] = {all_letters[i], Flag::down};
  }
  return out;
}

std::optional<TriangleCode> code_from_arrows(const std::array<Arrow, 3>& arrows) {
  for (auto code : all_triangle_codes())
    if (code.arrows() == arrows) return code;
  return std::nullopt;
}

std::optional<TriangleCode> parse_code(std::string_view text) {
  if (text.empty()) return std::nullopt;
  auto letter = parse_letter(text.front());
  if (!letter) return std::nullopt;
  auto rest = text.substr(1);
  if (rest == "-up" || rest == "^" || rest == "↑") return TriangleCode{*letter, Flag::up};
  if (rest == "-dn" || rest == "v" || rest == "↓") return TriangleCode{*letter, Flag::down};
  return std::nullopt;
}

TriangleCode mirror_code(TriangleCode code) {
  int i = static_cast<int>(code.letter);
  TriangleCode out{static_cast<Letter>((i + 4) % 8), code.flag};
  char base = static_cast<char>(std::tolower(letter_char(code.letter)));
  if (base == 'b' || base == 'd') out.flag = code.flag == Flag::up ? Flag::down : Flag::up;
  return out;
}

// ---------------------------------------------------------------------------

MoveName MoveName::inverse() const {
  MoveName m = *this;
  if (is_r2())
    m.expand = !expand;
  else
    m.from = from == Flag::up ? Flag::down : Flag::up;
  return m;
}

namespace {
constexpr std::array<std::string_view, 4> variant_names{"par-over", "par-under", "anti-over", "anti-under"};
}

std::string MoveName::spelling() const {
  if (is_r2())
    return "r2-" + std::string(variant_names[static_cast<int>(variant)]) + (expand ? "-expand" : "-reduce");
  // Named by where the move goes: "dn" is ↑ → ↓.
  return std::string("r3-") + letter_char(letter) + (from == Flag::up ? "-dn" : "-up");
}

std::optional<MoveName> MoveName::parse(std::string_view text) {
  if (text.starts_with("r3-") && text.size() == 7) {
    auto l = parse_letter(text[3]);
    auto dir = text.substr(5);
    if (!l) return std::nullopt;
    if (dir == "dn") return r3(*l, Flag::up);
    if (dir == "up") return r3(*l, Flag::down);
    return std::nullopt;
  }
  if (!text.starts_with("r2-")) return std::nullopt;
  for (int v = 0; v < 4; ++v) {
    std::string stem = "r2-" + std::string(variant_names[v]);
    if (text == stem + "-expand") return r2(static_cast<R2Variant>(v), true);
    if (text == stem + "-reduce") return r2(static_cast<R2Variant>(v), false);
  }
  return std::nullopt;
}

std::vector<MoveName> all_r2_moves() {
  std::vector<MoveName> out;
  for (int v = 0; v < 4; ++v)
    for (bool e : {true, false}) out.push_back(MoveName::r2(static_cast<R2Variant>(v), e));
  return out;
}

std::vector<MoveName> r3_moves(Letter l) { return {MoveName::r3(l, Flag::up), MoveName::r3(l, Flag::down)}; }

MoveSet basis_with(Letter l) {
  MoveSet s;
  for (const auto& m : all_r2_moves()) s.insert(m);
  for (const auto& m : r3_moves(l)) s.insert(m);
  return s;
}

MoveName mirror_move(const MoveName& m) {
  if (m.is_r2()) {
    MoveName out = m;
    // Antiparallel digons keep their rotation sense under mirroring.
    if (m.variant == R2Variant::par_over) out.variant = R2Variant::par_under;
    else if (m.variant == R2Variant::par_under) out.variant = R2Variant::par_over;
    return out;
  }
  auto image = mirror_code({m.letter, m.from});
  return MoveName::r3(image.letter, image.flag);
}

}  // namespace reid
