#include "reid/codec.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace reid {

ParseError::ParseError(int line, const std::string& what)
    : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<Line> tokenize(std::string_view text, int first_line = 1) {
  std::vector<Line> out;
  int number = first_line;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number++, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
      if (j > i) line.words.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (!line.words.empty()) out.push_back(std::move(line));
  }
  return out;
}

std::optional<int> to_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::string port_text(const Port& p) {
  if (p.is_leg()) return "b" + std::to_string(p.index);
  return "c" + std::to_string(p.index) + "." + std::to_string(p.slot);
}

std::optional<Port> parse_port(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  if (s[0] == 'b') {
    auto n = to_int(s.substr(1));
    if (!n) return std::nullopt;
    return Port::leg(*n);
  }
  if (s[0] != 'c') return std::nullopt;
  auto dot = s.find('.');
  if (dot == std::string_view::npos) return std::nullopt;
  auto id = to_int(s.substr(1, dot - 1));
  auto sl = to_int(s.substr(dot + 1));
  if (!id || !sl) return std::nullopt;
  return Port::at(*id, *sl);
}

[[noreturn]] void fail(const Line& l, const std::string& what) { throw ParseError(l.number, what); }

TangleDiagram parse_tangle_lines(const std::vector<Line>& lines, std::size_t begin, std::size_t end) {
  if (begin >= end) throw ParseError(lines.empty() ? 1 : lines.back().number, "missing tangle header");
  const Line& head = lines[begin];
  if (head.words.size() != 3 || head.words[0] != "tangle" || head.words[1] != "v1" ||
      !head.words[2].starts_with("legs="))
    fail(head, "expected 'tangle v1 legs=<2n>'");
  auto n = to_int(head.words[2].substr(5));
  if (!n || *n < 0) fail(head, "bad leg count");
  if (*n % 2 != 0) fail(head, "leg count " + std::to_string(*n) + " is odd");

  std::vector<std::optional<LegFlag>> legs(*n);
  std::map<int, int> crossing_line;
  std::vector<std::pair<Edge, const Line*>> edges;
  for (std::size_t i = begin + 1; i < end; ++i) {
    const Line& l = lines[i];
    const auto& w = l.words;
    if (w[0] == "leg") {
      if (w.size() != 3) fail(l, "expected 'leg <i> <in|out>'");
      auto k = to_int(w[1]);
      if (!k || *k < 1 || *k > *n) fail(l, "leg number out of range");
      if (legs[*k - 1]) fail(l, "leg " + std::to_string(*k) + " declared twice");
      if (w[2] == "in") legs[*k - 1] = LegFlag::in;
      else if (w[2] == "out") legs[*k - 1] = LegFlag::out;
      else fail(l, "leg flag must be 'in' or 'out'");
    } else if (w[0] == "x") {
      if (w.size() != 2) fail(l, "expected 'x <id>'");
      auto id = to_int(w[1]);
      if (!id || *id < 0) fail(l, "bad crossing id");
      if (!crossing_line.emplace(*id, l.number).second) fail(l, "crossing " + std::to_string(*id) + " declared twice");
    } else if (w[0] == "e") {
      if (w.size() != 3) fail(l, "expected 'e <port> <port>'");
      auto a = parse_port(w[1]);
      auto b = parse_port(w[2]);
      if (!a) fail(l, "bad port '" + std::string(w[1]) + "'");
      if (!b) fail(l, "bad port '" + std::string(w[2]) + "'");
      edges.push_back({{*a, *b}, &l});
    } else {
      fail(l, "unexpected '" + std::string(w[0]) + "'");
    }
  }
  std::vector<LegFlag> flags;
  for (int k = 0; k < *n; ++k) {
    if (!legs[k]) fail(head, "leg " + std::to_string(k + 1) + " not declared");
    flags.push_back(*legs[k]);
  }

  std::set<Port> used;
  std::map<int, std::optional<CrossingSign>> sign;
  for (auto& [id, _] : crossing_line) sign[id] = std::nullopt;
  for (const auto& [e, l] : edges) {
    for (const Port& p : {e.from, e.to}) {
      if (p.is_leg() ? (p.index < 1 || p.index > *n) : (!crossing_line.contains(p.index) || p.slot < 0 || p.slot > 3))
        fail(*l, "unknown port " + port_text(p));
      if (!used.insert(p).second) fail(*l, "duplicate port " + port_text(p));
    }
    if (!e.to.is_leg() && slot::is_over(e.to.slot)) {
      auto s = e.to.slot == 3 ? CrossingSign::positive : CrossingSign::negative;
      auto& cur = sign[e.to.index];
      if (cur && *cur != s) fail(*l, "crossing " + std::to_string(e.to.index) + " has two over inputs");
      cur = s;
    }
  }
  std::vector<Crossing> crossings;
  for (auto& [id, s] : sign) {
    if (!s) throw ParseError(crossing_line[id], "crossing " + std::to_string(id) + " has no over input");
    crossings.push_back({id, *s});
  }
  std::vector<Edge> es;
  for (auto& [e, _] : edges) es.push_back(e);
  TangleDiagram d(std::move(flags), std::move(crossings), std::move(es));
  auto v = validate(d);
  if (!v.empty()) throw ParseError(head.number, "invalid tangle: " + v.front().detail);
  return d;
}

}  // namespace

std::string serialize_tangle(const TangleDiagram& d) {
  std::ostringstream out;
  out << "tangle v1 legs=" << d.leg_count() << '\n';
  for (int k = 0; k < d.leg_count(); ++k)
    out << "leg " << k + 1 << (d.legs()[k] == LegFlag::in ? " in" : " out") << '\n';
  for (const auto& c : d.crossings()) out << "x " << c.id << '\n';
  auto edges = d.edges();
  std::sort(edges.begin(), edges.end());
  for (const auto& e : edges) out << "e " << port_text(e.from) << ' ' << port_text(e.to) << '\n';
  return out.str();
}

TangleDiagram parse_tangle(std::string_view text) {
  auto lines = tokenize(text);
  return parse_tangle_lines(lines, 0, lines.size());
}

std::string serialize_certificate(const Certificate& c) {
  std::ostringstream out;
  out << "cert v1\nbasis";
  for (const auto& m : c.basis) out << ' ' << m.spelling();
  out << "\nstart\n" << serialize_tangle(c.start);
  for (std::size_t k = 0; k < c.steps.size(); ++k)
    out << "step " << k + 1 << " move " << c.steps[k].move.spelling() << '\n' << serialize_tangle(c.steps[k].result);
  out << "end\n";
  return out.str();
}

Certificate parse_certificate(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "cert" || lines[0].words[1] != "v1")
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'cert v1'");
  if (lines.size() < 2 || lines[1].words[0] != "basis") throw ParseError(lines[0].number + 1, "expected 'basis' line");
  Certificate c;
  for (std::size_t i = 1; i < lines[1].words.size(); ++i) {
    auto m = MoveName::parse(lines[1].words[i]);
    if (!m) fail(lines[1], "unknown move '" + std::string(lines[1].words[i]) + "'");
    c.basis.insert(*m);
  }
  if (lines.size() < 3 || lines[2].words.size() != 1 || lines[2].words[0] != "start")
    throw ParseError(lines.size() < 3 ? lines[1].number + 1 : lines[2].number, "expected 'start'");

  auto block_end = [&](std::size_t from) {
    while (from < lines.size() && lines[from].words[0] != "step" && lines[from].words[0] != "end") ++from;
    return from;
  };
  std::size_t i = 3;
  std::size_t j = block_end(i);
  c.start = parse_tangle_lines(lines, i, j);
  i = j;
  int expected = 1;
  while (i < lines.size() && lines[i].words[0] == "step") {
    const Line& l = lines[i];
    if (l.words.size() != 4 || l.words[2] != "move") fail(l, "expected 'step <k> move <name>'");
    auto k = to_int(l.words[1]);
    if (!k) fail(l, "bad step index");
    if (*k != expected) fail(l, "step-index gap: expected step " + std::to_string(expected));
    auto m = MoveName::parse(l.words[3]);
    if (!m) fail(l, "unknown move '" + std::string(l.words[3]) + "'");
    j = block_end(i + 1);
    c.steps.push_back({*m, parse_tangle_lines(lines, i + 1, j)});
    i = j;
    ++expected;
  }
  if (i >= lines.size()) throw ParseError(lines.back().number, "missing 'end'");
  if (lines[i].words.size() != 1) fail(lines[i], "expected 'end'");
  if (i + 1 != lines.size()) fail(lines[i + 1], "text after 'end'");
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed: " + path);
}

}  // namespace reid
