#include "reid/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <numeric>

#include "port_table.hpp"

namespace reid {

std::string to_string(const Port& p) {
  if (p.is_leg()) return "b" + std::to_string(p.index);
  return "c" + std::to_string(p.index) + "." + std::to_string(p.slot);
}

std::string to_string(ViolationTag tag) {
  switch (tag) {
    case ViolationTag::port_reuse: return "port-reuse";
    case ViolationTag::port_unused: return "port-unused";
    case ViolationTag::unknown_port: return "unknown-port";
    case ViolationTag::orientation_mismatch: return "orientation-mismatch";
    case ViolationTag::genus: return "genus";
    case ViolationTag::closed_component: return "closed-component";
    case ViolationTag::leg_balance: return "leg-balance";
  }
  return "?";
}

bool Face::touches_boundary() const {
  return std::any_of(corners.begin(), corners.end(), [](const auto& c) { return !c.has_value(); });
}

TangleDiagram::TangleDiagram(std::vector<LegFlag> legs, std::vector<Crossing> crossings, std::vector<Edge> edges)
    : legs_(std::move(legs)), crossings_(std::move(crossings)), edges_(std::move(edges)) {
  std::sort(crossings_.begin(), crossings_.end());
  std::sort(edges_.begin(), edges_.end());
}

bool TangleDiagram::has_crossing(int id) const { return crossing_position(id) >= 0; }

int TangleDiagram::crossing_position(int id) const {
  auto it = std::lower_bound(crossings_.begin(), crossings_.end(), id,
                             [](const Crossing& c, int v) { return c.id < v; });
  if (it == crossings_.end() || it->id != id) return -1;
  return static_cast<int>(it - crossings_.begin());
}

const Crossing& TangleDiagram::crossing(int id) const {
  int pos = crossing_position(id);
  if (pos < 0) throw Error("unknown crossing id " + std::to_string(id));
  return crossings_[pos];
}

int TangleDiagram::next_crossing_id() const { return crossings_.empty() ? 0 : crossings_.back().id + 1; }

bool TangleDiagram::is_out_port(const Port& p) const {
  if (p.is_leg()) return p.index >= 1 && p.index <= leg_count() && leg(p.index) == LegFlag::in;
  return !slot::is_in(p.slot, crossing(p.index).sign);
}

int TangleDiagram::edge_at(const Port& p) const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].from == p || edges_[i].to == p) return static_cast<int>(i);
  return -1;
}

Port TangleDiagram::opposite(const Port& p) const {
  int e = edge_at(p);
  if (e < 0) throw Error("port " + to_string(p) + " is not used by any edge");
  return edges_[e].from == p ? edges_[e].to : edges_[e].from;
}

namespace detail {

PortTable::PortTable(const TangleDiagram& d) : d_(&d), legs_(d.leg_count()) {
  const int n = legs_ + 4 * d.crossing_count();
  ids_.reserve(d.crossing_count());
  for (const auto& c : d.crossings()) ids_.push_back(c.id);
  edge_of_.assign(n, -1);
  uses_.assign(n, 0);
  far_.assign(n, -1);
  out_.assign(n, false);
  for (int i = 0; i < legs_; ++i) out_[i] = d.legs()[i] == LegFlag::in;
  for (int k = 0; k < d.crossing_count(); ++k)
    for (int s = 0; s < 4; ++s) out_[legs_ + 4 * k + s] = !slot::is_in(s, d.crossings()[k].sign);
  const auto& edges = d.edges();
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    int a = dense(edges[e].from);
    int b = dense(edges[e].to);
    if (a >= 0) {
      ++uses_[a];
      edge_of_[a] = e;
      far_[a] = b;
    }
    if (b >= 0) {
      ++uses_[b];
      edge_of_[b] = e;
      far_[b] = a;
    }
  }
}

int PortTable::dense(const Port& p) const {
  if (p.is_leg()) return (p.index >= 1 && p.index <= legs_) ? p.index - 1 : -1;
  if (p.slot < 0 || p.slot > 3) return -1;
  auto it = std::lower_bound(ids_.begin(), ids_.end(), p.index);
  if (it == ids_.end() || *it != p.index) return -1;
  return legs_ + 4 * static_cast<int>(it - ids_.begin()) + p.slot;
}

Port PortTable::port(int dense) const {
  if (dense < legs_) return Port::leg(dense + 1);
  int k = (dense - legs_) / 4;
  return Port::at(ids_[k], (dense - legs_) % 4);
}

int PortTable::opposite(int dense) const { return far_[dense]; }

int PortTable::clockwise_next(int dense) const {
  // Seen from the sphere, the boundary vertex has the legs in clockwise order.
  if (dense < legs_) return (dense + 1) % legs_;
  int base = legs_ + ((dense - legs_) & ~3);
  return base + ((dense - legs_ + 3) & 3);
}

}  // namespace detail

namespace {

using detail::PortTable;

std::vector<Face> walk_faces(const TangleDiagram& d, const PortTable& t) {
  std::vector<Face> out;
  std::vector<char> seen(t.size(), 0);
  for (int start = 0; start < t.size(); ++start) {
    if (seen[start] || t.edge_of(start) < 0) continue;
    Face f;
    int p = start;
    while (!seen[p]) {
      seen[p] = 1;
      int e = t.edge_of(p);
      int q = t.opposite(p);
      f.sides.push_back({e, t.port(p) == d.edges()[e].from});
      Port arrival = t.port(q);
      f.arrivals.push_back(arrival);
      if (arrival.is_leg())
        f.corners.push_back(std::nullopt);
      else
        f.corners.push_back(arrival.index);
      p = t.clockwise_next(q);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Violation> structural_violations(const TangleDiagram& d, const PortTable& t) {
  std::vector<Violation> v;
  for (std::size_t i = 1; i < d.crossings().size(); ++i)
    if (d.crossings()[i].id == d.crossings()[i - 1].id)
      v.push_back({ViolationTag::port_reuse, "duplicate crossing id " + std::to_string(d.crossings()[i].id)});
  for (const auto& e : d.edges()) {
    int a = t.dense(e.from);
    int b = t.dense(e.to);
    if (a < 0) v.push_back({ViolationTag::unknown_port, to_string(e.from)});
    if (b < 0) v.push_back({ViolationTag::unknown_port, to_string(e.to)});
    if (a >= 0 && !t.is_out(a))
      v.push_back({ViolationTag::orientation_mismatch, "edge starts at in-port " + to_string(e.from)});
    if (b >= 0 && t.is_out(b))
      v.push_back({ViolationTag::orientation_mismatch, "edge ends at out-port " + to_string(e.to)});
  }
  for (int p = 0; p < t.size(); ++p) {
    if (t.use_count(p) > 1) v.push_back({ViolationTag::port_reuse, to_string(t.port(p))});
    if (t.use_count(p) == 0) v.push_back({ViolationTag::port_unused, to_string(t.port(p))});
  }
  return v;
}

}  // namespace

std::vector<Violation> validate(const TangleDiagram& d) {
  std::vector<Violation> v;
  if (d.leg_count() % 2 != 0) v.push_back({ViolationTag::leg_balance, "odd number of legs"});
  auto ins = std::count(d.legs().begin(), d.legs().end(), LegFlag::in);
  if (2 * ins != d.leg_count()) v.push_back({ViolationTag::leg_balance, "in-legs and out-legs differ in number"});

  PortTable t(d);
  auto structural = structural_violations(d, t);
  v.insert(v.end(), structural.begin(), structural.end());
  if (!structural.empty()) return v;

  // Follow strands from every in-leg; anything left over is a closed loop.
  std::vector<char> used(d.edges().size(), 0);
  for (int leg = 0; leg < d.leg_count(); ++leg) {
    if (!t.is_out(leg)) continue;
    int p = leg;
    while (true) {
      used[t.edge_of(p)] = 1;
      int q = t.opposite(p);
      if (q < t.legs()) break;
      p = t.straight(q);
    }
  }
  if (std::find(used.begin(), used.end(), 0) != used.end())
    v.push_back({ViolationTag::closed_component, "edges not reachable from any in-leg"});

  if (d.leg_count() > 0 || d.crossing_count() > 0) {
    const long vertices = d.crossing_count() + 1;
    const long edges = static_cast<long>(d.edges().size());
    const long fcount = static_cast<long>(walk_faces(d, t).size());
    if (vertices - edges + fcount != 2)
      v.push_back({ViolationTag::genus, "v - e + f = " + std::to_string(vertices - edges + fcount)});
  }
  return v;
}

void require_valid(const TangleDiagram& d) {
  auto v = validate(d);
  if (!v.empty()) throw Error("invalid diagram: " + to_string(v.front().tag) + " (" + v.front().detail + ")");
}

std::vector<Face> faces(const TangleDiagram& d) {
  PortTable t(d);
  return walk_faces(d, t);
}

std::vector<Face> interior_faces(const TangleDiagram& d) {
  auto all = faces(d);
  std::vector<Face> out;
  for (auto& f : all)
    if (!f.touches_boundary()) out.push_back(std::move(f));
  return out;
}

CrossingSign crossing_sign(const TangleDiagram& d, int crossing_id) { return d.crossing(crossing_id).sign; }

int writhe(const TangleDiagram& d) {
  int w = 0;
  for (const auto& c : d.crossings()) w += to_int(c.sign);
  return w;
}

std::vector<Strand> strands(const TangleDiagram& d) {
  PortTable t(d);
  std::vector<Strand> out;
  std::vector<char> used(d.edges().size(), 0);
  for (int leg = 0; leg < d.leg_count(); ++leg) {
    if (!t.is_out(leg)) continue;
    Strand s;
    s.in_leg = leg + 1;
    int p = leg;
    for (std::size_t guard = 0; guard <= d.edges().size(); ++guard) {
      int e = t.edge_of(p);
      if (e < 0) throw Error("dangling port " + to_string(t.port(p)));
      used[e] = 1;
      s.edges.push_back(e);
      int q = t.opposite(p);
      if (q < t.legs()) {
        s.out_leg = q + 1;
        break;
      }
      s.crossings.push_back(t.port(q).index);
      p = t.straight(q);
    }
    out.push_back(std::move(s));
  }
  if (std::find(used.begin(), used.end(), 0) != used.end()) throw Error("closed component found");
  return out;
}

std::vector<int> strand_pairing(const TangleDiagram& d) {
  std::vector<int> pairing(d.leg_count() + 1, 0);
  for (const auto& s : strands(d)) pairing[s.in_leg] = s.out_leg;
  return pairing;
}

TangleDiagram mirror(const TangleDiagram& d) {
  std::vector<Crossing> cs = d.crossings();
  for (auto& c : cs) c.sign = negate(c.sign);
  auto remap = [&](Port p) {
    if (p.is_leg()) return p;
    int shift = d.crossing(p.index).sign == CrossingSign::positive ? 1 : 3;
    p.slot = (p.slot + shift) % 4;
    return p;
  };
  std::vector<Edge> es;
  es.reserve(d.edges().size());
  for (const auto& e : d.edges()) es.push_back({remap(e.from), remap(e.to)});
  return TangleDiagram(d.legs(), std::move(cs), std::move(es));
}

TangleDiagram rotate_boundary(const TangleDiagram& d, int k) {
  const int n = d.leg_count();
  if (n == 0) return d;
  k = ((k % n) + n) % n;
  auto relabel = [&](Port p) {
    if (p.is_leg()) p.index = (p.index - 1 + k) % n + 1;
    return p;
  };
  std::vector<LegFlag> legs(n);
  for (int i = 0; i < n; ++i) legs[(i + k) % n] = d.legs()[i];
  std::vector<Edge> es;
  es.reserve(d.edges().size());
  for (const auto& e : d.edges()) es.push_back({relabel(e.from), relabel(e.to)});
  return TangleDiagram(std::move(legs), d.crossings(), std::move(es));
}

namespace {

// Crossing positions in breadth-first discovery order from leg 1.
std::vector<int> discovery_order(const TangleDiagram& d, const PortTable& t) {
  const int k = d.crossing_count();
  std::vector<int> order;
  std::vector<int> label(k, -1);
  std::deque<int> queue;
  auto visit = [&](int q) {
    if (q < 0 || q < t.legs()) return;
    int pos = (q - t.legs()) / 4;
    if (label[pos] >= 0) return;
    label[pos] = static_cast<int>(order.size());
    order.push_back(pos);
    queue.push_back(pos);
  };
  auto drain = [&] {
    while (!queue.empty()) {
      int pos = queue.front();
      queue.pop_front();
      for (int s = 0; s < 4; ++s) visit(t.opposite(t.legs() + 4 * pos + s));
    }
  };
  for (int leg = 0; leg < t.legs(); ++leg) {
    visit(t.opposite(leg));
    drain();
  }
  // Crossings unreachable from the boundary only occur in invalid diagrams.
  for (int pos = 0; pos < k; ++pos) {
    if (label[pos] < 0) {
      label[pos] = static_cast<int>(order.size());
      order.push_back(pos);
      queue.push_back(pos);
      drain();
    }
  }
  return order;
}

void append_int(std::string& s, int v) {
  char buf[16];
  auto r = std::to_chars(buf, buf + sizeof buf, v);
  s.append(buf, r.ptr);
}

}  // namespace

std::string canonical_code(const TangleDiagram& d) {
  PortTable t(d);
  auto order = discovery_order(d, t);
  std::vector<int> label(d.crossing_count(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i]] = static_cast<int>(i);
  std::string code;
  code.reserve(8 + 4 * t.size());
  for (auto f : d.legs()) code.push_back(f == LegFlag::in ? 'i' : 'o');
  auto emit = [&](int q) {
    if (q < 0) {
      code.push_back('_');
    } else if (q < t.legs()) {
      code.push_back('b');
      append_int(code, q + 1);
    } else {
      append_int(code, label[(q - t.legs()) / 4]);
      code.push_back('.');
      code.push_back(static_cast<char>('0' + (q - t.legs()) % 4));
    }
    code.push_back(' ');
  };
  code.push_back('|');
  for (int leg = 0; leg < t.legs(); ++leg) emit(t.opposite(leg));
  for (int pos : order) {
    code.push_back(d.crossings()[pos].sign == CrossingSign::positive ? '+' : '-');
    for (int s = 0; s < 4; ++s) emit(t.opposite(t.legs() + 4 * pos + s));
  }
  return code;
}

TangleDiagram canonical_form(const TangleDiagram& d) {
  PortTable t(d);
  auto order = discovery_order(d, t);
  std::map<int, int> relabel;
  for (std::size_t i = 0; i < order.size(); ++i) relabel[d.crossings()[order[i]].id] = static_cast<int>(i);
  std::vector<Crossing> cs;
  for (const auto& c : d.crossings()) cs.push_back({relabel.at(c.id), c.sign});
  auto map_port = [&](Port p) {
    if (!p.is_leg()) p.index = relabel.at(p.index);
    return p;
  };
  std::vector<Edge> es;
  for (const auto& e : d.edges()) es.push_back({map_port(e.from), map_port(e.to)});
  return TangleDiagram(d.legs(), std::move(cs), std::move(es));
}

}  // namespace reid
