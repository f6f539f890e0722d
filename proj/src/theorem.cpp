#include "reid/theorem.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace reid {

namespace {

TangleDiagram image_of(const TangleDiagram& triangle) {
  for (const auto& f : interior_faces(triangle))
    if (f.sides.size() == 3) return r3_image(triangle, f);
  throw Error("diagram has no triangle");
}

int index(Letter l) { return static_cast<int>(l); }

void require(const Verification& v, const std::string& what) {
  if (!v.ok) throw Error(what + ": step " + std::to_string(v.step) + ": " + v.reason);
}

}  // namespace

std::vector<LemmaEntry> lemma_suite(const std::vector<ThetaConfig>& configs, int search_crossings) {
  std::vector<LemmaEntry> out;
  for (const auto& t : configs) {
    LemmaEntry e{t.upper.letter, t.lower.letter, t.params, factor_via_theta(t), -1};
    const std::string pair = std::string(1, letter_char(e.x)) + "," + letter_char(e.y);
    if (e.certificate.steps.size() != 3) throw Error("lemma " + pair + ": certificate is not 3 steps");
    require(verify_certificate(e.certificate, basis_with(e.y)), "lemma " + pair);
    auto r = derive(e.certificate.start, e.certificate.end(), basis_with(e.y), {search_crossings, 24, 5'000'000});
    if (r.status != SearchStatus::found) throw Error("lemma " + pair + ": search " + to_string(r.status));
    e.search_length = static_cast<int>(r.certificate->steps.size());
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::set<Letter>> equivalence_classes(const std::vector<LemmaEntry>& lemmas) {
  bool reach[8][8] = {};
  for (int i = 0; i < 8; ++i) reach[i][i] = true;
  for (const auto& e : lemmas) reach[index(e.y)][index(e.x)] = true;
  for (int k = 0; k < 8; ++k)
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) reach[i][j] = reach[i][j] || (reach[i][k] && reach[k][j]);
  std::vector<std::set<Letter>> out;
  std::vector<bool> placed(8, false);
  for (int i = 0; i < 8; ++i) {
    if (placed[i]) continue;
    std::set<Letter> c;
    for (int j = 0; j < 8; ++j)
      if (reach[i][j] && reach[j][i]) {
        c.insert(all_letters[j]);
        placed[j] = true;
      }
    out.push_back(std::move(c));
  }
  return out;
}

BridgeResult bridge_theorem(int max_crossings) {
  const auto start = build_triangle({Letter::c, Flag::up});
  const SearchBounds bounds{max_crossings, 24, 5'000'000};
  auto r = derive(start, image_of(start), basis_with(Letter::A), bounds);
  if (r.status != SearchStatus::found)
    throw Error("bridge A => c: search " + to_string(r.status) + " with max_crossings " +
                std::to_string(max_crossings) + ", depth 24, 5000000 states");
  BridgeResult b{*r.certificate, {}, r.states};
  require(verify_certificate(b.A_to_c, basis_with(Letter::A)), "bridge A => c");
  b.a_to_C = align_certificate(mirror_certificate(b.A_to_c), build_triangle({Letter::C, Flag::up}));
  require(verify_certificate(b.a_to_C, basis_with(Letter::a)), "bridge a => C");
  return b;
}

ImplicationGraph implication_graph(const std::vector<LemmaEntry>& lemmas, const BridgeResult& bridge) {
  ImplicationGraph g;
  for (const auto& e : lemmas) g.emplace(std::pair{e.y, e.x}, e.certificate);
  g.emplace(std::pair{Letter::A, Letter::c}, bridge.A_to_c);
  g.emplace(std::pair{Letter::a, Letter::C}, bridge.a_to_C);
  return g;
}

namespace {

// Predecessors on shortest paths from `from`, visiting targets in letter order.
std::map<Letter, Letter> shortest_paths(Letter from, const ImplicationGraph& g) {
  std::map<Letter, Letter> pred;
  std::set<Letter> seen{from};
  std::deque<Letter> queue{from};
  while (!queue.empty()) {
    Letter y = queue.front();
    queue.pop_front();
    for (const auto& [edge, _] : g) {
      if (edge.first != y || seen.contains(edge.second)) continue;
      seen.insert(edge.second);
      pred[edge.second] = y;
      queue.push_back(edge.second);
    }
  }
  return pred;
}

}  // namespace

bool strongly_connected(const ImplicationGraph& g) {
  for (Letter l : all_letters)
    if (shortest_paths(l, g).size() != 7) return false;
  return true;
}

std::map<Letter, ComposedCertificate> full_theorem(Letter basis, const ImplicationGraph& g) {
  const auto pred = shortest_paths(basis, g);
  const MoveSet target_basis = basis_with(basis);
  std::map<Letter, ComposedCertificate> done;

  auto compose = [&](auto& self, Letter x) -> const ComposedCertificate& {
    if (auto it = done.find(x); it != done.end()) return it->second;
    auto p = pred.find(x);
    if (p == pred.end())
      throw Error(std::string("move ") + letter_char(x) + " is not reachable from " + letter_char(basis));
    const Letter y = p->second;
    const Certificate& edge = g.at({y, x});
    ComposedCertificate out;
    if (y == basis) {
      out = {edge, {basis, x}};
    } else {
      const auto& inner = self(self, y);
      std::map<MoveName, Certificate> dict{
          {MoveName::r3(y, Flag::up), inner.certificate},
          {MoveName::r3(y, Flag::down), reverse_certificate(inner.certificate)},
      };
      out.certificate = splice(edge, dict, target_basis);
      out.path = inner.path;
      out.path.push_back(x);
    }
    require(verify_certificate(out.certificate, target_basis),
            std::string("derivation of ") + letter_char(x) + " from " + letter_char(basis));
    return done.emplace(x, std::move(out)).first->second;
  };

  for (Letter x : all_letters)
    if (x != basis) compose(compose, x);
  return done;
}

TheoremRun run_theorem(const std::vector<Letter>& bases) {
  TheoremRun run;
  run.thetas = enumerate_theta_configs();
  run.lemmas = lemma_suite(run.thetas);
  run.classes = equivalence_classes(run.lemmas);
  run.bridge = bridge_theorem();
  run.graph = implication_graph(run.lemmas, run.bridge);
  run.connected = strongly_connected(run.graph);
  if (!run.connected) throw Error("implication graph is not strongly connected");
  for (Letter l : bases) run.derivations[l] = full_theorem(l, run.graph);
  return run;
}

std::string letter_name(Letter l) { return std::string(1, letter_char(l)); }

std::string lemma_path(const LemmaEntry& e) { return "lemma/" + letter_name(e.x) + "_" + letter_name(e.y) + ".cert"; }

std::string theorem_path(Letter basis, Letter target) {
  return "theorem/" + letter_name(basis) + "/" + letter_name(target) + ".cert";
}

std::string report(const TheoremRun& run) {
  std::ostringstream out;
  out << "Theta configurations: " << run.thetas.size() << "\n";
  for (const auto& t : run.thetas)
    out << "  " << t.params.name() << " → " << t.upper.name() << " , " << t.lower.name() << "\n";
  out << "\nTheta relation: " << theta_relation(run.thetas).size() << " ordered pairs (upper, lower)\n";

  out << "\nLemma certificates (y => x)\n";
  for (const auto& e : run.lemmas)
    out << "  " << letter_char(e.y) << " => " << letter_char(e.x) << "  steps " << e.certificate.steps.size()
        << "  search " << e.search_length << "  " << lemma_path(e) << "\n";

  out << "\nEquivalence classes: " << run.classes.size() << "\n";
  for (const auto& c : run.classes) {
    out << "  {";
    bool first = true;
    for (Letter l : c) {
      out << (first ? "" : ",") << letter_char(l);
      first = false;
    }
    out << "}\n";
  }

  out << "\nBridge\n";
  out << "  A => c  steps " << run.bridge.A_to_c.steps.size() << "  search states " << run.bridge.states
      << "  bridge/A_to_c.cert\n";
  out << "  a => C  steps " << run.bridge.a_to_C.steps.size() << "  mirror  bridge/a_to_C.cert\n";

  out << "\nImplication graph: " << run.graph.size() << " edges, strongly connected: "
      << (run.connected ? "yes" : "no") << "\n";

  auto cell = [](const std::string& s) { return std::string(s.size() < 4 ? 4 - s.size() : 1, ' ') + s; };
  out << "\nDerivation lengths (row: basis, column: derived move)\n   ";
  for (Letter x : all_letters) out << cell(letter_name(x));
  out << "\n";
  for (const auto& [basis, row] : run.derivations) {
    out << "  " << letter_char(basis);
    for (Letter x : all_letters) out << cell(x == basis ? "-" : std::to_string(row.at(x).certificate.steps.size()));
    out << "\n";
  }

  out << "\nDerivations\n";
  for (const auto& [basis, row] : run.derivations)
    for (const auto& [x, d] : row) {
      out << "  " << theorem_path(basis, x) << "  steps " << d.certificate.steps.size() << "  path ";
      for (std::size_t i = 0; i < d.path.size(); ++i) out << (i ? " -> " : "") << letter_char(d.path[i]);
      out << "\n";
    }
  return out.str();
}

void write_outputs(const TheoremRun& run, const std::string& dir) {
  const std::string root = dir.empty() || dir.back() == '/' ? dir : dir + "/";
  write_file(root + "thetas.txt", theta_table(run.thetas));
  for (const auto& e : run.lemmas) write_file(root + lemma_path(e), serialize_certificate(e.certificate));
  write_file(root + "bridge/A_to_c.cert", serialize_certificate(run.bridge.A_to_c));
  write_file(root + "bridge/a_to_C.cert", serialize_certificate(run.bridge.a_to_C));
  for (const auto& [basis, row] : run.derivations)
    for (const auto& [x, d] : row) write_file(root + theorem_path(basis, x), serialize_certificate(d.certificate));
  write_file(root + "report.txt", report(run));
}

}  // namespace reid
