#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "reid/codec.hpp"
#include "reid/search.hpp"
#include "reid/theta.hpp"

namespace reid {

// One Θ-related pair: the certificate derives move x (upper) from move y (lower).
struct LemmaEntry {
  Letter x;
  Letter y;
  ThetaParams params;
  Certificate certificate;  // factor_via_theta
  int search_length = -1;   // shortest length found by an independent search
};

std::vector<LemmaEntry> lemma_suite(const std::vector<ThetaConfig>& configs, int search_crossings = 5);

// Strongly connected components of the graph with an edge y -> x per entry,
// ordered by their smallest letter.
std::vector<std::set<Letter>> equivalence_classes(const std::vector<LemmaEntry>& lemmas);

struct BridgeResult {
  Certificate A_to_c;  // starts at build_triangle(c↑), basis {R2, A}
  Certificate a_to_C;  // its mirror, starts at build_triangle(C↑), basis {R2, a}
  std::size_t states = 0;
};

BridgeResult bridge_theorem(int max_crossings = 7);

// Edges y -> x, each carrying a certificate from build_triangle(x↑) to its R3
// image with basis {R2, y}.
using ImplicationGraph = std::map<std::pair<Letter, Letter>, Certificate>;

ImplicationGraph implication_graph(const std::vector<LemmaEntry>& lemmas, const BridgeResult& bridge);
bool strongly_connected(const ImplicationGraph& g);

struct ComposedCertificate {
  Certificate certificate;
  std::vector<Letter> path;  // basis letter first, target last
};

// Derivations of the seven other moves from `basis`, each spliced down to
// basis_with(basis) and verified. Throws Error if some letter is unreachable.
std::map<Letter, ComposedCertificate> full_theorem(Letter basis, const ImplicationGraph& g);

struct TheoremRun {
  std::vector<ThetaConfig> thetas;
  std::vector<LemmaEntry> lemmas;
  std::vector<std::set<Letter>> classes;
  BridgeResult bridge;
  ImplicationGraph graph;
  bool connected = false;
  std::map<Letter, std::map<Letter, ComposedCertificate>> derivations;  // basis -> target
};

TheoremRun run_theorem(const std::vector<Letter>& bases);

std::string letter_name(Letter l);  // file-name form: "a", "A"
std::string lemma_path(const LemmaEntry& e);
std::string theorem_path(Letter basis, Letter target);

std::string report(const TheoremRun& run);
// Writes thetas.txt, lemma/, bridge/, theorem/ and report.txt under `dir`.
void write_outputs(const TheoremRun& run, const std::string& dir);

}  // namespace reid
