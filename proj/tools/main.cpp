#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "reid/codec.hpp"
#include "reid/search.hpp"
#include "reid/theorem.hpp"
#include "reid/theta.hpp"

using namespace reid;

namespace {

enum Exit { ok = 0, usage = 1, exhausted = 2, bounds_hit = 3, verification = 4 };

class UsageError : public Error {
 public:
  using Error::Error;
};

class VerificationError : public Error {
 public:
  using Error::Error;
};

bool verbose = false;

void note(const std::string& s) {
  if (verbose) std::cerr << s << "\n";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

TangleDiagram only_triangle_image(const TangleDiagram& d) {
  std::optional<Face> tri;
  for (const auto& f : interior_faces(d)) {
    if (f.sides.size() != 3) continue;
    if (tri) throw UsageError("'flip' needs a diagram with exactly one triangle");
    tri = f;
  }
  if (!tri) throw UsageError("'flip' needs a diagram with a triangle");
  return r3_image(d, *tri);
}

TangleDiagram load_diagram(const std::string& source) {
  if (auto code = parse_code(source)) return build_triangle(*code);
  if (!std::filesystem::exists(source)) throw UsageError("'" + source + "' is neither a triangle code nor a file");
  return parse_tangle(read_file(source));
}

// Accepts move names, "R2" for the eight R2 moves and a letter for both
// directions of that R3 move; separated by commas or spaces.
MoveSet parse_basis(const std::vector<std::string>& items) {
  MoveSet out;
  for (const auto& item : items) {
    std::string text = item;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    std::string w;
    while (in >> w) {
      if (w == "R2" || w == "r2") {
        for (const auto& m : all_r2_moves()) out.insert(m);
      } else if (auto l = w.size() == 1 ? parse_letter(w[0]) : std::nullopt) {
        for (const auto& m : r3_moves(*l)) out.insert(m);
      } else if (auto m = MoveName::parse(w)) {
        out.insert(*m);
      } else {
        throw UsageError("unknown move '" + w + "'");
      }
    }
  }
  if (out.empty()) throw UsageError("empty basis");
  return out;
}

std::optional<Letter> parse_letter_option(const std::string& s) {
  if (s.size() != 1 || !parse_letter(s[0])) throw UsageError("'" + s + "' is not a move letter (a b c d A B C D)");
  return parse_letter(s[0]);
}

int run_triangles() {
  bool first = true;
  for (auto code : all_triangle_codes()) {
    if (!first) std::cout << "\n";
    first = false;
    std::cout << "# " << code.name() << " (" << code.ascii() << ")";
    for (auto a : code.arrows()) std::cout << ' ' << arrow_glyph(a);
    std::cout << "\n" << serialize_tangle(build_triangle(code));
  }
  return ok;
}

int run_thetas(const std::string& out) {
  auto text = theta_table(enumerate_theta_configs());
  std::cout << text;
  if (!out.empty()) write_file(out + "/thetas.txt", text);
  return ok;
}

int run_lemma(const std::vector<std::string>& pair, const std::string& out) {
  std::optional<Letter> x, y;
  if (!pair.empty()) {
    x = parse_letter_option(pair.at(0));
    y = parse_letter_option(pair.at(1));
  }
  std::vector<ThetaConfig> chosen;
  for (const auto& t : enumerate_theta_configs())
    if (!x || (t.upper.letter == *x && t.lower.letter == *y)) chosen.push_back(t);
  if (chosen.empty()) throw UsageError("pair " + pair[0] + " " + pair[1] + " is not Θ-related");
  for (const auto& e : lemma_suite(chosen)) {
    std::cout << letter_char(e.y) << " => " << letter_char(e.x) << "  steps " << e.certificate.steps.size()
              << "  search " << e.search_length << "  " << e.params.name() << "\n";
    if (!out.empty()) write_file(out + "/" + lemma_path(e), serialize_certificate(e.certificate));
    if (x) std::cout << serialize_certificate(e.certificate);
  }
  return ok;
}

int run_derive(const std::string& from, const std::string& to, const std::vector<std::string>& basis_items,
               std::optional<int> max_crossings, int max_depth, std::size_t max_states, const std::string& output) {
  auto start = load_diagram(from);
  auto goal = to == "flip" ? only_triangle_image(start) : load_diagram(to);
  auto basis = parse_basis(basis_items);
  auto bounds = SearchBounds::defaults_for(start);
  if (max_crossings) bounds.max_crossings = *max_crossings;
  bounds.max_depth = max_depth;
  bounds.max_states = max_states;
  auto r = derive(start, goal, basis, bounds);
  std::cerr << to_string(r.status) << ": " << r.states << " states, depth " << r.depth << "\n";
  if (r.status == SearchStatus::exhausted) return exhausted;
  if (r.status == SearchStatus::bounds_hit) return bounds_hit;
  std::cerr << r.certificate->steps.size() << " steps\n";
  emit(serialize_certificate(*r.certificate), output);
  return ok;
}

Certificate load_certificate(const std::string& path) {
  if (!std::filesystem::exists(path)) throw UsageError("no such file: " + path);
  return parse_certificate(read_file(path));
}

int run_verify(const std::string& path, const std::vector<std::string>& basis_items) {
  auto c = load_certificate(path);
  auto v = basis_items.empty() ? verify_certificate(c) : verify_certificate(c, parse_basis(basis_items));
  if (!v.ok) {
    std::cerr << path << ": step " << v.step << ": " << v.reason << "\n";
    return verification;
  }
  std::cout << path << ": ok, " << c.steps.size() << " steps\n";
  return ok;
}

int run_mirror(const std::string& path, const std::string& output) {
  auto m = mirror_certificate(load_certificate(path));
  auto v = verify_certificate(m);
  if (!v.ok) throw VerificationError("mirror fails at step " + std::to_string(v.step) + ": " + v.reason);
  emit(serialize_certificate(m), output);
  return ok;
}

std::vector<Letter> bases_from(const std::string& basis) {
  if (basis.empty()) return {all_letters.begin(), all_letters.end()};
  return {*parse_letter_option(basis)};
}

int run_theorem(const std::string& basis, bool direct, const std::string& out) {
  note("running lemma suite, bridge search and compositions");
  auto run = run_theorem(bases_from(basis));
  write_outputs(run, out);
  for (const auto& [b, row] : run.derivations) {
    std::cout << "basis " << letter_char(b) << ":";
    for (const auto& [x, d] : row) std::cout << ' ' << letter_char(x) << '=' << d.certificate.steps.size();
    std::cout << "  (" << row.size() << " verified)\n";
    if (!direct) continue;
    for (const auto& [x, d] : row) {
      if (d.path.size() != 2) continue;
      auto start = build_triangle({x, Flag::up});
      auto r = derive(start, only_triangle_image(start), basis_with(b), SearchBounds::defaults_for(start));
      std::cout << "  direct " << letter_char(b) << " => " << letter_char(x) << ": " << to_string(r.status);
      if (r.certificate) std::cout << ", " << r.certificate->steps.size() << " steps";
      std::cout << "\n";
      if (r.status != SearchStatus::found) throw VerificationError("direct search disagrees with the composition");
    }
  }
  std::cout << "wrote " << out << "\n";
  return ok;
}

int run_report(const std::string& out) {
  auto run = run_theorem(std::vector<Letter>(all_letters.begin(), all_letters.end()));
  auto text = report(run);
  std::cout << text;
  if (!out.empty()) write_outputs(run, out);
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Oriented Reidemeister move derivations"};
  app.require_subcommand(1);
  app.add_flag("-v,--verbose", verbose, "Progress messages on stderr");

  auto* triangles = app.add_subcommand("triangles", "Print the 16 triangle codes and their tangles");

  std::string thetas_out;
  auto* thetas = app.add_subcommand("thetas", "Print the Θ-configuration table");
  thetas->add_option("--out", thetas_out, "Also write <dir>/thetas.txt");

  std::vector<std::string> pair;
  std::string lemma_out;
  auto* lemma = app.add_subcommand("lemma", "Build and check the three-step lemma certificates");
  lemma->add_option("--pair", pair, "Upper and lower letter, e.g. --pair a b")->expected(2);
  lemma->add_option("--out", lemma_out, "Write certificates under <dir>/lemma");

  std::string from, to, derive_output;
  std::vector<std::string> basis_items;
  std::optional<int> max_crossings;
  int max_depth = 24;
  std::size_t max_states = 5'000'000;
  auto* derive_cmd = app.add_subcommand("derive", "Search for a derivation");
  derive_cmd->add_option("--from", from, "Triangle code (a-up, B-dn, ...) or tangle file")->required();
  derive_cmd->add_option("--to", to, "Triangle code, tangle file, or 'flip' for the R3 image of --from")->required();
  derive_cmd->add_option("--basis", basis_items, "Moves: names, R2, or a letter for both R3 directions")->required();
  derive_cmd->add_option("--max-crossings", max_crossings, "Default: start + 4")->check(CLI::PositiveNumber);
  derive_cmd->add_option("--max-depth", max_depth)->check(CLI::PositiveNumber);
  derive_cmd->add_option("--max-states", max_states)->check(CLI::PositiveNumber);
  derive_cmd->add_option("-o,--output", derive_output, "Certificate file (default stdout)");

  std::string verify_path;
  std::vector<std::string> verify_basis;
  auto* verify = app.add_subcommand("verify", "Replay a certificate");
  verify->add_option("certificate", verify_path)->required();
  verify->add_option("--basis", verify_basis, "Also require the declared basis to lie within these moves");

  std::string mirror_path, mirror_output;
  auto* mirror_cmd = app.add_subcommand("mirror", "Mirror a certificate");
  mirror_cmd->add_option("certificate", mirror_path)->required();
  mirror_cmd->add_option("-o,--output", mirror_output, "Certificate file (default stdout)");

  std::string theorem_basis, theorem_out = "out";
  bool direct = false;
  auto* theorem = app.add_subcommand("theorem", "Derive every R3 move from one and write the certificates");
  theorem->add_option("--basis", theorem_basis, "Single basis letter (default: all eight)");
  theorem->add_flag("--direct-search", direct, "Cross-check single-edge derivations by direct search");
  theorem->add_option("--out", theorem_out, "Output directory");

  std::string report_out;
  auto* report_cmd = app.add_subcommand("report", "Run everything and print the summary");
  report_cmd->add_option("--out", report_out, "Also write the full output tree here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    if (*triangles) return run_triangles();
    if (*thetas) return run_thetas(thetas_out);
    if (*lemma) return run_lemma(pair, lemma_out);
    if (*derive_cmd)
      return run_derive(from, to, basis_items, max_crossings, max_depth, max_states, derive_output);
    if (*verify) return run_verify(verify_path, verify_basis);
    if (*mirror_cmd) return run_mirror(mirror_path, mirror_output);
    if (*theorem) return run_theorem(theorem_basis, direct, theorem_out);
    if (*report_cmd) return run_report(report_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return verification;
  }
  return usage;
}
