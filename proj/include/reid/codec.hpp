#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "reid/diagram.hpp"
#include "reid/moves.hpp"

namespace reid {

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct CertificateStep {
  MoveName move;
  TangleDiagram result;
  friend bool operator==(const CertificateStep&, const CertificateStep&) = default;
};

// A derivation: start, then one diagram per move.
struct Certificate {
  MoveSet basis;
  TangleDiagram start;
  std::vector<CertificateStep> steps;

  const TangleDiagram& end() const { return steps.empty() ? start : steps.back().result; }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Crossing signs are not written; they follow from which odd slot receives an edge.
std::string serialize_tangle(const TangleDiagram& d);
TangleDiagram parse_tangle(std::string_view text);

std::string serialize_certificate(const Certificate& c);
Certificate parse_certificate(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace reid
