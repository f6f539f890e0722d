#pragma once

#include <vector>

#include "reid/diagram.hpp"

namespace reid::detail {

// Dense numbering of every port in a diagram: legs 0..2n-1, then four slots per
// crossing in id order. Built once per query; diagrams are small.
class PortTable {
 public:
  explicit PortTable(const TangleDiagram& d);

  int size() const { return static_cast<int>(edge_of_.size()); }
  int legs() const { return legs_; }
  // -1 if the port does not exist in the diagram.
  int dense(const Port& p) const;
  Port port(int dense) const;
  int edge_of(int dense) const { return edge_of_[dense]; }
  int use_count(int dense) const { return uses_[dense]; }
  bool is_out(int dense) const { return out_[dense]; }
  int opposite(int dense) const;
  // Next port clockwise around the vertex carrying this port (boundary vertex included).
  int clockwise_next(int dense) const;
  // Straight-through partner at a crossing.
  int straight(int dense) const { return dense < legs_ ? -1 : legs_ + ((dense - legs_) & ~3) + ((dense - legs_ + 2) & 3); }

 private:
  const TangleDiagram* d_;
  int legs_ = 0;
  std::vector<int> ids_;
  std::vector<int> edge_of_;
  std::vector<int> uses_;
  std::vector<bool> out_;
  std::vector<int> far_;
};

}  // namespace reid::detail
