#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

struct Leg {
  EdgeId edge;
  VertexId leaf;
};

// A longest path v_0..v_p of a caterpillar together with the pendant
// edges hanging off its interior positions. Longest-path endpoints are
// leaves, so positions 0 and p never carry legs.
struct Spine {
  VertexId order = 0;                  // vertex count of the host tree
  std::vector<VertexId> path;          // v_0..v_p
  std::vector<EdgeId> path_edges;      // e_i = {v_{i-1}, v_i}, size p
  std::vector<std::vector<Leg>> legs;  // per position 0..p, leaf ids ascending

  int length() const { return static_cast<int>(path_edges.size()); }  // p
};

// Why the tree fails to be a caterpillar, or nullopt if it is one.
// A caterpillar has at least 3 vertices and removing every leaf yields a
// path; a single remaining vertex counts as a path, so stars qualify.
std::optional<std::string> caterpillar_defect(const Tree& tree);

inline bool is_caterpillar(const Tree& tree) { return !caterpillar_defect(tree).has_value(); }

// Deterministic longest path: double sweep (farthest vertex from vertex 0,
// then farthest from that), ties broken by smallest vertex id, oriented so
// the endpoint with the smaller id is v_0. Throws not_a_caterpillar.
Spine extract_spine(const Tree& tree);

}  // namespace antimagic
