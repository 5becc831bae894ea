#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "antimagic/types.hpp"

namespace antimagic {

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
};

// Undirected simple tree over the dense vertex set [0, n). Adjacency is
// kept in CSR form; each entry carries the edge id so per-vertex label
// sums can be accumulated without lookups.
class Tree {
 public:
  struct Neighbor {
    VertexId to;
    EdgeId edge;
  };

  // Validates and builds the adjacency. Throws parse_error when the edge
  // set is not a simple connected tree on [0, n).
  static Tree from_edges(VertexId n, std::vector<Edge> edges);

  VertexId order() const { return n_; }
  EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::span<const Neighbor> neighbors(VertexId v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return static_cast<int>(offsets_[v + 1] - offsets_[v]); }

 private:
  Tree() = default;

  VertexId n_ = 0;
  std::vector<Edge> edges_;             // by edge id, endpoints as given
  std::vector<std::int64_t> offsets_;   // size n + 1
  std::vector<Neighbor> adj_;           // size 2m
};

// Edge-list text: one "u v" pair per line, lines starting with '#' and
// blank lines ignored. Vertex ids must be exactly 0..n-1. Errors carry
// the offending line number where one exists.
Tree parse_edge_list(std::string_view text);

// Inverse of parse_edge_list on canonical inputs: one "u v" line per edge
// in edge-id order.
std::string serialize_edge_list(const Tree& tree);

enum class Side : std::uint8_t { A, B };

struct Bipartition {
  std::vector<Side> class_of;  // per vertex
};

// Two-coloring by BFS parity; `root` lands in class A. Trees are always
// bipartite, so this cannot fail.
Bipartition bipartition(const Tree& tree, VertexId root = 0);

}  // namespace antimagic
