#pragma once

#include <vector>

#include "antimagic/labeler.hpp"
#include "antimagic/tree.hpp"

namespace antimagic {

// All edges directed from bipartition class A to class B, keeping the
// labels of the underlying undirected labeling.
struct OrientedLabeling {
  struct Arc {
    VertexId tail;
    VertexId head;
  };

  VertexId order = 0;
  std::vector<Arc> arcs;         // by edge id
  std::vector<Label> label_of;   // by edge id
};

// Orients every edge in the same direction between the two color classes
// (class A is the one holding the canonical spine start). Throws
// std::invalid_argument unless the labeling is antimagic.
OrientedLabeling orient_and_label(const Tree& tree, const Labeling& labeling);

// Incoming label sum minus outgoing label sum, per vertex.
std::vector<Label> oriented_vertex_sums(const OrientedLabeling& oriented);

// True iff all oriented vertex sums are pairwise distinct.
bool verify_oriented_sums(const OrientedLabeling& oriented);

}  // namespace antimagic
