#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "antimagic/tree.hpp"

namespace antimagic {

// Caterpillar with spine v_0..v_p (vertex ids 0..p) and leg_budget leaves
// attached to uniformly chosen interior spine positions. Leaves get ids
// p+1 onward; edges are emitted spine first, then legs. Reproducible: the
// draws come from mt19937_64 through bounded_draw (see rng.hpp).
Tree random_caterpillar(int p, int leg_budget, std::uint64_t seed);

// Streams every caterpillar of order n: for each spine length p and each
// split of the n-1-p leaves over the p-1 interior positions, except that
// a split whose mirror image was already emitted is skipped. Reflection
// is the only symmetry removed, so some isomorphic pairs remain; every
// caterpillar of order n appears at least once.
class CaterpillarEnumerator {
 public:
  // Throws std::invalid_argument when n < 3 or n > max_order (the count
  // grows like 2^n, so the cap guards against runaway enumeration).
  explicit CaterpillarEnumerator(VertexId n, VertexId max_order = 26);

  std::optional<Tree> next();

 private:
  bool advance();
  Tree build() const;
  bool mirror_canonical() const;

  VertexId n_;
  int p_;
  bool fresh_ = true;
  std::vector<int> legs_per_position_;  // c_1..c_{p-1}
};

}  // namespace antimagic
