#pragma once

#include <cstdint>
#include <optional>

#include "antimagic/labeler.hpp"
#include "antimagic/tree.hpp"

namespace antimagic {

struct OracleOptions {
  EdgeId limit_m = 10;                       // refuse larger instances
  std::uint64_t node_budget = 50'000'000;    // label trials before giving up
};

// Ground truth by exhaustive backtracking: returns the lexicographically
// first bijection (labels listed in edge-id order) with pairwise distinct
// vertex sums, or nullopt when none exists. Partial assignments are
// pruned as soon as a vertex with all incident edges labeled collides
// with another completed vertex.
//
// Throws std::invalid_argument when m exceeds limit_m and
// search_budget_exceeded when the node budget runs out.
std::optional<Labeling> brute_force_antimagic(const Tree& tree,
                                              const OracleOptions& options = {});

struct ComparisonReport {
  Labeling algorithm;
  std::optional<Labeling> oracle;
  bool algorithm_antimagic = false;
  bool oracle_found = false;
  bool oracle_antimagic = false;
  bool agree = false;  // both routes produced a valid labeling
};

// Runs the constructive labeler and the brute-force search on the same
// caterpillar and verifies both outputs. The labelings need not coincide.
ComparisonReport compare_with_algorithm(const Tree& tree, const OracleOptions& options = {});

}  // namespace antimagic
