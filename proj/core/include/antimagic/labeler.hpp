#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "antimagic/caterpillar.hpp"
#include "antimagic/tree.hpp"
#include "antimagic/types.hpp"

namespace antimagic {

// The pool [1, m] split into a low part L0 = [1, m - floor(p/2)] and a
// high part L1 = [m - floor(p/2) + 1, m]. Step 1 consumes the bottom of
// both parts; steps 2 and 3 finish off L0.
struct LabelPool {
  Label m = 0;        // edge count
  int p = 0;          // spine length
  Label l0_hi = 0;    // L0 = [1, l0_hi], L1 = [l0_hi + 1, m]
  Label next_l0 = 1;
  Label next_l1 = 0;
  std::vector<char> used;  // 1-indexed, size m + 1

  Label l0_size() const { return l0_hi; }
  Label l1_size() const { return m - l0_hi; }
  bool is_used(Label v) const { return used[static_cast<std::size_t>(v)] != 0; }

  // Smallest unused label of L0 / L1. Throws invariant_error on
  // exhaustion, which cannot happen on valid input.
  Label take_l0();
  Label take_l1();

  // Consume an arbitrary unused label (randomized step 2).
  void take(Label v);

  // Unused labels of L0 in ascending order.
  std::vector<Label> unused_l0() const;
};

// Throws std::invalid_argument unless 2 <= p <= m.
LabelPool split_labels(Label m, int p);

struct Labeling {
  static constexpr Label kUnassigned = 0;

  std::vector<Label> edge_label;  // by edge id, kUnassigned while unset

  Labeling() = default;
  explicit Labeling(EdgeId m) : edge_label(static_cast<std::size_t>(m), kUnassigned) {}

  EdgeId edge_count() const { return static_cast<EdgeId>(edge_label.size()); }
  Label operator[](EdgeId e) const { return edge_label[static_cast<std::size_t>(e)]; }
  Label& operator[](EdgeId e) { return edge_label[static_cast<std::size_t>(e)]; }
  bool complete() const;
};

struct Step1Iteration {
  Label path_label = 0;  // final value assigned to e_i
  bool q_fired = false;  // whether the early-leg condition Q(i) held
  int fired_k = -1;      // spine index whose leg was labeled, when fired
  int light_count = 0;   // |U_i|, light vertices seen through iteration i
};

// Per-iteration record of step 1. Light vertices are the degree-3 spine
// vertices whose single leg was labeled early by a Q firing.
struct Step1Trace {
  std::vector<Step1Iteration> iterations;  // index i-1 holds iteration i
  std::vector<int> light_spine_indices;    // ascending
  std::vector<EdgeId> light_leg_edges;     // their legs, same order

  int light_count() const { return static_cast<int>(light_spine_indices.size()); }
};

// Step 1. Labels e_1 and e_2 with the smallest labels of L0 and L1
// (exchanged when p is even so that e_p always takes from L0), then walks
// i = 3..p assigning phi(e_i) = phi(e_{i-2}) + 1. When e_i takes from L0
// and condition Q(i) holds, i.e. phi(e_{i-1}) = phi(e_k) + phi(e_{k+1})
// for some degree-3 spine vertex v_k with k <= i-3, the leg of v_k takes
// the pending label and e_i the next one.
//
// Q(i) detection is a single monotone forward scan over k: consecutive
// pathedge sums are strictly increasing, as are the scanned phi(e_{i-1})
// targets, so the whole step costs O(p).
std::pair<Labeling, Step1Trace> run_step1(const Spine& spine, LabelPool& pool);

// Closed form for the step-1 pathedge labels: ceil(i/2) + |U_i| when e_i
// alternates with e_p, and m - floor(p/2) + ceil(i/2) otherwise. Test
// oracle only; the labeler never calls it.
Label closed_form_pathedge_label(int i, const Step1Trace& trace, Label m, int p);

enum class VertexClass : std::uint8_t {
  leaf,    // degree 1
  middle,  // degree-2 spine vertices and light vertices
  heavy,   // degree >= 3 and not light
};

struct VertexClassification {
  std::vector<VertexClass> class_of;     // per vertex
  std::vector<int> light_spine_indices;  // ascending
  std::vector<int> heavy_spine_indices;  // ascending
};

enum class Step2Mode : std::uint8_t { deterministic, random };

struct LabelOptions {
  Step2Mode step2 = Step2Mode::deterministic;
  std::uint64_t seed = 0;  // consulted only when step2 == random
};

// Step 2. For each heavy vertex in ascending spine order, labels every
// leg except the one with the highest leaf id. Deterministic mode takes
// the smallest unused L0 labels in order; random mode draws uniformly
// from the unused part of L0 (mt19937_64 seeded from options).
void run_step2(const Spine& spine, const VertexClassification& classes, LabelPool& pool,
               Labeling& labeling, const LabelOptions& options = {});

// Step 3. Sorts heavy vertices by partial vertex sum (ties by spine
// index), sorts the leftover L0 labels ascending, and pairs them up to
// label each heavy vertex's remaining leg. Completes the bijection.
void run_step3(const Spine& spine, const VertexClassification& classes, LabelPool& pool,
               Labeling& labeling);

struct LabelResult {
  Labeling labeling;
  Spine spine;
  Step1Trace trace;
  VertexClassification classes;
};

// Full pipeline: extract_spine, split_labels, steps 1 to 3, then a
// fail-fast antimagicness check on the output. Throws not_a_caterpillar
// for trees outside the domain and invariant_error if the final check
// fails.
LabelResult label(const Tree& tree, const LabelOptions& options = {});

}  // namespace antimagic
