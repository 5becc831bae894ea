#pragma once

#include <array>
#include <string>
#include <vector>

#include "antimagic/labeler.hpp"
#include "antimagic/tree.hpp"

namespace antimagic {

struct SumReport {
  struct Duplicate {
    VertexId a;
    VertexId b;
    Label sum;
  };
  struct Range {
    Label lo = 0;
    Label hi = -1;
    bool empty() const { return hi < lo; }
  };

  std::vector<Label> sums;            // per vertex
  bool distinct = false;
  std::vector<Duplicate> duplicates;  // empty iff distinct, sorted by sum
  std::array<Range, 3> class_ranges{};  // observed min/max per VertexClass
  bool has_class_ranges = false;
};

// Exact vertex sums plus duplicate detection (by sorting, so witnesses
// come out in a deterministic order). Throws std::invalid_argument when
// the labeling is not a bijection onto [1, m].
SumReport vertex_sums(const Tree& tree, const Labeling& labeling);

// Same, additionally recording the observed sum range of each vertex
// class.
SumReport vertex_sums(const Tree& tree, const Labeling& labeling,
                      const VertexClassification& classes);

// True iff the labeling is a bijection onto [1, m] and all vertex sums
// are pairwise distinct. Never throws on a bad labeling.
bool is_antimagic_labeling(const Tree& tree, const Labeling& labeling);

// Partition of the vertices by sum band: leaves, degree-2 spine vertices
// together with light vertices, and heavy vertices.
VertexClassification classify_vertices(const Spine& spine, const Step1Trace& trace);

struct CheckResult {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    ok = false;
    violations.push_back(std::move(msg));
  }
  void merge(const CheckResult& other) {
    ok = ok && other.ok;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

// The checks below are properties of labelings produced by this
// construction, not of arbitrary antimagic labelings.

// Every pathedge label equals its closed form.
CheckResult check_pathedge_closed_form(const LabelResult& result);

// The label images of the three edge groups are exactly the expected
// intervals: pathedges alternating with e_p plus early-labeled legs cover
// [1, ceil(p/2) + u], the other pathedges cover L1, and the remaining
// legs cover what is left of L0.
CheckResult check_label_partition(const LabelResult& result);

// Consecutive pathedge sums stay inside
// [m - floor(p/2) + 2, m + ceil(p/2) + u], increase strictly along the
// spine, and early-labeled leg labels increase with spine index.
CheckResult check_sum_monotonicity(const LabelResult& result);

// Trace sanity: firings only happen at iterations of the same parity as
// p, each fired vertex has degree 3 and fires once, and |U_i| never
// decreases.
CheckResult check_trace(const LabelResult& result);

// Vertex sums per class land in pairwise disjoint intervals:
// leaves in [1, m - floor(p/2) + 1], middle vertices in
// [m - floor(p/2) + 2, m + ceil(p/2) + u], heavy vertices in
// [m + ceil(p/2) + u + 2, inf). Also checks the observed class ranges
// against each other.
CheckResult check_intervals(const SumReport& report, const VertexClassification& classes,
                            Label m, int p, int light_count);

// Degree-3 heavy vertices have step-1 partial sum at least m + 1; heavy
// vertices of degree >= 4 end with sum at least m + ceil(p/2) + 2u + 5.
CheckResult check_heavy_bounds(const Tree& tree, const LabelResult& result);

// Runs every check above plus bijection and distinctness. The one-stop
// validation used by the self-test command and the acceptance suite.
CheckResult check_construction(const Tree& tree, const LabelResult& result);

}  // namespace antimagic
