#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphmc/graph_sum.hpp"
#include "graphmc/sparse.hpp"

namespace gmc {

// All gauge / Maurer-Cartan computations are truncated by total vertex count
// (#internal + #external). A cap of V keeps the second grading <= V-1. Every
// bracket against a fixed element raises the vertex count by at least one, so
// truncated exponential series terminate.
struct TruncationPolicy {
  int max_vertices = 4;

  static TruncationPolicy from_grading(int max_second_grading) {
    return {max_second_grading + 1};
  }
  int max_second_grading() const { return max_vertices - 1; }
};

// Per-grading residuals of the Maurer-Cartan equation: the second-grading
// components of (1/2)[alpha, alpha] up to the cap, raw and reduced mod the
// generalized relations. Empty reduced residuals = MC verified to that order.
struct McReport {
  std::map<int, GraphSum> raw;      // grading -> component (nonzero only)
  std::map<int, GraphSum> reduced;  // grading -> normal form (nonzero only)
  // Largest grading whose residual cannot receive contributions from the
  // (unknown) tail of alpha beyond its given terms.
  int determined_grading = 0;

  bool passed_up_to(int grading) const {
    for (const auto& [g, r] : reduced)
      if (g <= grading && !r.empty()) return false;
    return true;
  }
};

McReport mc_check(const GraphSum& alpha, const TruncationPolicy& trunc);

// exp(ad_xi) alpha truncated by the policy, reduced mod relations.
GraphSum gauge_act(const GraphSum& xi, const GraphSum& alpha,
                   const TruncationPolicy& trunc);
// Same, without the final reduction (for oracle cross-checks).
GraphSum gauge_act_raw(const GraphSum& xi, const GraphSum& alpha,
                       const TruncationPolicy& trunc);

// Certificate of the degree-one obstruction test at second grading k: is the
// grading-k part of alpha exact for ad of the grading-1 part, searching the
// complete Lie-degree-0, grading-(k-1) slice?
struct ObstructionResult {
  bool obstructed = false;
  bool cocycle = true;  // [alpha^(1), alpha^(k)] = 0 mod relations
  GraphSum target;      // normal form of the grading-k part
  GraphSum residue;     // normal form of target modulo the image; nonzero
                        // iff obstructed
  std::vector<std::string> domain_keys;  // basis of the searched slice
  std::vector<SparseVec> image_rows;     // reduced images ad_a1part(domain)
  // When unobstructed: preimage eta with [alpha^(1), eta] == target.
  std::optional<GraphSum> witness;
};

ObstructionResult obstruction_test(const GraphSum& alpha, int k);

// True iff [alpha1, x] = 0 mod relations.
bool closedness_check(const GraphSum& x, const GraphSum& alpha1);

}  // namespace gmc
