#pragma once

#include <map>
#include <string>
#include <vector>

#include "graphmc/graph_sum.hpp"
#include "graphmc/sparse.hpp"

namespace gmc {

// An ordered list of disjoint nonempty subsets of {1..n} covering {1..n};
// basis element of the multilinear part of the cobar complex in tensor
// degree = number of blocks.
struct SetComposition {
  std::vector<std::vector<int>> blocks;  // elements sorted within each block

  int n_blocks() const { return static_cast<int>(blocks.size()); }
  int ground_size() const;
  std::string key() const;
  static SetComposition from_key(const std::string& key);
  // Relabel elements by sigma (1-based vector: sigma[i-1] = image of i).
  SetComposition relabeled(const std::vector<int>& sigma) const;

  friend bool operator==(const SetComposition&, const SetComposition&) =
      default;
};

// Linear combination of set compositions with rational coefficients.
class CobarElement {
 public:
  CobarElement() = default;
  static CobarElement single(const SetComposition& c, const Rat& r = Rat(1));

  void add(const SetComposition& c, const Rat& r) { vec_.add(c.key(), r); }
  bool empty() const { return vec_.empty(); }
  const SparseVec& vec() const { return vec_; }
  CobarElement& operator+=(const CobarElement& o) {
    vec_ += o.vec_;
    return *this;
  }
  CobarElement& operator-=(const CobarElement& o) {
    vec_ -= o.vec_;
    return *this;
  }
  CobarElement& operator*=(const Rat& c) {
    vec_ *= c;
    return *this;
  }
  friend CobarElement operator*(const Rat& c, CobarElement x) {
    return x *= c;
  }
  bool operator==(const CobarElement&) const = default;

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [key, c] : vec_.entries())
      fn(SetComposition::from_key(key), c);
  }

 private:
  SparseVec vec_;
};

// Differential: d(B_1,..,B_k) = sum_i (-1)^i sum_{B_i = A u C} (..,A,C,..)
// over ordered pairs of nonempty disjoint subsets. Squares to zero.
CobarElement cobar_d(const CobarElement& x);
CobarElement cobar_d(const SetComposition& c);

// All set compositions of {1..n}; and those with exactly k blocks.
std::vector<SetComposition> enumerate_compositions(int n);
std::vector<SetComposition> enumerate_compositions(int n, int k);

// The totally antisymmetric top element (1/n!) sum_sigma sgn(sigma) of
// singleton compositions.
CobarElement omega(int n);

struct CobarCohomology {
  int n = 0;
  std::vector<std::size_t> dims;    // dim of the degree-k piece, k = 1..n
  std::vector<std::size_t> ranks;   // rank of d on degree k
  std::vector<std::size_t> homology;  // dim H^k, k = 1..n
  bool top_is_omega = false;        // omega closed and nonzero in H^n
  std::size_t total() const;
};

CobarCohomology cobar_cohomology(int n);

// Gluing: external vertex j of the result absorbs the core legs named by
// block j. The core must have all external vertices univalent. Inadmissible
// gluings (a block containing both endpoints of one core edge, or merging
// parallel legs) are zero, matching the vanishing of the corresponding
// coinvariant class where one exists.
GraphSum glue(const DirectedGraph& core, const SetComposition& comp);
GraphSum glue(const DirectedGraph& core, const CobarElement& x);

// Inverse of glue on admissible graphs: splits every external vertex into
// univalent legs (numbered in edge order) and records which legs each
// external absorbed.
struct Unglued {
  DirectedGraph core;
  SetComposition comp;
};
Unglued unglue(const DirectedGraph& g);

// Canonical S_n-orbit class of a (core, comp) pair under simultaneous
// relabeling; `zero` when the class vanishes by an odd symmetry.
struct GlueClass {
  bool zero = false;
  std::string key;  // canonical "(core key)x(comp key)"
};
GlueClass glue_class(const DirectedGraph& core, const SetComposition& comp);

// All canonical univalent cores with n external legs, m_max internal bound.
std::vector<CanonicalGraph> enumerate_uni_cores(int n, int m_max);

// Direct comparison of the bounded ad_a2 cohomology with the antisymmetric
// core count, per number of externals k = 1..n.
struct SliceCohomologyReport {
  int n = 0;
  int m_max = 0;
  std::vector<std::size_t> complex_dims;     // quotient dims per k
  std::vector<std::size_t> homology;         // H^k of ad_a2, per k (1..n)
  std::size_t antisym_core_rank = 0;         // expected dim of H^n
  bool match = false;
};
SliceCohomologyReport slice_cohomology_vs_corollary(int n, int m_max);

}  // namespace gmc
