#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "graphmc/graph_sum.hpp"
#include "graphmc/sparse.hpp"

namespace gmc {

// One generated relation: the sum over all admissible reconnections obtained
// by splitting `vertex` of `parent` into a directed edge (placed last in the
// edge order). Type 1 parents are admissible graphs; type 2 parents have one
// four-valent one-in/three-out internal vertex and exist only transiently.
struct IhxRelation {
  std::string parent_key;
  int vertex = 0;  // split internal vertex (provisional id in the parent)
  int type = 1;    // 1 or 2
  GraphSum relation;
};

// Splits internal vertex v of `parent` into v1 -> v2 and sums over all
// admissible redistributions of v's former edges over {v1, v2}; the new edge
// goes last. Works for both parent families.
GraphSum split_vertex(const DirectedGraph& parent, int v);

// All relations whose terms live in the exact slice (n, m, e): generated from
// every internal vertex of every admissible parent in slice (n, m-1, e-1)
// and from every four-valent transient parent there.
std::vector<IhxRelation> relations_at(int n, int m, int e);

// All relations with terms inside (n, m <= m_max, e <= e_max).
std::vector<IhxRelation> generate_ihx(int n, int m_max, int e_max);

// Row-reduced relation span for a bounded slice, with zero tests and normal
// forms. Immutable after construction.
class QuotientSpace {
 public:
  QuotientSpace(int n, int m_max, int e_max);

  int arity() const { return n_; }
  int m_max() const { return m_max_; }
  int e_max() const { return e_max_; }
  const RowBasis& relations() const { return basis_; }
  std::size_t n_generated() const { return n_generated_; }
  std::size_t n_univalent_split() const { return n_univalent_split_; }

  // Throws if x has support outside the slice.
  GraphSum reduce(const GraphSum& x) const;
  bool is_zero(const GraphSum& x) const { return reduce(x).empty(); }

 private:
  int n_, m_max_, e_max_;
  RowBasis basis_;
  std::size_t n_generated_ = 0;
  std::size_t n_univalent_split_ = 0;  // relations from univalent vertices
};

// Reduces a mixed GraphSum modulo the relations of each term's own bidegree.
// Relation sets per (n, m, e) are cached process-wide; relations never mix
// bidegrees, so this equals reduction in any containing bounded slice.
GraphSum reduce_mod_ihx(const GraphSum& x);
bool is_zero_mod_ihx(const GraphSum& x);

}  // namespace gmc
