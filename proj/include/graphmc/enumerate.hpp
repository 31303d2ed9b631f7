#pragma once

#include <vector>

#include "graphmc/graph.hpp"

namespace gmc {

// All canonical admissible graphs with arity n, exactly m internal vertices
// and exactly e edges, in deterministic (key) order. Graphs that are zero by
// an odd automorphism are not basis elements and are excluded.
std::vector<CanonicalGraph> enumerate_slice(int n, int m, int e);

// Union of enumerate_slice over m <= m_max, e <= e_max.
std::vector<CanonicalGraph> enumerate_graphs(int n, int m_max, int e_max);

// Transient parents for the second family of relations: graphs admissible
// except that one internal vertex has the given in/out profile. The profiles
// that arise by contracting the split edge of an admissible graph are
// (in=1,out=3) (the four-valent parent) and (in=0,out=3). The special vertex
// is the last internal one. Deduplicated up to relabeling of the remaining
// internals; deterministic order.
std::vector<DirectedGraph> enumerate_transient_parents(int n, int m, int e,
                                                       int special_in,
                                                       int special_out);

}  // namespace gmc
