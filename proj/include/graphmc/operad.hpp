#pragma once

#include "graphmc/graph_sum.hpp"

namespace gmc {

// Operadic insertion g1 o_j g2: replaces external vertex j of g1 by g2,
// renumbers g2's externals to occupy positions j..j+s-1, and sums over all
// ways of reattaching the loose edge-ends (formerly at j) to the vertices of
// g2 (external or internal); inadmissible results are dropped. Edge order:
// g1's edges first, then g2's.
GraphSum insert(const DirectedGraph& g1, int j, const DirectedGraph& g2);
GraphSum insert(const GraphSum& x, int j, const GraphSum& y);

// Pre-Lie product: x * y = sum_i (-1)^{|y|(1-n) + (i+1)(m-1)} x o_i y with
// n = arity(x), m = arity(y), |y| the graph degree of y. Extended bilinearly
// over terms of mixed arity.
GraphSum star(const GraphSum& x, const GraphSum& y);

// Graded commutator [x,y] = x*y - (-1)^{|x||y|} y*x in the Lie grading;
// extended bilinearly over Lie-degree-homogeneous components.
GraphSum bracket(const GraphSum& x, const GraphSum& y);

// Iterated bracket ad_xi^k(alpha).
GraphSum ad_pow(const GraphSum& xi, const GraphSum& alpha, int k);

}  // namespace gmc
