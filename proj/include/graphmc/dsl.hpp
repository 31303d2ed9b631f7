#pragma once

#include <string>

#include "graphmc/graph_sum.hpp"

namespace gmc {

// Text format for graph sums:
//
//   sum     := term (('+'|'-') term)*
//   term    := [rational '*'] graph
//   graph   := 'G(' 'n=' INT ';' 'I=' INT ';' 'e=[' [edge (',' edge)*] ']' ')'
//   edge    := '(' vert ('->'|','|'--') vert ')'
//   vert    := INT (external, 1-based) | 'i' INT (internal, 1-based)
//   rational:= INT ['/' INT]
//
// The edge list position fixes the edge order. '--' stands for the sum over
// both directions of that edge; orientations that produce inadmissible graphs
// are dropped (that is what the undirected shorthand means on the graph
// space). Fully directed inadmissible terms are an error. Lines starting with
// '#' are comments.
GraphSum parse_graph_sum(const std::string& text);

// Canonical serialization; parse(serialize(x)) == x.
std::string serialize(const GraphSum& sum);

// Serialization of a single graph as a DSL term.
std::string serialize_graph(const DirectedGraph& g);

}  // namespace gmc
