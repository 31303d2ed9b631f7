#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphmc/rational.hpp"

namespace gmc {

struct Edge {
  int src = 0;
  int dst = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A directed graph with external vertices 1..n_ext (labeled) and internal
// vertices n_ext+1..n_ext+n_int (provisional labels only). The edge list is
// ordered; the list position is the edge order that all sign bookkeeping
// refers to.
struct DirectedGraph {
  int n_ext = 0;
  int n_int = 0;
  std::vector<Edge> edges;

  int n_vertices() const { return n_ext + n_int; }
  int n_edges() const { return static_cast<int>(edges.size()); }
  bool is_external(int v) const { return v >= 1 && v <= n_ext; }
  bool is_internal(int v) const { return v > n_ext && v <= n_vertices(); }

  // Graph degree 2*#internal - #edges.
  int degree() const { return 2 * n_int - n_edges(); }
  // Degree in the graded Lie algebra: graph degree shifted by arity - 1.
  int lie_degree() const { return degree() + n_ext - 1; }
  // Positive auxiliary grading (#internal + #external) - 1, additive under
  // the bracket.
  int second_grading() const { return n_int + n_ext - 1; }
  int total_vertices() const { return n_vertices(); }

  friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;
};

// Admissibility report. `ok` iff all five conditions hold; otherwise `clause`
// names the first violated one.
struct Admissibility {
  bool ok = false;
  int clause = 0;  // 1..5 as in the definition of admissible graphs
  std::string detail;
};

// Checks the five admissibility conditions:
//   (1) vertex ids in range (structural),
//   (2) no simple loops and no two edges on the same ordered vertex pair
//       (opposite-direction pairs between distinct vertices are allowed),
//   (3) every internal vertex has valence <= 3,
//   (4) every internal vertex has in-degree <= 1 and out-degree <= 2,
//   (5) every internal vertex reaches an external vertex by an undirected
//       path.
Admissibility check_admissible(const DirectedGraph& g);

// A graph in canonical form: internal vertices relabeled canonically and the
// edge list sorted; `key` is the unique serialization.
struct CanonicalGraph {
  DirectedGraph graph;
  std::string key;

  friend bool operator==(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.key == b.key;
  }
  friend bool operator<(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.key < b.key;
  }
};

// Result of canonicalization: either the canonical representative together
// with the sign relating the input to it (input = sign * canonical), or ZERO
// when the graph admits an automorphism inducing an odd edge permutation.
struct Canonical {
  bool is_zero = false;
  int sign = 1;
  CanonicalGraph canonical;
};

// Exhaustive minimization over all internal-vertex relabelings of the sorted
// edge list. Throws on inadmissible input.
Canonical canonicalize(const DirectedGraph& g);

// Serialization / parsing of canonical keys, e.g. "2:1[i1>1,i1>2]" for the
// wedge with two externals.
std::string graph_key(const DirectedGraph& g);
DirectedGraph graph_from_key(const std::string& key);

std::string vertex_name(const DirectedGraph& g, int v);

}  // namespace gmc
