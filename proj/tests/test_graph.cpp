#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "graphmc/dsl.hpp"
#include "graphmc/enumerate.hpp"
#include "graphmc/fixtures.hpp"
#include "graphmc/graph.hpp"
#include "graphmc/graph_sum.hpp"

using namespace gmc;

namespace {

DirectedGraph wedge() { return {2, 1, {{3, 1}, {3, 2}}}; }

int perm_parity(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("admissibility examples") {
  CHECK(check_admissible(wedge()).ok);

  DirectedGraph loop{0, 1, {{1, 1}}};
  auto a = check_admissible(loop);
  CHECK_FALSE(a.ok);
  CHECK(a.clause == 2);

  // Two incoming edges at an internal vertex.
  DirectedGraph twoin{2, 1, {{1, 3}, {2, 3}}};
  a = check_admissible(twoin);
  CHECK_FALSE(a.ok);
  CHECK(a.clause == 4);

  // Opposite-direction pair between distinct vertices is fine.
  DirectedGraph cycle2{1, 1, {{1, 2}, {2, 1}}};
  CHECK(check_admissible(cycle2).ok);

  // Same ordered pair twice is a double edge.
  DirectedGraph dbl{2, 1, {{3, 1}, {3, 1}}};
  a = check_admissible(dbl);
  CHECK_FALSE(a.ok);
  CHECK(a.clause == 2);

  // Four-valent internal vertex.
  DirectedGraph fourval{4, 1, {{1, 5}, {5, 2}, {5, 3}, {4, 5}}};
  a = check_admissible(fourval);
  CHECK_FALSE(a.ok);
  CHECK((a.clause == 3 || a.clause == 4));

  // Disconnected internal vertex.
  DirectedGraph island2{1, 2, {{3, 1}}};
  a = check_admissible(island2);
  CHECK_FALSE(a.ok);
  CHECK(a.clause == 5);

  // Externals may be isolated.
  DirectedGraph bare{2, 0, {}};
  CHECK(check_admissible(bare).ok);
}

TEST_CASE("degree formulas") {
  DirectedGraph a1_out{1, 1, {{2, 1}}};
  CHECK(a1_out.degree() == 1);
  CHECK(a1_out.lie_degree() == 1);

  DirectedGraph a2{2, 0, {}};
  CHECK(a2.degree() == 0);
  CHECK(a2.lie_degree() == 1);

  DirectedGraph b{3, 1, {{1, 4}, {4, 2}, {4, 3}}};
  CHECK(b.degree() == -1);
  CHECK(b.lie_degree() == 1);
  CHECK(b.second_grading() == 3);
}

TEST_CASE("canonicalize: edge swap flips sign") {
  DirectedGraph w = wedge();
  Canonical c1 = canonicalize(w);
  DirectedGraph swapped = w;
  std::swap(swapped.edges[0], swapped.edges[1]);
  Canonical c2 = canonicalize(swapped);
  REQUIRE_FALSE(c1.is_zero);
  REQUIRE_FALSE(c2.is_zero);
  CHECK(c1.canonical.key == c2.canonical.key);
  CHECK(c1.sign == -c2.sign);
}

TEST_CASE("canonicalize: idempotent with sign +1") {
  for (const auto& cg : enumerate_graphs(2, 2, 3)) {
    Canonical again = canonicalize(cg.graph);
    CHECK_FALSE(again.is_zero);
    CHECK(again.sign == 1);
    CHECK(again.canonical.key == cg.key);
  }
}

TEST_CASE("canonicalize: parity under random edge permutations") {
  std::mt19937_64 rng(99);
  auto graphs = enumerate_graphs(3, 2, 4);
  REQUIRE(graphs.size() > 10);
  for (int trial = 0; trial < 50; ++trial) {
    const auto& cg = graphs[rng() % graphs.size()];
    DirectedGraph g = cg.graph;
    std::vector<int> p(g.edges.size());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    DirectedGraph permuted = g;
    for (std::size_t i = 0; i < p.size(); ++i)
      permuted.edges[i] = g.edges[p[i]];
    Canonical c = canonicalize(permuted);
    REQUIRE_FALSE(c.is_zero);
    CHECK(c.canonical.key == cg.key);
    CHECK(c.sign == perm_parity(p));
  }
}

TEST_CASE("canonicalize: internal relabeling agrees") {
  DirectedGraph a5{2, 2, {{3, 1}, {3, 2}, {4, 1}, {4, 2}}};
  Canonical c = canonicalize(a5);
  REQUIRE_FALSE(c.is_zero);  // the internal swap induces an even permutation
  DirectedGraph relabeled{2, 2, {{4, 1}, {4, 2}, {3, 1}, {3, 2}}};
  Canonical c2 = canonicalize(relabeled);
  CHECK(c2.canonical.key == c.canonical.key);
  CHECK(c2.sign == c.sign);
}

TEST_CASE("odd automorphism kills the graph") {
  // Two univalent internals hanging off the same external by same-direction
  // edges: swapping them induces a single edge transposition.
  DirectedGraph g{1, 2, {{2, 1}, {3, 1}}};
  Canonical c = canonicalize(g);
  CHECK(c.is_zero);

  GraphSum s = GraphSum::single(g);
  CHECK(s.empty());
}

TEST_CASE("DSL parse/serialize round trip") {
  const std::string text = "G(n=2; I=1; e=[(i1,1),(i1,2)])";
  GraphSum wedge_sum = parse_graph_sum(text);
  CHECK(wedge_sum.n_terms() == 1);
  CHECK(wedge_sum == GraphSum::single(wedge()));

  GraphSum again = parse_graph_sum(serialize(wedge_sum));
  CHECK(again == wedge_sum);

  // Undirected shorthand: both directions.
  GraphSum xi1 = parse_graph_sum("G(n=2; I=0; e=[(1--2)])");
  GraphSum expect = GraphSum::single({2, 0, {{1, 2}}});
  expect += GraphSum::single({2, 0, {{2, 1}}});
  CHECK(xi1 == expect);

  // Rational coefficients and mixed sums.
  GraphSum s = parse_graph_sum(
      "1/2*G(n=2; I=1; e=[(i1->1),(i1->2)]) - 1/12*G(n=2; I=0; e=[])");
  CHECK(s.vec().coeff(graph_key(wedge())) == Rat(1, 2));
  CHECK(s.vec().coeff(graph_key({2, 0, {}})) == Rat(-1, 12));

  CHECK(serialize(GraphSum()) == "0");
}

TEST_CASE("DSL errors") {
  CHECK_THROWS(parse_graph_sum("G(n=2; I=0; e=[(1->1)])"));    // loop
  CHECK_THROWS(parse_graph_sum("G(n=2; I=0; e=[(1->3)])"));    // out of range
  CHECK_THROWS(parse_graph_sum("G(n=2; I=0; e=[(1->2)"));      // syntax
  CHECK_THROWS(parse_graph_sum("G(n=1; I=2; e=[(i1->i2)])"));  // disconnected
}

TEST_CASE("round trip over all fixtures") {
  for (const auto& name : fixture_names()) {
    const GraphSum& f = fixture(name);
    CHECK(parse_graph_sum(serialize(f)) == f);
  }
}

TEST_CASE("fixture composites are consistent with their parts") {
  GraphSum alphaduf = fixture("a1") + fixture("a2") +
                      Rat(1, 2) * fixture("a3") - Rat(1, 12) * fixture("a4") +
                      Rat(1, 8) * fixture("a5") + Rat(1, 24) * fixture("a6");
  CHECK(fixture("alphaduf") == alphaduf);

  GraphSum xi = Rat(-1, 4) * fixture("xi1") - Rat(1, 16) * fixture("xi2") +
                Rat(1, 48) * fixture("xi3");
  CHECK(fixture("xi") == xi);

  GraphSum b = fixture("b1") + fixture("b2") + fixture("b3");
  CHECK(fixture("b") == b);

  CHECK(fixture("alpha0") == fixture("a1") + fixture("a2"));
  CHECK(fixture("alphadufprime") ==
        fixture("alpha0") + Rat(1, 24) * fixture("b"));
}

TEST_CASE("fixture degrees") {
  for (const auto* name : {"alpha0", "alphaduf", "alphadufprime"})
    CHECK(fixture(name).homogeneous_lie_degree(1));
  for (const auto* name : {"xi", "xi1", "xi2", "xi3", "c"})
    CHECK(fixture(name).homogeneous_lie_degree(0));
  for (const auto* name : {"b", "bprime", "Q", "a3", "a4", "a5", "a6"})
    CHECK(fixture(name).homogeneous_lie_degree(1));
}

TEST_CASE("enumerate_slice counts") {
  // Arity 1, one internal, one edge: the two directed single edges.
  CHECK(enumerate_slice(1, 1, 1).size() == 2);
  // Arity 2, no internals, no edges: just the bare pair.
  CHECK(enumerate_slice(2, 0, 0).size() == 1);
  // Arity 2, one internal, two edges: counted by hand.
  CHECK(enumerate_slice(2, 1, 2).size() == 13);
}

TEST_CASE("enumerate matches naive generate-filter-dedupe oracle") {
  int n = 2, m = 1, e = 2;
  int V = n + m;
  std::vector<Edge> arcs;
  for (int u = 1; u <= V; ++u)
    for (int v = 1; v <= V; ++v)
      if (u != v) arcs.push_back({u, v});
  std::set<std::string> keys;
  int na = static_cast<int>(arcs.size());
  for (int mask = 0; mask < (1 << na); ++mask) {
    DirectedGraph g{n, m, {}};
    for (int i = 0; i < na; ++i)
      if (mask & (1 << i)) g.edges.push_back(arcs[i]);
    if (g.n_edges() != e) continue;
    if (!check_admissible(g).ok) continue;
    Canonical c = canonicalize(g);
    if (c.is_zero) continue;
    keys.insert(c.canonical.key);
  }
  auto fast = enumerate_slice(n, m, e);
  CHECK(fast.size() == keys.size());
  for (const auto& cg : fast) CHECK(keys.count(cg.key) == 1);
}
