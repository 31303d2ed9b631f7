#include "graphmc/operad.hpp"

#include <stdexcept>

namespace gmc {

namespace {

// Endpoint of a g1 edge sitting on the replaced vertex j.
struct LooseEnd {
  int edge_index;
  bool at_src;
};

}  // namespace

GraphSum insert(const DirectedGraph& g1, int j, const DirectedGraph& g2) {
  if (j < 1 || j > g1.n_ext)
    throw std::runtime_error("insert: position out of range");

  int r = g1.n_ext, s = g2.n_ext;
  int m1 = g1.n_int, m2 = g2.n_int;
  int n_ext = r + s - 1;

  // Renumbering of g1 vertices (externals j+1.. shift by s-1, internals shift
  // past g2's externals and come first among internals).
  auto map_g1 = [&](int v) {
    if (v <= r) return v < j ? v : v + s - 1;  // v == j handled separately
    return n_ext + (v - r);
  };
  // Renumbering of g2 vertices.
  auto map_g2 = [&](int v) {
    if (v <= s) return j + v - 1;
    return n_ext + m1 + (v - s);
  };

  std::vector<LooseEnd> loose;
  for (int i = 0; i < g1.n_edges(); ++i) {
    if (g1.edges[i].src == j) loose.push_back({i, true});
    if (g1.edges[i].dst == j) loose.push_back({i, false});
  }

  GraphSum out;
  int targets = s + m2;  // every vertex of g2 is a reattachment candidate
  std::size_t combos = 1;
  for (std::size_t k = 0; k < loose.size(); ++k) combos *= targets;

  for (std::size_t code = 0; code < combos; ++code) {
    DirectedGraph g{n_ext, m1 + m2, {}};
    g.edges.reserve(g1.n_edges() + g2.n_edges());
    for (const Edge& e : g1.edges)
      g.edges.push_back({e.src == j ? 0 : map_g1(e.src),
                         e.dst == j ? 0 : map_g1(e.dst)});
    std::size_t rem = code;
    for (const LooseEnd& le : loose) {
      int choice = static_cast<int>(rem % targets);
      rem /= targets;
      int target = map_g2(choice + 1);
      Edge& e = g.edges[le.edge_index];
      (le.at_src ? e.src : e.dst) = target;
    }
    for (const Edge& e : g2.edges)
      g.edges.push_back({map_g2(e.src), map_g2(e.dst)});
    if (!check_admissible(g).ok) continue;
    out.add_graph(g, Rat(1));
  }
  return out;
}

GraphSum insert(const GraphSum& x, int j, const GraphSum& y) {
  GraphSum out;
  x.for_each([&](const DirectedGraph& gx, const Rat& cx) {
    y.for_each([&](const DirectedGraph& gy, const Rat& cy) {
      out += (cx * cy) * insert(gx, j, gy);
    });
  });
  return out;
}

GraphSum star(const GraphSum& x, const GraphSum& y) {
  GraphSum out;
  x.for_each([&](const DirectedGraph& gx, const Rat& cx) {
    int n = gx.n_ext;
    y.for_each([&](const DirectedGraph& gy, const Rat& cy) {
      int m = gy.n_ext;
      long deg_y = gy.degree();
      for (int i = 1; i <= n; ++i) {
        long exponent = deg_y * (1 - n) + (i + 1) * (m - 1);
        Rat c = cx * cy * sign_pow(exponent);
        out += c * insert(gx, i, gy);
      }
    });
  });
  return out;
}

GraphSum bracket(const GraphSum& x, const GraphSum& y) {
  // Split into Lie-degree-homogeneous components and extend bilinearly.
  GraphSum out;
  for (int dx : x.lie_degrees()) {
    GraphSum xa = x.filter(
        [dx](const DirectedGraph& g) { return g.lie_degree() == dx; });
    for (int dy : y.lie_degrees()) {
      GraphSum yb = y.filter(
          [dy](const DirectedGraph& g) { return g.lie_degree() == dy; });
      out += star(xa, yb);
      out -= Rat(sign_pow(static_cast<long>(dx) * dy)) * star(yb, xa);
    }
  }
  return out;
}

GraphSum ad_pow(const GraphSum& xi, const GraphSum& alpha, int k) {
  if (k < 0) throw std::runtime_error("ad_pow: negative power");
  GraphSum acc = alpha;
  for (int i = 0; i < k; ++i) acc = bracket(xi, acc);
  return acc;
}

}  // namespace gmc
