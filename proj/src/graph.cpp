#include "graphmc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gmc {

std::string vertex_name(const DirectedGraph& g, int v) {
  if (g.is_external(v)) return std::to_string(v);
  return "i" + std::to_string(v - g.n_ext);
}

Admissibility check_admissible(const DirectedGraph& g) {
  Admissibility a;
  if (g.n_ext < 0 || g.n_int < 0) {
    a.clause = 1;
    a.detail = "negative vertex counts";
    return a;
  }
  for (const Edge& e : g.edges) {
    if (e.src < 1 || e.src > g.n_vertices() || e.dst < 1 ||
        e.dst > g.n_vertices()) {
      a.clause = 1;
      a.detail = "edge endpoint out of range";
      return a;
    }
  }
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g.edges) {
    if (e.src == e.dst) {
      a.clause = 2;
      a.detail = "simple loop at " + vertex_name(g, e.src);
      return a;
    }
    if (!seen.insert({e.src, e.dst}).second) {
      a.clause = 2;
      a.detail = "double edge " + vertex_name(g, e.src) + ">" +
                 vertex_name(g, e.dst);
      return a;
    }
  }
  std::vector<int> in(g.n_vertices() + 1, 0), out(g.n_vertices() + 1, 0);
  for (const Edge& e : g.edges) {
    ++out[e.src];
    ++in[e.dst];
  }
  for (int v = g.n_ext + 1; v <= g.n_vertices(); ++v) {
    if (in[v] + out[v] > 3) {
      a.clause = 3;
      a.detail = "internal " + vertex_name(g, v) + " has valence " +
                 std::to_string(in[v] + out[v]);
      return a;
    }
    if (in[v] > 1 || out[v] > 2) {
      a.clause = 4;
      a.detail = "internal " + vertex_name(g, v) + " has in-degree " +
                 std::to_string(in[v]) + ", out-degree " +
                 std::to_string(out[v]);
      return a;
    }
  }
  // Undirected reachability from the externals.
  std::vector<char> reach(g.n_vertices() + 1, 0);
  std::vector<int> stack;
  for (int v = 1; v <= g.n_ext; ++v) {
    reach[v] = 1;
    stack.push_back(v);
  }
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const Edge& e : g.edges) {
      int w = -1;
      if (e.src == v) w = e.dst;
      if (e.dst == v) w = e.src;
      if (w > 0 && !reach[w]) {
        reach[w] = 1;
        stack.push_back(w);
      }
    }
  }
  for (int v = g.n_ext + 1; v <= g.n_vertices(); ++v) {
    if (!reach[v]) {
      a.clause = 5;
      a.detail = "internal " + vertex_name(g, v) + " not connected to any "
                 "external vertex";
      return a;
    }
  }
  a.ok = true;
  a.clause = 0;
  return a;
}

namespace {

// Parity of the permutation sorting `edges`; the edge list must be free of
// duplicates. Returns +1/-1.
int sort_parity(std::vector<Edge>& edges) {
  int n = static_cast<int>(edges.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return edges[a] < edges[b]; });
  // Count inversions of idx.
  int inversions = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (idx[i] > idx[j]) ++inversions;
  std::vector<Edge> sorted(n);
  for (int i = 0; i < n; ++i) sorted[i] = edges[idx[i]];
  edges = std::move(sorted);
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string graph_key(const DirectedGraph& g) {
  std::string key =
      std::to_string(g.n_ext) + ":" + std::to_string(g.n_int) + "[";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (i) key += ",";
    key += vertex_name(g, g.edges[i].src) + ">" +
           vertex_name(g, g.edges[i].dst);
  }
  return key + "]";
}

DirectedGraph graph_from_key(const std::string& key) {
  DirectedGraph g;
  std::size_t pos = 0;
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos])))
      ++pos;
    if (pos == start) throw std::runtime_error("bad graph key: " + key);
    return std::stoi(key.substr(start, pos - start));
  };
  auto expect = [&](char c) {
    if (pos >= key.size() || key[pos] != c)
      throw std::runtime_error("bad graph key: " + key);
    ++pos;
  };
  g.n_ext = read_int();
  expect(':');
  g.n_int = read_int();
  expect('[');
  auto read_vertex = [&]() {
    bool internal = pos < key.size() && key[pos] == 'i';
    if (internal) ++pos;
    int v = read_int();
    return internal ? g.n_ext + v : v;
  };
  if (pos < key.size() && key[pos] != ']') {
    while (true) {
      Edge e;
      e.src = read_vertex();
      expect('>');
      e.dst = read_vertex();
      g.edges.push_back(e);
      if (pos < key.size() && key[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  expect(']');
  return g;
}

Canonical canonicalize(const DirectedGraph& g) {
  Admissibility a = check_admissible(g);
  if (!a.ok)
    throw std::runtime_error("canonicalize: inadmissible graph (" + a.detail +
                             ")");
  if (g.n_int > 8)
    throw std::runtime_error("canonicalize: too many internal vertices");

  std::vector<int> perm(g.n_int);
  std::iota(perm.begin(), perm.end(), 0);

  bool have_best = false;
  std::vector<Edge> best_edges;
  int best_sign = 1;
  bool odd_automorphism = false;

  do {
    std::vector<Edge> edges = g.edges;
    for (Edge& e : edges) {
      if (g.is_internal(e.src)) e.src = g.n_ext + 1 + perm[e.src - g.n_ext - 1];
      if (g.is_internal(e.dst)) e.dst = g.n_ext + 1 + perm[e.dst - g.n_ext - 1];
    }
    int sign = sort_parity(edges);
    if (!have_best || edges < best_edges) {
      have_best = true;
      best_edges = edges;
      best_sign = sign;
      odd_automorphism = false;
    } else if (edges == best_edges && sign != best_sign) {
      odd_automorphism = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Canonical c;
  if (odd_automorphism) {
    c.is_zero = true;
    return c;
  }
  c.sign = best_sign;
  c.canonical.graph = DirectedGraph{g.n_ext, g.n_int, best_edges};
  c.canonical.key = graph_key(c.canonical.graph);
  return c;
}

}  // namespace gmc
