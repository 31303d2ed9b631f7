#include "graphmc/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gmc {

namespace {

// All ordered pairs (u,v), u != v, over 1..V in lexicographic order.
std::vector<Edge> all_arcs(int V) {
  std::vector<Edge> arcs;
  for (int u = 1; u <= V; ++u)
    for (int v = 1; v <= V; ++v)
      if (u != v) arcs.push_back({u, v});
  return arcs;
}

// Enumerates e-subsets of arcs with degree pruning; calls fn on each graph
// that passes the per-vertex bounds (full admissibility still to be checked
// by the caller).
template <typename Fn>
void choose_arcs(const DirectedGraph& proto, const std::vector<Edge>& arcs,
                 int e, const std::vector<int>& in_cap,
                 const std::vector<int>& out_cap,
                 const std::vector<int>& val_cap, Fn&& fn) {
  int V = proto.n_vertices();
  std::vector<int> in(V + 1, 0), out(V + 1, 0);
  DirectedGraph g = proto;
  g.edges.reserve(e);

  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (g.n_edges() == e) {
      fn(g);
      return;
    }
    int need = e - g.n_edges();
    if (start + need > arcs.size()) return;
    for (std::size_t i = start; i + (need - 1) < arcs.size(); ++i) {
      const Edge& a = arcs[i];
      if (out[a.src] + 1 > out_cap[a.src]) continue;
      if (in[a.dst] + 1 > in_cap[a.dst]) continue;
      if (in[a.src] + out[a.src] + 1 > val_cap[a.src]) continue;
      if (in[a.dst] + out[a.dst] + 1 > val_cap[a.dst]) continue;
      ++out[a.src];
      ++in[a.dst];
      g.edges.push_back(a);
      self(self, i + 1);
      g.edges.pop_back();
      --out[a.src];
      --in[a.dst];
    }
  };
  rec(rec, 0);
}

constexpr int kUnbounded = 1 << 20;

}  // namespace

std::vector<CanonicalGraph> enumerate_slice(int n, int m, int e) {
  DirectedGraph proto{n, m, {}};
  int V = n + m;
  std::vector<int> in_cap(V + 1, kUnbounded), out_cap(V + 1, kUnbounded),
      val_cap(V + 1, kUnbounded);
  for (int v = n + 1; v <= V; ++v) {
    in_cap[v] = 1;
    out_cap[v] = 2;
    val_cap[v] = 3;
  }
  std::map<std::string, CanonicalGraph> found;
  choose_arcs(proto, all_arcs(V), e, in_cap, out_cap, val_cap,
              [&](const DirectedGraph& g) {
                if (!check_admissible(g).ok) return;
                Canonical c = canonicalize(g);
                if (c.is_zero) return;
                found.emplace(c.canonical.key, c.canonical);
              });
  std::vector<CanonicalGraph> out;
  out.reserve(found.size());
  for (auto& [key, cg] : found) out.push_back(cg);
  return out;
}

std::vector<CanonicalGraph> enumerate_graphs(int n, int m_max, int e_max) {
  std::vector<CanonicalGraph> out;
  for (int m = 0; m <= m_max; ++m)
    for (int e = 0; e <= e_max; ++e) {
      auto slice = enumerate_slice(n, m, e);
      out.insert(out.end(), slice.begin(), slice.end());
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DirectedGraph> enumerate_transient_parents(int n, int m, int e,
                                                       int special_in,
                                                       int special_out) {
  std::vector<DirectedGraph> out;
  if (m < 1) return out;
  DirectedGraph proto{n, m, {}};
  int V = n + m;
  int special = V;  // last internal vertex carries the special profile
  std::vector<int> in_cap(V + 1, kUnbounded), out_cap(V + 1, kUnbounded),
      val_cap(V + 1, kUnbounded);
  for (int v = n + 1; v <= V; ++v) {
    in_cap[v] = 1;
    out_cap[v] = 2;
    val_cap[v] = 3;
  }
  in_cap[special] = special_in;
  out_cap[special] = special_out;
  val_cap[special] = special_in + special_out;

  std::set<std::string> seen;
  choose_arcs(proto, all_arcs(V), e, in_cap, out_cap, val_cap,
              [&](const DirectedGraph& g) {
                // The special vertex must have exactly the requested profile;
                // the normal internals obey admissibility; loops and double
                // edges are excluded by construction of arc subsets.
                int sin = 0, sout = 0;
                for (const Edge& ed : g.edges) {
                  if (ed.src == special) ++sout;
                  if (ed.dst == special) ++sin;
                }
                if (sin != special_in || sout != special_out) return;
                // Undirected reachability to externals for all internals.
                std::vector<char> reach(V + 1, 0);
                std::vector<int> stack;
                for (int v = 1; v <= n; ++v) {
                  reach[v] = 1;
                  stack.push_back(v);
                }
                while (!stack.empty()) {
                  int v = stack.back();
                  stack.pop_back();
                  for (const Edge& ed : g.edges) {
                    int w = -1;
                    if (ed.src == v) w = ed.dst;
                    if (ed.dst == v) w = ed.src;
                    if (w > 0 && !reach[w]) {
                      reach[w] = 1;
                      stack.push_back(w);
                    }
                  }
                }
                for (int v = n + 1; v <= V; ++v)
                  if (!reach[v]) return;
                // Dedupe up to relabeling of the normal internals: canonical
                // form with the special vertex pinned. Sorting the edge list
                // is enough of a key here; relabelings of normal internals
                // are quotiented by trying all of them and keeping the least.
                std::string best;
                std::vector<int> perm(m - 1);
                for (int i = 0; i < m - 1; ++i) perm[i] = i;
                do {
                  DirectedGraph h = g;
                  for (Edge& ed : h.edges) {
                    auto relabel = [&](int v) {
                      if (v <= n || v == special) return v;
                      return n + 1 + perm[v - n - 1];
                    };
                    ed.src = relabel(ed.src);
                    ed.dst = relabel(ed.dst);
                  }
                  std::sort(h.edges.begin(), h.edges.end());
                  std::string key = graph_key(h);
                  if (best.empty() || key < best) best = key;
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (seen.insert(best).second)
                  out.push_back(graph_from_key(best));
              });
  return out;
}

}  // namespace gmc
