#include "graphmc/ihx.hpp"

#include <mutex>
#include <stdexcept>

#include "graphmc/enumerate.hpp"

namespace gmc {

GraphSum split_vertex(const DirectedGraph& parent, int v) {
  if (!parent.is_internal(v))
    throw std::runtime_error("split_vertex: not an internal vertex");

  // The split graph has one extra internal vertex. Renumber so that v becomes
  // v1 and the new vertex v2 is appended as the last internal.
  DirectedGraph proto{parent.n_ext, parent.n_int + 1, {}};
  int v1 = v;
  int v2 = proto.n_vertices();

  std::vector<int> incident;  // edge indices touching v (no loops possible)
  for (int i = 0; i < parent.n_edges(); ++i)
    if (parent.edges[i].src == v || parent.edges[i].dst == v)
      incident.push_back(i);

  GraphSum out;
  std::size_t combos = std::size_t{1} << incident.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    DirectedGraph g = proto;
    g.edges = parent.edges;
    for (std::size_t b = 0; b < incident.size(); ++b) {
      Edge& e = g.edges[incident[b]];
      int target = (mask & (std::size_t{1} << b)) ? v2 : v1;
      if (e.src == v) e.src = target;
      if (e.dst == v) e.dst = target;
    }
    g.edges.push_back({v1, v2});  // the new edge, last in the order
    if (!check_admissible(g).ok) continue;
    out.add_graph(g, Rat(1));
  }
  return out;
}

std::vector<IhxRelation> relations_at(int n, int m, int e) {
  std::vector<IhxRelation> rels;
  if (m < 1 || e < 1) return rels;
  for (const CanonicalGraph& parent : enumerate_slice(n, m - 1, e - 1)) {
    for (int v = n + 1; v <= parent.graph.n_vertices(); ++v) {
      GraphSum rel = split_vertex(parent.graph, v);
      if (rel.empty()) continue;
      rels.push_back({parent.key, v - n, 1, std::move(rel)});
    }
  }
  // Transient parents: one vertex with the profile of a contracted edge pair,
  // either four-valent one-in/three-out or trivalent all-out.
  for (auto [sin, sout] : {std::pair{1, 3}, std::pair{0, 3}}) {
    for (const DirectedGraph& parent :
         enumerate_transient_parents(n, m - 1, e - 1, sin, sout)) {
      int v = parent.n_vertices();  // special vertex is the last internal
      GraphSum rel = split_vertex(parent, v);
      if (rel.empty()) continue;
      rels.push_back({graph_key(parent), v - n, 2, std::move(rel)});
    }
  }
  return rels;
}

std::vector<IhxRelation> generate_ihx(int n, int m_max, int e_max) {
  std::vector<IhxRelation> rels;
  for (int m = 1; m <= m_max; ++m)
    for (int e = 1; e <= e_max; ++e) {
      auto r = relations_at(n, m, e);
      rels.insert(rels.end(), std::make_move_iterator(r.begin()),
                  std::make_move_iterator(r.end()));
    }
  return rels;
}

QuotientSpace::QuotientSpace(int n, int m_max, int e_max)
    : n_(n), m_max_(m_max), e_max_(e_max) {
  for (const IhxRelation& rel : generate_ihx(n, m_max, e_max)) {
    ++n_generated_;
    bool univalent = false;
    if (rel.type == 1) {
      DirectedGraph parent = graph_from_key(rel.parent_key);
      int deg = 0;
      for (const Edge& e : parent.edges) {
        if (e.src == n + rel.vertex) ++deg;
        if (e.dst == n + rel.vertex) ++deg;
      }
      univalent = (deg == 1);
    }
    if (univalent) ++n_univalent_split_;
    basis_.insert(rel.relation.vec());
  }
}

GraphSum QuotientSpace::reduce(const GraphSum& x) const {
  x.for_each([&](const DirectedGraph& g, const Rat&) {
    if (g.n_ext != n_ || g.n_int > m_max_ || g.n_edges() > e_max_)
      throw std::runtime_error(
          "reduce: support outside slice, widen bounds (term " + graph_key(g) +
          " vs arity " + std::to_string(n_) + ", m<=" + std::to_string(m_max_) +
          ", e<=" + std::to_string(e_max_) + ")");
  });
  SparseVec nf = basis_.reduce(x.vec());
  GraphSum out;
  for (const auto& [key, c] : nf.entries()) out.add_canonical(key, c);
  return out;
}

namespace {

struct SliceKey {
  int n, m, e;
  bool operator<(const SliceKey& o) const {
    return std::tie(n, m, e) < std::tie(o.n, o.m, o.e);
  }
};

class RelationCache {
 public:
  const RowBasis& at(int n, int m, int e) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find({n, m, e});
    if (it != cache_.end()) return *it->second;
    auto basis = std::make_unique<RowBasis>();
    for (const IhxRelation& rel : relations_at(n, m, e))
      basis->insert(rel.relation.vec());
    auto [pos, inserted] = cache_.emplace(SliceKey{n, m, e}, std::move(basis));
    return *pos->second;
  }

 private:
  std::mutex mu_;
  std::map<SliceKey, std::unique_ptr<RowBasis>> cache_;
};

RelationCache& relation_cache() {
  static RelationCache cache;
  return cache;
}

}  // namespace

GraphSum reduce_mod_ihx(const GraphSum& x) {
  // Group terms by exact bidegree, reduce each group by its own relations.
  std::map<SliceKey, SparseVec> groups;
  x.for_each([&](const DirectedGraph& g, const Rat& c) {
    groups[{g.n_ext, g.n_int, g.n_edges()}].add(graph_key(g), c);
  });
  GraphSum out;
  for (auto& [slice, vec] : groups) {
    const RowBasis& rels = relation_cache().at(slice.n, slice.m, slice.e);
    SparseVec nf = rels.reduce(vec);
    for (const auto& [key, c] : nf.entries()) out.add_canonical(key, c);
  }
  return out;
}

bool is_zero_mod_ihx(const GraphSum& x) { return reduce_mod_ihx(x).empty(); }

}  // namespace gmc
