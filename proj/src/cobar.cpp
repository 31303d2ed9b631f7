#include "graphmc/cobar.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphmc/enumerate.hpp"
#include "graphmc/fixtures.hpp"
#include "graphmc/ihx.hpp"
#include "graphmc/operad.hpp"

namespace gmc {

int SetComposition::ground_size() const {
  int n = 0;
  for (const auto& b : blocks) n += static_cast<int>(b.size());
  return n;
}

std::string SetComposition::key() const {
  std::string out;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i) out += "|";
    for (std::size_t j = 0; j < blocks[i].size(); ++j) {
      if (j) out += ",";
      out += std::to_string(blocks[i][j]);
    }
  }
  return out;
}

SetComposition SetComposition::from_key(const std::string& key) {
  SetComposition c;
  std::vector<int> cur;
  int num = -1;
  auto flush_num = [&]() {
    if (num >= 0) cur.push_back(num);
    num = -1;
  };
  for (char ch : key) {
    if (ch == '|') {
      flush_num();
      c.blocks.push_back(cur);
      cur.clear();
    } else if (ch == ',') {
      flush_num();
    } else {
      if (num < 0) num = 0;
      num = num * 10 + (ch - '0');
    }
  }
  flush_num();
  c.blocks.push_back(cur);
  return c;
}

SetComposition SetComposition::relabeled(const std::vector<int>& sigma) const {
  SetComposition out;
  for (const auto& b : blocks) {
    std::vector<int> nb;
    for (int v : b) nb.push_back(sigma[v - 1]);
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(nb);
  }
  return out;
}

CobarElement CobarElement::single(const SetComposition& c, const Rat& r) {
  CobarElement x;
  x.add(c, r);
  return x;
}

CobarElement cobar_d(const SetComposition& c) {
  CobarElement out;
  for (int i = 0; i < c.n_blocks(); ++i) {
    const auto& block = c.blocks[i];
    auto s = block.size();
    if (s < 2) continue;
    Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);  // (-1)^i, blocks from 1
    for (std::size_t mask = 1; mask + 1 < (std::size_t{1} << s); ++mask) {
      std::vector<int> a, b;
      for (std::size_t j = 0; j < s; ++j)
        ((mask >> j) & 1 ? a : b).push_back(block[j]);
      SetComposition nc;
      nc.blocks.reserve(c.blocks.size() + 1);
      for (int t = 0; t < i; ++t) nc.blocks.push_back(c.blocks[t]);
      nc.blocks.push_back(a);
      nc.blocks.push_back(b);
      for (int t = i + 1; t < c.n_blocks(); ++t)
        nc.blocks.push_back(c.blocks[t]);
      out.add(nc, sign);
    }
  }
  return out;
}

CobarElement cobar_d(const CobarElement& x) {
  CobarElement out;
  x.for_each([&](const SetComposition& c, const Rat& coef) {
    CobarElement dc = cobar_d(c);
    dc *= coef;
    out += dc;
  });
  return out;
}

namespace {

void compositions_rec(std::vector<int> remaining,
                      std::vector<std::vector<int>>& acc,
                      std::vector<SetComposition>& out) {
  if (remaining.empty()) {
    out.push_back({acc});
    return;
  }
  // First block element is the least remaining one; choose the rest.
  int first = remaining[0];
  std::vector<int> rest(remaining.begin() + 1, remaining.end());
  auto r = rest.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
    std::vector<int> block{first}, left;
    for (std::size_t j = 0; j < r; ++j)
      ((mask >> j) & 1 ? block : left).push_back(rest[j]);
    // The new block can go at any position later; to enumerate ordered
    // compositions we instead recurse with the block placed and interleave.
    acc.push_back(block);
    compositions_rec(left, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<SetComposition> enumerate_compositions(int n) {
  // Ordered set partitions: enumerate unordered partitions via the recursion
  // above (which fixes block order by least element) and then permute blocks.
  std::vector<int> ground(n);
  std::iota(ground.begin(), ground.end(), 1);
  std::vector<std::vector<int>> acc;
  std::vector<SetComposition> by_least;
  compositions_rec(ground, acc, by_least);

  std::set<std::string> seen;
  std::vector<SetComposition> out;
  for (const auto& base : by_least) {
    std::vector<int> idx(base.blocks.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
      SetComposition c;
      for (int i : idx) c.blocks.push_back(base.blocks[i]);
      if (seen.insert(c.key()).second) out.push_back(c);
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  std::sort(out.begin(), out.end(),
            [](const SetComposition& a, const SetComposition& b) {
              return a.key() < b.key();
            });
  return out;
}

std::vector<SetComposition> enumerate_compositions(int n, int k) {
  std::vector<SetComposition> out;
  for (const auto& c : enumerate_compositions(n))
    if (c.n_blocks() == k) out.push_back(c);
  return out;
}

CobarElement omega(int n) {
  CobarElement out;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  Rat factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= i;
  do {
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inv;
    SetComposition c;
    for (int v : perm) c.blocks.push_back({v});
    out.add(c, Rat(inv % 2 ? -1 : 1) / factorial);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::size_t CobarCohomology::total() const {
  std::size_t t = 0;
  for (auto h : homology) t += h;
  return t;
}

CobarCohomology cobar_cohomology(int n) {
  CobarCohomology rep;
  rep.n = n;
  rep.dims.assign(n, 0);
  rep.ranks.assign(n, 0);
  rep.homology.assign(n, 0);
  auto all = enumerate_compositions(n);
  std::vector<std::vector<SetComposition>> by_k(n + 1);
  for (const auto& c : all) by_k[c.n_blocks()].push_back(c);
  for (int k = 1; k <= n; ++k) {
    rep.dims[k - 1] = by_k[k].size();
    RowBasis image;
    for (const auto& c : by_k[k]) image.insert(cobar_d(c).vec());
    rep.ranks[k - 1] = image.rank();
  }
  for (int k = 1; k <= n; ++k) {
    std::size_t below = (k >= 2) ? rep.ranks[k - 2] : 0;
    rep.homology[k - 1] = rep.dims[k - 1] - rep.ranks[k - 1] - below;
  }
  // The top class: omega is closed (top degree) and not exact.
  RowBasis image_top;
  if (n >= 2)
    for (const auto& c : by_k[n - 1]) image_top.insert(cobar_d(c).vec());
  CobarElement w = omega(n);
  rep.top_is_omega = !image_top.contains(w.vec()) &&
                     rep.homology[n - 1] == 1 && cobar_d(w).empty();
  return rep;
}

GraphSum glue(const DirectedGraph& core, const SetComposition& comp) {
  for (int v = 1; v <= core.n_ext; ++v) {
    int deg = 0;
    for (const Edge& e : core.edges) deg += (e.src == v) + (e.dst == v);
    if (deg != 1)
      throw std::runtime_error("glue: external vertex " +
                               std::to_string(v) + " is not univalent");
  }
  if (comp.ground_size() != core.n_ext)
    throw std::runtime_error("glue: composition size mismatch");

  int k = comp.n_blocks();
  std::vector<int> block_of(core.n_ext + 1, 0);
  for (int b = 0; b < k; ++b)
    for (int v : comp.blocks[b]) block_of[v] = b + 1;

  DirectedGraph g{k, core.n_int, {}};
  for (const Edge& e : core.edges) {
    auto remap = [&](int v) {
      if (v <= core.n_ext) return block_of[v];
      return k + (v - core.n_ext);
    };
    g.edges.push_back({remap(e.src), remap(e.dst)});
  }
  if (!check_admissible(g).ok) return GraphSum();
  return GraphSum::single(g);
}

GraphSum glue(const DirectedGraph& core, const CobarElement& x) {
  GraphSum out;
  x.for_each([&](const SetComposition& c, const Rat& coef) {
    out += coef * glue(core, c);
  });
  return out;
}

Unglued unglue(const DirectedGraph& g) {
  Unglued u;
  int n_legs = 0;
  for (const Edge& e : g.edges)
    n_legs += (g.is_external(e.src) ? 1 : 0) + (g.is_external(e.dst) ? 1 : 0);
  u.core.n_ext = n_legs;
  u.core.n_int = g.n_int;
  u.comp.blocks.assign(g.n_ext, {});
  int next_leg = 0;
  for (const Edge& e : g.edges) {
    Edge ne = e;
    if (g.is_external(e.src)) {
      ne.src = ++next_leg;
      u.comp.blocks[e.src - 1].push_back(ne.src);
    } else {
      ne.src = n_legs + (e.src - g.n_ext);
    }
    if (g.is_external(e.dst)) {
      ne.dst = ++next_leg;
      u.comp.blocks[e.dst - 1].push_back(ne.dst);
    } else {
      ne.dst = n_legs + (e.dst - g.n_ext);
    }
    u.core.edges.push_back(ne);
  }
  // Isolated externals would need empty blocks; the reduced model excludes
  // them.
  for (const auto& b : u.comp.blocks)
    if (b.empty())
      throw std::runtime_error("unglue: graph has an isolated external");
  return u;
}

GlueClass glue_class(const DirectedGraph& core, const SetComposition& comp) {
  int n = core.n_ext;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  GlueClass cls;
  std::string best;
  int best_sign = 0;
  bool zero = false;
  do {
    DirectedGraph relabeled = core;
    for (Edge& e : relabeled.edges) {
      if (relabeled.is_external(e.src)) e.src = sigma[e.src - 1];
      if (relabeled.is_external(e.dst)) e.dst = sigma[e.dst - 1];
    }
    Canonical c = canonicalize(relabeled);
    if (c.is_zero) {
      zero = true;
      break;
    }
    std::string key = c.canonical.key + "x" + comp.relabeled(sigma).key();
    if (best.empty() || key < best) {
      best = key;
      best_sign = c.sign;
    } else if (key == best && c.sign != best_sign) {
      zero = true;
      break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  cls.zero = zero;
  cls.key = zero ? "" : best;
  return cls;
}

std::vector<CanonicalGraph> enumerate_uni_cores(int n, int m_max) {
  std::vector<CanonicalGraph> out;
  // A univalent-external core with m internals has n leg edges plus up to
  // m*(m-1) internal arcs (in-degree <= 1 caps this hard); sweep e and filter.
  for (int m = 0; m <= m_max; ++m) {
    int e_hi = n + 2 * std::max(m, 0);
    for (int e = 0; e <= e_hi; ++e) {
      for (const CanonicalGraph& cg : enumerate_slice(n, m, e)) {
        bool uni = true;
        for (int v = 1; v <= n && uni; ++v) {
          int deg = 0;
          for (const Edge& ed : cg.graph.edges)
            deg += (ed.src == v) + (ed.dst == v);
          uni = (deg == 1);
        }
        if (uni) out.push_back(cg);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SliceCohomologyReport slice_cohomology_vs_corollary(int n, int m_max) {
  SliceCohomologyReport rep;
  rep.n = n;
  rep.m_max = m_max;
  rep.complex_dims.assign(n, 0);
  rep.homology.assign(n, 0);

  const GraphSum& a2 = fixture("a2");

  // Bounded complex: graphs with k externals, n external edge-incidences, no
  // isolated externals, and at most m_max internals. ad_a2 preserves all of
  // these. Work in normal-form (mod relations) coordinates.
  auto slice_basis = [&](int k) {
    std::vector<DirectedGraph> basis;
    for (int m = 0; m <= m_max; ++m) {
      for (int e = 0; e <= n + 2 * m; ++e) {
        for (const CanonicalGraph& cg : enumerate_slice(k, m, e)) {
          int inc = 0;
          bool isolated = false;
          for (int v = 1; v <= k; ++v) {
            int deg = 0;
            for (const Edge& ed : cg.graph.edges)
              deg += (ed.src == v) + (ed.dst == v);
            if (deg == 0) isolated = true;
            inc += deg;
          }
          if (!isolated && inc == n) basis.push_back(cg.graph);
        }
      }
    }
    return basis;
  };

  std::vector<std::size_t> qdim(n + 2, 0), rank(n + 2, 0);
  for (int k = 1; k <= n; ++k) {
    auto basis = slice_basis(k);
    RowBasis nf;
    for (const auto& g : basis)
      nf.insert(reduce_mod_ihx(GraphSum::single(g)).vec());
    qdim[k] = nf.rank();
    rep.complex_dims[k - 1] = qdim[k];
    RowBasis image;
    for (const auto& g : basis) {
      GraphSum d = reduce_mod_ihx(bracket(a2, GraphSum::single(g)));
      // The differential must stay inside the no-isolated-external span.
      d.for_each([&](const DirectedGraph& h, const Rat&) {
        for (int v = 1; v <= h.n_ext; ++v) {
          int deg = 0;
          for (const Edge& ed : h.edges) deg += (ed.src == v) + (ed.dst == v);
          if (deg == 0)
            throw std::runtime_error(
                "slice_cohomology: differential left the complex");
        }
      });
      image.insert(d.vec());
    }
    rank[k] = image.rank();
  }
  for (int k = 1; k <= n; ++k)
    rep.homology[k - 1] = qdim[k] - rank[k] - (k >= 2 ? rank[k - 1] : 0);

  // Expected top dimension: rank of antisymmetrized univalent cores.
  RowBasis anti;
  for (const CanonicalGraph& core : enumerate_uni_cores(n, m_max)) {
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    GraphSum sum;
    do {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (sigma[i] > sigma[j]) ++inv;
      DirectedGraph relabeled = core.graph;
      for (Edge& e : relabeled.edges) {
        if (relabeled.is_external(e.src)) e.src = sigma[e.src - 1];
        if (relabeled.is_external(e.dst)) e.dst = sigma[e.dst - 1];
      }
      sum += Rat(inv % 2 ? -1 : 1) * GraphSum::single(relabeled);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    anti.insert(sum.vec());
  }
  rep.antisym_core_rank = anti.rank();

  bool ok = (rep.homology[n - 1] == rep.antisym_core_rank);
  for (int k = 1; k < n; ++k) ok = ok && rep.homology[k - 1] == 0;
  rep.match = ok;
  return rep;
}

}  // namespace gmc
