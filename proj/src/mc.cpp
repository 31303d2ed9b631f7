#include "graphmc/mc.hpp"

#include <stdexcept>

#include "graphmc/enumerate.hpp"
#include "graphmc/ihx.hpp"
#include "graphmc/operad.hpp"

namespace gmc {

namespace {

int min_vertices(const GraphSum& s) {
  int v = 1 << 20;
  s.for_each([&](const DirectedGraph& g, const Rat&) {
    v = std::min(v, g.total_vertices());
  });
  return v;
}

int max_vertices_of(const GraphSum& s) {
  int v = 0;
  s.for_each([&](const DirectedGraph& g, const Rat&) {
    v = std::max(v, g.total_vertices());
  });
  return v;
}

}  // namespace

McReport mc_check(const GraphSum& alpha, const TruncationPolicy& trunc) {
  if (!alpha.homogeneous_lie_degree(1))
    throw std::runtime_error("mc_check: alpha must have Lie degree one");
  McReport rep;
  GraphSum sq = Rat(1, 2) * bracket(alpha, alpha);
  sq = sq.truncate_vertices(trunc.max_vertices);
  for (int g : sq.gradings()) {
    GraphSum comp = sq.grading_part(g);
    if (!comp.empty()) rep.raw[g] = comp;
    GraphSum red = reduce_mod_ihx(comp);
    if (!red.empty()) rep.reduced[g] = red;
  }
  // A residual at total vertex count V picks up [given, tail] contributions
  // only for V >= (max given vertices + 1) + (min vertices) - 1.
  if (!alpha.empty()) {
    int determined_vertices = max_vertices_of(alpha) + min_vertices(alpha) - 1;
    rep.determined_grading = determined_vertices - 1;
  }
  return rep;
}

GraphSum gauge_act_raw(const GraphSum& xi, const GraphSum& alpha,
                       const TruncationPolicy& trunc) {
  if (!xi.empty() && !xi.homogeneous_lie_degree(0))
    throw std::runtime_error("gauge_act: xi must have Lie degree zero");
  GraphSum acc = alpha.truncate_vertices(trunc.max_vertices);
  GraphSum term = acc;
  Rat factorial(1);
  for (int k = 1; !term.empty(); ++k) {
    term = bracket(xi, term).truncate_vertices(trunc.max_vertices);
    factorial *= k;
    acc += (Rat(1) / factorial) * term;
  }
  return acc;
}

GraphSum gauge_act(const GraphSum& xi, const GraphSum& alpha,
                   const TruncationPolicy& trunc) {
  return reduce_mod_ihx(gauge_act_raw(xi, alpha, trunc));
}

ObstructionResult obstruction_test(const GraphSum& alpha, int k) {
  if (k < 2) throw std::runtime_error("obstruction_test: k must be >= 2");
  GraphSum alpha1 = alpha.grading_part(1);
  GraphSum alphak = alpha.grading_part(k);

  // alpha^(1) must satisfy the Maurer-Cartan equation on the nose (its
  // square sits in grading 2, fully determined).
  GraphSum sq = reduce_mod_ihx(Rat(1, 2) * bracket(alpha1, alpha1));
  if (!sq.empty())
    throw std::runtime_error(
        "obstruction_test: the grading-one part is not Maurer-Cartan");

  ObstructionResult res;
  res.cocycle = is_zero_mod_ihx(bracket(alpha1, alphak));
  res.target = reduce_mod_ihx(alphak);

  // Complete Lie-degree-0 slice at second grading k-1: arity n carries
  // m = k - n internals and e = 2m + n - 1 edges.
  std::vector<CanonicalGraph> domain;
  for (int n = 1; n <= k; ++n) {
    int m = k - n;
    int e = 2 * m + n - 1;
    if (e < 0) continue;
    auto slice = enumerate_slice(n, m, e);
    domain.insert(domain.end(), slice.begin(), slice.end());
  }

  RowBasis image(/*track_history=*/true);
  for (std::size_t i = 0; i < domain.size(); ++i) {
    res.domain_keys.push_back(domain[i].key);
    GraphSum img = reduce_mod_ihx(bracket(alpha1, GraphSum::single(
                                              domain[i].graph)));
    res.image_rows.push_back(img.vec());
    image.insert(img.vec(), "#" + std::to_string(i));
  }

  SparseVec hist;
  SparseVec residue = image.reduce(res.target.vec(), &hist);
  for (const auto& [key, c] : residue.entries())
    res.residue.add_canonical(key, c);
  if (!residue.empty()) {
    res.obstructed = true;
    return res;
  }
  GraphSum eta;
  for (const auto& [tag, c] : hist.entries()) {
    std::size_t idx = std::stoul(tag.substr(1));
    eta += c * GraphSum::single(domain[idx].graph);
  }
  res.witness = eta;
  return res;
}

bool closedness_check(const GraphSum& x, const GraphSum& alpha1) {
  return is_zero_mod_ihx(bracket(alpha1, x));
}

}  // namespace gmc
