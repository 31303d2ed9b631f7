#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "graphmc/graph.hpp"
#include "graphmc/sparse.hpp"

namespace gmc {

// A finite linear combination of canonical graphs with exact rational
// coefficients. Terms may mix arities; this is the working element of the
// graded Lie algebra of graphs.
class GraphSum {
 public:
  GraphSum() = default;

  static GraphSum single(const DirectedGraph& g, const Rat& c = Rat(1)) {
    GraphSum s;
    s.add_graph(g, c);
    return s;
  }

  // Adds c * g, canonicalizing and dropping ZERO graphs.
  void add_graph(const DirectedGraph& g, const Rat& c) {
    if (c == 0) return;
    Canonical canon = canonicalize(g);
    if (canon.is_zero) return;
    terms_.add(canon.canonical.key, c * canon.sign);
  }

  void add_canonical(const std::string& key, const Rat& c) {
    terms_.add(key, c);
  }

  bool empty() const { return terms_.empty(); }
  std::size_t n_terms() const { return terms_.size(); }
  const SparseVec& vec() const { return terms_; }

  GraphSum& operator+=(const GraphSum& o) {
    terms_ += o.terms_;
    return *this;
  }
  GraphSum& operator-=(const GraphSum& o) {
    terms_ -= o.terms_;
    return *this;
  }
  GraphSum& operator*=(const Rat& c) {
    terms_ *= c;
    return *this;
  }
  friend GraphSum operator+(GraphSum a, const GraphSum& b) { return a += b; }
  friend GraphSum operator-(GraphSum a, const GraphSum& b) { return a -= b; }
  friend GraphSum operator*(const Rat& c, GraphSum a) { return a *= c; }
  bool operator==(const GraphSum& o) const = default;

  void for_each(const std::function<void(const DirectedGraph&, const Rat&)>&
                    fn) const {
    for (const auto& [key, c] : terms_.entries()) fn(graph_from_key(key), c);
  }

  // Component with the given predicate on terms.
  GraphSum filter(const std::function<bool(const DirectedGraph&)>& pred) const {
    GraphSum out;
    for (const auto& [key, c] : terms_.entries()) {
      if (pred(graph_from_key(key))) out.terms_.add(key, c);
    }
    return out;
  }

  GraphSum arity_part(int n) const {
    return filter([n](const DirectedGraph& g) { return g.n_ext == n; });
  }
  GraphSum grading_part(int grading) const {
    return filter([grading](const DirectedGraph& g) {
      return g.second_grading() == grading;
    });
  }
  GraphSum truncate_vertices(int max_vertices) const {
    return filter([max_vertices](const DirectedGraph& g) {
      return g.total_vertices() <= max_vertices;
    });
  }

  std::vector<int> arities() const {
    std::vector<int> out;
    for (const auto& [key, c] : terms_.entries()) {
      int n = graph_from_key(key).n_ext;
      if (out.empty() || out.back() != n) {
        if (std::find(out.begin(), out.end(), n) == out.end())
          out.push_back(n);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> gradings() const {
    std::vector<int> out;
    for (const auto& [key, c] : terms_.entries()) {
      int s = graph_from_key(key).second_grading();
      if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // True iff every term has the given Lie degree.
  bool homogeneous_lie_degree(int d) const {
    for (const auto& [key, c] : terms_.entries())
      if (graph_from_key(key).lie_degree() != d) return false;
    return true;
  }

  std::vector<int> lie_degrees() const {
    std::vector<int> out;
    for (const auto& [key, c] : terms_.entries()) {
      int d = graph_from_key(key).lie_degree();
      if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  SparseVec terms_;
};

}  // namespace gmc
