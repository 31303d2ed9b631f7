#pragma once

#include <string>
#include <vector>

#include "graphmc/graph_sum.hpp"
#include "graphmc/liedata.hpp"
#include "graphmc/sparse.hpp"

namespace gmc {

// Monomial of K[x_1..x_d] (x) Lambda[p^1..p^d]: commuting x's by exponent
// vector, anticommuting p's by a sorted index set (1-based). Degree = number
// of p factors.
struct PolyMonomial {
  std::vector<int> xexp;
  std::vector<int> pset;

  int p_degree() const { return static_cast<int>(pset.size()); }
  std::string key() const;
  static PolyMonomial from_key(const std::string& key);
  static PolyMonomial one(int dim) { return {std::vector<int>(dim, 0), {}}; }
};

// Element of the graded-commutative algebra over exact rationals.
class PolyElement {
 public:
  PolyElement() = default;
  explicit PolyElement(int dim) : dim_(dim) {}

  static PolyElement x(int i, int dim);   // x_i, 1-based
  static PolyElement p(int i, int dim);   // p^i, 1-based
  static PolyElement constant(const Rat& c, int dim);

  int dim() const { return dim_; }
  bool empty() const { return vec_.empty(); }
  const SparseVec& vec() const { return vec_; }
  void add(const PolyMonomial& m, const Rat& c) { vec_.add(m.key(), c); }

  PolyElement& operator+=(const PolyElement& o);
  PolyElement& operator-=(const PolyElement& o);
  PolyElement& operator*=(const Rat& c) {
    vec_ *= c;
    return *this;
  }
  friend PolyElement operator+(PolyElement a, const PolyElement& b) {
    return a += b;
  }
  friend PolyElement operator-(PolyElement a, const PolyElement& b) {
    return a -= b;
  }
  friend PolyElement operator*(const Rat& c, PolyElement a) { return a *= c; }
  PolyElement operator*(const PolyElement& o) const;  // Koszul signs
  bool operator==(const PolyElement& o) const { return vec_ == o.vec_; }

  PolyElement dx(int i) const;  // d/dx_i
  PolyElement dp(int i) const;  // left d/dp^i

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [key, c] : vec_.entries())
      fn(PolyMonomial::from_key(key), c);
  }

  std::string str() const;  // human-readable, deterministic

 private:
  int dim_ = 0;
  SparseVec vec_;
};

// The quadratic element pi = c_{ij}^k x_k p^i p^j.
PolyElement make_pi(const LieData& L);

// Element of A^{(x) N}: keys are '#'-joined monomial keys. Operators applied
// to tensor factors carry Koszul signs past the preceding factors.
class TensorElement {
 public:
  TensorElement() = default;
  TensorElement(int dim, int n_factors) : dim_(dim), factors_(n_factors) {}

  static TensorElement product(const std::vector<PolyElement>& factors);

  bool empty() const { return vec_.empty(); }
  int n_factors() const { return factors_; }
  const SparseVec& vec() const { return vec_; }

  // Applies tau = sum_l (d/dp^l)_i (d/dx_l)_j (factors 0-based).
  TensorElement tau(int i, int j) const;

  // Multiplies all factors left to right.
  PolyElement collapse() const;

 private:
  int dim_ = 0;
  int factors_ = 0;
  SparseVec vec_;

  friend TensorElement tensor_from_vec(int dim, int factors, SparseVec v);
};

// B_Gamma(args): one copy of pi per internal vertex, tau per edge in edge
// order (first edge applied first), then the graded product. Linear in each
// argument and independent of the internal labeling.
PolyElement b_eval(const DirectedGraph& g, const std::vector<PolyElement>& args,
                   const LieData& L);
PolyElement b_eval(const GraphSum& s, const std::vector<PolyElement>& args,
                   const LieData& L);

// The differential represented by the single-edge graphs; equals
// b_eval(a1, {f}).
PolyElement ce_differential(const PolyElement& f, const LieData& L);

// (d pi/d x_m)(d pi/d p^m) summed over m; zero iff the structure constants
// satisfy the Jacobi identity.
bool jacobi_poly_identity(const LieData& L);
PolyElement jacobi_poly_residual(const LieData& L);

// Arity-2 part of alpha evaluated as a product on A.
PolyElement star_product_eval(const GraphSum& alpha, const PolyElement& f,
                              const PolyElement& g, const LieData& L);

}  // namespace gmc
