#include "graphmc/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace gmc {

namespace {

// Parity sign of merging two ascending p-index lists; nullopt-like zero is
// signaled by returning 0 (shared index).
int merge_sign(const std::vector<int>& a, const std::vector<int>& b,
               std::vector<int>& merged) {
  int inversions = 0;
  for (int x : a)
    for (int y : b) {
      if (x == y) return 0;
      if (x > y) ++inversions;
    }
  merged.clear();
  merged.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(),
             std::back_inserter(merged));
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

std::string PolyMonomial::key() const {
  std::string out = "[";
  for (std::size_t i = 0; i < xexp.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xexp[i]);
  }
  out += "|";
  for (std::size_t i = 0; i < pset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(pset[i]);
  }
  return out + "]";
}

PolyMonomial PolyMonomial::from_key(const std::string& key) {
  PolyMonomial m;
  std::size_t bar = key.find('|');
  auto parse_list = [](const std::string& s, std::vector<int>& out) {
    int num = -1;
    for (char ch : s) {
      if (ch == ',') {
        if (num >= 0) out.push_back(num);
        num = -1;
      } else if (ch >= '0' && ch <= '9') {
        num = (num < 0 ? 0 : num) * 10 + (ch - '0');
      }
    }
    if (num >= 0) out.push_back(num);
  };
  parse_list(key.substr(1, bar - 1), m.xexp);
  parse_list(key.substr(bar + 1, key.size() - bar - 2), m.pset);
  return m;
}

PolyElement PolyElement::x(int i, int dim) {
  PolyElement e(dim);
  PolyMonomial m = PolyMonomial::one(dim);
  m.xexp[i - 1] = 1;
  e.add(m, Rat(1));
  return e;
}

PolyElement PolyElement::p(int i, int dim) {
  PolyElement e(dim);
  PolyMonomial m = PolyMonomial::one(dim);
  m.pset = {i};
  e.add(m, Rat(1));
  return e;
}

PolyElement PolyElement::constant(const Rat& c, int dim) {
  PolyElement e(dim);
  e.add(PolyMonomial::one(dim), c);
  return e;
}

PolyElement& PolyElement::operator+=(const PolyElement& o) {
  if (dim_ == 0) dim_ = o.dim_;
  vec_ += o.vec_;
  return *this;
}

PolyElement& PolyElement::operator-=(const PolyElement& o) {
  if (dim_ == 0) dim_ = o.dim_;
  vec_ -= o.vec_;
  return *this;
}

PolyElement PolyElement::operator*(const PolyElement& o) const {
  PolyElement out(dim_ ? dim_ : o.dim_);
  for_each([&](const PolyMonomial& m1, const Rat& c1) {
    o.for_each([&](const PolyMonomial& m2, const Rat& c2) {
      std::vector<int> merged;
      int sign = merge_sign(m1.pset, m2.pset, merged);
      if (sign == 0) return;
      PolyMonomial m;
      m.xexp.resize(m1.xexp.size());
      for (std::size_t i = 0; i < m.xexp.size(); ++i)
        m.xexp[i] = m1.xexp[i] + m2.xexp[i];
      m.pset = merged;
      out.add(m, c1 * c2 * sign);
    });
  });
  return out;
}

PolyElement PolyElement::dx(int i) const {
  PolyElement out(dim_);
  for_each([&](const PolyMonomial& m, const Rat& c) {
    if (m.xexp[i - 1] == 0) return;
    PolyMonomial d = m;
    d.xexp[i - 1] -= 1;
    out.add(d, c * m.xexp[i - 1]);
  });
  return out;
}

PolyElement PolyElement::dp(int i) const {
  PolyElement out(dim_);
  for_each([&](const PolyMonomial& m, const Rat& c) {
    auto it = std::find(m.pset.begin(), m.pset.end(), i);
    if (it == m.pset.end()) return;
    int before = static_cast<int>(it - m.pset.begin());
    PolyMonomial d = m;
    d.pset.erase(d.pset.begin() + before);
    out.add(d, c * (before % 2 == 0 ? 1 : -1));
  });
  return out;
}

std::string PolyElement::str() const {
  if (vec_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : vec_.entries()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    PolyMonomial m = PolyMonomial::from_key(key);
    bool printed = false;
    if (a != 1) {
      os << rat_str(a);
      printed = true;
    }
    for (std::size_t i = 0; i < m.xexp.size(); ++i) {
      if (m.xexp[i] == 0) continue;
      if (printed) os << "*";
      os << "x_" << (i + 1);
      if (m.xexp[i] > 1) os << "^" << m.xexp[i];
      printed = true;
    }
    for (int s : m.pset) {
      if (printed) os << "*";
      os << "p_" << s;
      printed = true;
    }
    if (!printed) os << "1";
  }
  return os.str();
}

PolyElement make_pi(const LieData& L) {
  PolyElement pi(L.dim);
  for (int i = 0; i < L.dim; ++i)
    for (int j = 0; j < L.dim; ++j)
      for (int k = 0; k < L.dim; ++k) {
        if (L.c[i][j][k] == 0) continue;
        PolyElement term = PolyElement::x(k + 1, L.dim) *
                           PolyElement::p(i + 1, L.dim) *
                           PolyElement::p(j + 1, L.dim);
        pi += L.c[i][j][k] * term;
      }
  return pi;
}

namespace {

std::vector<std::string> split_factors(const std::string& key) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = key.find('#', start);
    if (pos == std::string::npos) {
      out.push_back(key.substr(start));
      break;
    }
    out.push_back(key.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string join_factors(const std::vector<std::string>& keys) {
  std::string out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (i) out += "#";
    out += keys[i];
  }
  return out;
}

}  // namespace

TensorElement tensor_from_vec(int dim, int factors, SparseVec v) {
  TensorElement t(dim, factors);
  t.vec_ = std::move(v);
  return t;
}

TensorElement TensorElement::product(const std::vector<PolyElement>& factors) {
  int dim = factors.empty() ? 0 : factors[0].dim();
  SparseVec acc;
  acc.add("", Rat(1));
  for (std::size_t i = 0; i < factors.size(); ++i) {
    SparseVec next;
    for (const auto& [key, c] : acc.entries()) {
      factors[i].for_each([&](const PolyMonomial& m, const Rat& cm) {
        next.add(i == 0 ? m.key() : key + "#" + m.key(), c * cm);
      });
    }
    acc = std::move(next);
  }
  return tensor_from_vec(dim, static_cast<int>(factors.size()),
                         std::move(acc));
}

TensorElement TensorElement::tau(int i, int j) const {
  SparseVec out;
  for (const auto& [key, coef] : vec_.entries()) {
    std::vector<std::string> parts = split_factors(key);
    std::vector<PolyMonomial> monos;
    monos.reserve(parts.size());
    for (const auto& p : parts) monos.push_back(PolyMonomial::from_key(p));
    int prefix = 0;
    for (int t = 0; t < i; ++t) prefix += monos[t].p_degree();
    int ksign = prefix % 2 == 0 ? 1 : -1;
    for (int l = 1; l <= dim_; ++l) {
      PolyElement fi(dim_);
      fi.add(monos[i], Rat(1));
      PolyElement di = fi.dp(l);
      if (di.empty()) continue;
      PolyElement fj(dim_);
      fj.add(monos[j], Rat(1));
      PolyElement dj = fj.dx(l);
      if (dj.empty()) continue;
      di.for_each([&](const PolyMonomial& mi, const Rat& ci) {
        dj.for_each([&](const PolyMonomial& mj, const Rat& cj) {
          std::vector<std::string> nk = parts;
          nk[i] = mi.key();
          nk[j] = mj.key();
          out.add(join_factors(nk), coef * ci * cj * ksign);
        });
      });
    }
  }
  return tensor_from_vec(dim_, factors_, std::move(out));
}

PolyElement TensorElement::collapse() const {
  PolyElement out(dim_);
  for (const auto& [key, coef] : vec_.entries()) {
    PolyElement prod = PolyElement::constant(coef, dim_);
    for (const auto& part : split_factors(key)) {
      PolyElement f(dim_);
      f.add(PolyMonomial::from_key(part), Rat(1));
      prod = prod * f;
    }
    out += prod;
  }
  return out;
}

PolyElement b_eval(const DirectedGraph& g, const std::vector<PolyElement>& args,
                   const LieData& L) {
  if (static_cast<int>(args.size()) != g.n_ext)
    throw std::runtime_error("b_eval: arity mismatch");
  PolyElement pi = make_pi(L);
  std::vector<PolyElement> factors;
  factors.reserve(g.n_int + g.n_ext);
  for (int i = 0; i < g.n_int; ++i) factors.push_back(pi);
  for (const auto& f : args) factors.push_back(f);
  TensorElement t = TensorElement::product(factors);
  // Internal vertex k sits at tensor position k-1, external j at n_int+j-1.
  auto pos = [&](int v) {
    return g.is_internal(v) ? (v - g.n_ext - 1) : (g.n_int + v - 1);
  };
  for (const Edge& e : g.edges) {
    t = t.tau(pos(e.src), pos(e.dst));
    if (t.empty()) return PolyElement(L.dim);
  }
  return t.collapse();
}

PolyElement b_eval(const GraphSum& s, const std::vector<PolyElement>& args,
                   const LieData& L) {
  PolyElement out(L.dim);
  s.for_each([&](const DirectedGraph& g, const Rat& c) {
    out += c * b_eval(g, args, L);
  });
  return out;
}

PolyElement ce_differential(const PolyElement& f, const LieData& L) {
  PolyElement pi = make_pi(L);
  PolyElement out(L.dim);
  for (int l = 1; l <= L.dim; ++l) {
    out += pi.dp(l) * f.dx(l);
    out += f.dp(l) * pi.dx(l);
  }
  return out;
}

PolyElement jacobi_poly_residual(const LieData& L) {
  PolyElement pi = make_pi(L);
  PolyElement out(L.dim);
  for (int m = 1; m <= L.dim; ++m) out += pi.dx(m) * pi.dp(m);
  return out;
}

bool jacobi_poly_identity(const LieData& L) {
  return jacobi_poly_residual(L).empty();
}

PolyElement star_product_eval(const GraphSum& alpha, const PolyElement& f,
                              const PolyElement& g, const LieData& L) {
  return b_eval(alpha.arity_part(2), {f, g}, L);
}

}  // namespace gmc
