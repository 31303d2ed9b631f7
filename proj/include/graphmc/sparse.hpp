#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "graphmc/rational.hpp"

namespace gmc {

// Sparse vector over an opaque, lexicographically ordered label set. Zero
// coefficients are never stored. One linear-algebra core serves graph sums,
// cobar elements and polynomials alike.
class SparseVec {
 public:
  using Map = std::map<std::string, Rat>;

  SparseVec() = default;

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Map& entries() const { return entries_; }

  Rat coeff(const std::string& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? Rat(0) : it->second;
  }

  void add(const std::string& label, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = entries_.emplace(label, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) entries_.erase(it);
    }
  }

  void add_scaled(const SparseVec& other, const Rat& c) {
    if (c == 0) return;
    for (const auto& [label, v] : other.entries_) add(label, v * c);
  }

  SparseVec& operator+=(const SparseVec& other) {
    add_scaled(other, Rat(1));
    return *this;
  }
  SparseVec& operator-=(const SparseVec& other) {
    add_scaled(other, Rat(-1));
    return *this;
  }
  SparseVec& operator*=(const Rat& c) {
    if (c == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [label, v] : entries_) v *= c;
    return *this;
  }

  friend SparseVec operator+(SparseVec a, const SparseVec& b) { return a += b; }
  friend SparseVec operator-(SparseVec a, const SparseVec& b) { return a -= b; }
  friend SparseVec operator*(const Rat& c, SparseVec a) { return a *= c; }

  bool operator==(const SparseVec& other) const = default;

  // Leading label in the fixed (lexicographic) column order.
  const std::string& lead() const { return entries_.begin()->first; }

 private:
  Map entries_;
};

// Reduced row echelon basis. Each row's pivot label carries coefficient 1 and
// does not occur in any other row. Rows are kept sorted by pivot label, which
// makes every downstream computation order-independent and reproducible.
class RowBasis {
 public:
  struct Row {
    SparseVec vec;      // pivot coefficient normalized to 1
    SparseVec history;  // combination of the input vectors producing this row,
                        // keyed by "#<index>" (tracked when requested)
  };

  RowBasis() = default;
  explicit RowBasis(bool track_history) : track_history_(track_history) {}

  std::size_t rank() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }

  // Reduces v against the basis; returns the normal form. If history output is
  // requested, *history accumulates the row-combination used.
  SparseVec reduce(SparseVec v, SparseVec* history = nullptr) const {
    for (const auto& row : rows_) {
      Rat c = v.coeff(row.vec.lead());
      if (c == 0) continue;
      v.add_scaled(row.vec, -c);
      if (history) history->add_scaled(row.history, c);
    }
    return v;
  }

  // Inserts a vector, keeping the basis fully reduced. Returns true if the
  // rank grew. `tag` labels the vector in row histories.
  bool insert(const SparseVec& v, const std::string& tag = "") {
    SparseVec acc;
    SparseVec r = reduce(v, track_history_ ? &acc : nullptr);
    if (r.empty()) return false;
    Rat lead_coeff = r.coeff(r.lead());
    r *= Rat(1) / lead_coeff;
    SparseVec hist;
    if (track_history_) {
      // r = v - sum c_i row_i, so over the inputs r = tag - acc.
      if (!tag.empty()) hist.add(tag, Rat(1));
      hist.add_scaled(acc, Rat(-1));
      hist *= Rat(1) / lead_coeff;
    }
    // Back-substitute into the existing rows.
    for (auto& row : rows_) {
      Rat c = row.vec.coeff(r.lead());
      if (c == 0) continue;
      row.vec.add_scaled(r, -c);
      if (track_history_) row.history.add_scaled(hist, -c);
    }
    Row nr{std::move(r), std::move(hist)};
    auto pos = rows_.begin();
    while (pos != rows_.end() && pos->vec.lead() < nr.vec.lead()) ++pos;
    rows_.insert(pos, std::move(nr));
    return true;
  }

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }

 private:
  bool track_history_ = false;
  std::vector<Row> rows_;
};

// Reduced row echelon basis of the span of `vectors`.
inline RowBasis row_reduce(const std::vector<SparseVec>& vectors,
                           bool track_history = false) {
  RowBasis basis(track_history);
  for (std::size_t i = 0; i < vectors.size(); ++i)
    basis.insert(vectors[i], "#" + std::to_string(i));
  return basis;
}

struct SpanWitness {
  bool in_span = false;
  // Coefficients over the original input vectors: v = sum c_i * input_i.
  std::vector<std::pair<std::string, Rat>> coefficients;
};

// Membership test with witness coefficients over the input vectors. The basis
// must have been built with history tracking for the witness to be over the
// inputs; witnesses come back keyed "#<input index>".
inline SpanWitness in_span(const SparseVec& v, const RowBasis& basis) {
  SpanWitness w;
  SparseVec hist;
  SparseVec r = basis.reduce(v, &hist);
  if (!r.empty()) return w;
  w.in_span = true;
  // reduce() accumulates +c per row along v - sum c_i row_i = 0, so the
  // combination over inputs is sum c_i * history_i.
  for (const auto& [k, c] : hist.entries()) w.coefficients.emplace_back(k, c);
  return w;
}

}  // namespace gmc
