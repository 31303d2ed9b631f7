#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "graphmc/sparse.hpp"

using namespace gmc;

namespace {

// Independent dense Gaussian elimination over the rationals; the oracle for
// rank computations. Deliberately naive.
int dense_rank(std::vector<std::vector<Rat>> m) {
  int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  int cols = static_cast<int>(m[0].size());
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      Rat f = m[r][c] / m[rank][c];
      for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::string> labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("c" + std::to_string(100 + i));
  return out;
}

std::vector<std::vector<Rat>> densify(const std::vector<SparseVec>& vecs,
                                      const std::vector<std::string>& cols) {
  std::vector<std::vector<Rat>> m;
  for (const auto& v : vecs) {
    std::vector<Rat> row;
    for (const auto& c : cols) row.push_back(v.coeff(c));
    m.push_back(row);
  }
  return m;
}

}  // namespace

TEST_CASE("row_reduce basics") {
  CHECK(row_reduce({}).rank() == 0);

  SparseVec v;
  v.add("x", Rat(2));
  v.add("y", Rat(-3));
  SparseVec w = v;
  w *= Rat(2);
  RowBasis basis = row_reduce({v, w});
  CHECK(basis.rank() == 1);
  CHECK(basis.contains(v));
  CHECK(basis.contains(w));
}

TEST_CASE("in_span witnesses") {
  SparseVec a, b;
  a.add("p", Rat(1));
  a.add("q", Rat(1));
  b.add("q", Rat(1));
  b.add("r", Rat(1));
  RowBasis basis = row_reduce({a, b}, /*track_history=*/true);

  SparseVec zero;
  auto wz = in_span(zero, basis);
  CHECK(wz.in_span);
  CHECK(wz.coefficients.empty());

  // a - b has a witness over the inputs.
  SparseVec t = a;
  t -= b;
  auto wt = in_span(t, basis);
  REQUIRE(wt.in_span);
  SparseVec rebuilt;
  std::vector<SparseVec> inputs = {a, b};
  for (const auto& [tag, c] : wt.coefficients) {
    int idx = std::stoi(tag.substr(1));
    rebuilt.add_scaled(inputs[idx], c);
  }
  CHECK(rebuilt == t);

  SparseVec outside;
  outside.add("p", Rat(1));
  CHECK_FALSE(in_span(outside, basis).in_span);
}

TEST_CASE("rank equals dense oracle on random sparse systems") {
  std::mt19937_64 rng(20240817);
  auto cols = labels(8);
  for (int trial = 0; trial < 40; ++trial) {
    int nvec = static_cast<int>(rng() % 10);
    std::vector<SparseVec> vecs;
    for (int i = 0; i < nvec; ++i) {
      SparseVec v;
      for (const auto& c : cols) {
        int coin = static_cast<int>(rng() % 4);
        if (coin == 0) v.add(c, Rat(static_cast<long>(rng() % 7) - 3));
      }
      vecs.push_back(v);
    }
    RowBasis basis = row_reduce(vecs);
    CHECK(basis.rank() ==
          static_cast<std::size_t>(dense_rank(densify(vecs, cols))));
    CHECK(basis.rank() <= vecs.size());
    for (const auto& v : vecs) CHECK(basis.contains(v));
    // Permutation invariance of the rank.
    std::vector<SparseVec> shuffled = vecs;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    CHECK(row_reduce(shuffled).rank() == basis.rank());
  }
}

TEST_CASE("witness round trip on random spans") {
  std::mt19937_64 rng(7);
  auto cols = labels(6);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<SparseVec> vecs;
    for (int i = 0; i < 4; ++i) {
      SparseVec v;
      for (const auto& c : cols)
        if (rng() % 3 == 0) v.add(c, Rat(static_cast<long>(rng() % 9) - 4));
      vecs.push_back(v);
    }
    RowBasis basis = row_reduce(vecs, true);
    // Random combination of inputs must be recognized with a reconstructable
    // witness.
    SparseVec target;
    for (const auto& v : vecs)
      target.add_scaled(v, Rat(static_cast<long>(rng() % 5) - 2));
    auto w = in_span(target, basis);
    REQUIRE(w.in_span);
    SparseVec rebuilt;
    for (const auto& [tag, c] : w.coefficients)
      rebuilt.add_scaled(vecs[std::stoi(tag.substr(1))], c);
    CHECK(rebuilt == target);
  }
}

TEST_CASE("no stored zeros after arithmetic") {
  SparseVec v;
  v.add("a", Rat(1, 2));
  v.add("a", Rat(-1, 2));
  CHECK(v.empty());
  v.add("a", Rat(1, 3));
  SparseVec w;
  w.add("a", Rat(-1, 3));
  v += w;
  CHECK(v.empty());
}
