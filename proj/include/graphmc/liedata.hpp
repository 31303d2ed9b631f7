#pragma once

#include <string>
#include <vector>

#include "graphmc/rational.hpp"

namespace gmc {

// A finite-dimensional Lie algebra by structure constants:
// [x_i, x_j] = sum_k c[i][j][k] x_k (0-based indices internally, 1-based in
// configs and error messages). Antisymmetry is completed at load; the Jacobi
// identity is validated and violations name the offending (i,j,k,l).
struct LieData {
  std::string name;
  int dim = 0;
  std::vector<std::vector<std::vector<Rat>>> c;

  const Rat& at(int i, int j, int k) const { return c[i][j][k]; }

  // Throws with the violated (i,j,k,l) if the Jacobi identity fails or
  // antisymmetry is broken.
  void validate() const;
};

LieData lie_abelian(int dim);
LieData lie_heisenberg3();
LieData lie_so3();
LieData lie_sl2();

// The four shipped presets by name: abelian2, abelian3, heisenberg3, so3,
// sl2 ("abelian<d>" accepts any small d).
LieData lie_preset(const std::string& name);
const std::vector<std::string>& lie_preset_names();

// Parses { "name": ..., "dim": d, "entries": [[i, j, k, value], ...] } with
// 1-based indices; value is an integer or "p/q" string. Antisymmetric
// completion applied; conflicting duplicates are an error.
LieData lie_from_json(const std::string& json_text);
LieData lie_from_file(const std::string& path);

std::string lie_to_json(const LieData& L);

}  // namespace gmc
