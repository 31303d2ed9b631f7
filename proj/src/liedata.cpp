#include "graphmc/liedata.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace gmc {

namespace {

LieData make(int dim, const std::string& name) {
  LieData L;
  L.name = name;
  L.dim = dim;
  L.c.assign(dim, std::vector<std::vector<Rat>>(
                      dim, std::vector<Rat>(dim, Rat(0))));
  return L;
}

// Sets c_{ij}^k = v and c_{ji}^k = -v (1-based in, 0-based storage).
void set_entry(LieData& L, int i, int j, int k, const Rat& v) {
  if (i < 1 || i > L.dim || j < 1 || j > L.dim || k < 1 || k > L.dim)
    throw std::runtime_error("structure constant index out of range");
  if (i == j && v != 0)
    throw std::runtime_error("c[i][i][k] must vanish");
  L.c[i - 1][j - 1][k - 1] = v;
  L.c[j - 1][i - 1][k - 1] = -v;
}

}  // namespace

void LieData::validate() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c[i][j][k] != -c[j][i][k])
          throw std::runtime_error(
              "antisymmetry violated at (" + std::to_string(i + 1) + "," +
              std::to_string(j + 1) + "," + std::to_string(k + 1) + ")");
  // sum_m c_{jk}^m c_{im}^l + c_{ki}^m c_{jm}^l + c_{ij}^m c_{km}^l = 0
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        for (int l = 0; l < dim; ++l) {
          Rat s(0);
          for (int m = 0; m < dim; ++m)
            s += c[j][k][m] * c[i][m][l] + c[k][i][m] * c[j][m][l] +
                 c[i][j][m] * c[k][m][l];
          if (s != 0)
            throw std::runtime_error(
                "Jacobi identity violated at (i,j,k,l)=(" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                std::to_string(k + 1) + "," + std::to_string(l + 1) + ")");
        }
}

LieData lie_abelian(int dim) {
  return make(dim, "abelian" + std::to_string(dim));
}

LieData lie_heisenberg3() {
  LieData L = make(3, "heisenberg3");
  set_entry(L, 1, 2, 3, Rat(1));
  return L;
}

LieData lie_so3() {
  LieData L = make(3, "so3");
  set_entry(L, 1, 2, 3, Rat(1));
  set_entry(L, 2, 3, 1, Rat(1));
  set_entry(L, 3, 1, 2, Rat(1));
  return L;
}

LieData lie_sl2() {
  // Basis (e, h, f): [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  LieData L = make(3, "sl2");
  set_entry(L, 2, 1, 1, Rat(2));
  set_entry(L, 2, 3, 3, Rat(-2));
  set_entry(L, 1, 3, 2, Rat(1));
  return L;
}

const std::vector<std::string>& lie_preset_names() {
  static const std::vector<std::string> names = {"abelian2", "abelian3",
                                                 "heisenberg3", "so3", "sl2"};
  return names;
}

LieData lie_preset(const std::string& name) {
  if (name.rfind("abelian", 0) == 0) {
    int d = std::stoi(name.substr(7));
    if (d < 1 || d > 16) throw std::runtime_error("abelian dim out of range");
    return lie_abelian(d);
  }
  if (name == "heisenberg3") return lie_heisenberg3();
  if (name == "so3") return lie_so3();
  if (name == "sl2") return lie_sl2();
  throw std::runtime_error("unknown Lie algebra preset: " + name);
}

LieData lie_from_json(const std::string& json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  LieData L = make(j.at("dim").get<int>(),
                   j.value("name", std::string("custom")));
  for (const auto& entry : j.at("entries")) {
    int i = entry.at(0).get<int>();
    int jj = entry.at(1).get<int>();
    int k = entry.at(2).get<int>();
    Rat v = entry.at(3).is_string()
                ? rat_parse(entry.at(3).get<std::string>())
                : Rat(entry.at(3).get<long>());
    if (L.c[i - 1][jj - 1][k - 1] != 0 && L.c[i - 1][jj - 1][k - 1] != v)
      throw std::runtime_error("conflicting duplicate structure constant");
    set_entry(L, i, jj, k, v);
  }
  L.validate();
  return L;
}

LieData lie_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Lie config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return lie_from_json(ss.str());
}

std::string lie_to_json(const LieData& L) {
  nlohmann::json j;
  j["name"] = L.name;
  j["dim"] = L.dim;
  auto entries = nlohmann::json::array();
  for (int i = 0; i < L.dim; ++i)
    for (int k = i + 1; k < L.dim; ++k)
      for (int l = 0; l < L.dim; ++l)
        if (L.c[i][k][l] != 0)
          entries.push_back({i + 1, k + 1, l + 1, rat_str(L.c[i][k][l])});
  j["entries"] = entries;
  return j.dump(2);
}

}  // namespace gmc
