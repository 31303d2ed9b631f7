#include "graphmc/fixtures.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "graphmc/dsl.hpp"

namespace gmc {

namespace {

// Building blocks. The edge list order in each term is part of the data; the
// sign conventions of every later computation depend on it.
const char* kA1 = "G(n=1; I=1; e=[(i1--1)])";
const char* kA2 = "G(n=2; I=0; e=[])";
const char* kA3 = "G(n=2; I=1; e=[(i1->1),(i1->2)])";
const char* kA4 =
    "G(n=2; I=2; e=[(i2->2),(i2->i1),(i1->1),(i1->2)])"
    " - G(n=2; I=2; e=[(i2->1),(i2->i1),(i1->1),(i1->2)])";
const char* kA5 = "G(n=2; I=2; e=[(i1->1),(i1->2),(i2->1),(i2->2)])";
const char* kA6 = "G(n=2; I=2; e=[(i1->1),(i1->i2),(i2->i1),(i2->2)])";

const char* kXi1 = "G(n=2; I=0; e=[(1->2)]) - G(n=2; I=0; e=[(2->1)])";
const char* kXi2 =
    "G(n=2; I=1; e=[(i1->1),(i1->2),(1->2)])"
    " - G(n=2; I=1; e=[(i1->1),(i1->2),(2->1)])";
const char* kXi3 =
    "G(n=2; I=1; e=[(2->i1),(i1->1),(i1->2)])"
    " - G(n=2; I=1; e=[(1->i1),(i1->1),(i1->2)])";

const char* kB1 = "G(n=3; I=1; e=[(1->i1),(i1->2),(i1->3)])";
const char* kB2 = "G(n=3; I=1; e=[(i1->1),(2->i1),(i1->3)])";
const char* kB3 = "G(n=3; I=1; e=[(i1->1),(i1->2),(3->i1)])";
// The one-internal tripod summed over admissible directions; equals b1+b2+b3.
const char* kB = "G(n=3; I=1; e=[(i1--1),(i1--2),(i1--3)])";

const char* kBPrime =
    "G(n=4; I=0; e=[(1--2),(3--4)]) + G(n=4; I=0; e=[(1--3),(2--4)])";
const char* kC = "G(n=3; I=0; e=[(1--2),(2--3)])";

const char* kQ =
    "- G(n=3; I=1; e=[(1->i1),(i1->2),(i1->3)])"
    " - G(n=3; I=1; e=[(i1->1),(i1->2),(3->i1)])"
    " + G(n=3; I=1; e=[(i1->1),(i1->3),(1->2)])"
    " - G(n=3; I=1; e=[(i1->1),(i1->3),(2->1)])"
    " - G(n=3; I=1; e=[(i1->1),(i1->3),(2->3)])"
    " + G(n=3; I=1; e=[(i1->1),(i1->3),(3->2)])"
    " + G(n=3; I=1; e=[(i1->1),(i1->2),(1->3)])"
    " - G(n=3; I=1; e=[(i1->1),(i1->2),(3->1)])"
    " - G(n=3; I=1; e=[(i1->2),(i1->3),(1->3)])"
    " + G(n=3; I=1; e=[(i1->2),(i1->3),(3->1)])";

const char* kAlpha0 = "G(n=1; I=1; e=[(i1--1)]) + G(n=2; I=0; e=[])";

// a1 + a2 + 1/2 a3 - 1/12 a4 + 1/8 a5 + 1/24 a6 written out per graph term
// (a4 is itself a difference of two graphs).
const char* kAlphaDuf =
    "G(n=1; I=1; e=[(i1--1)])"
    " + G(n=2; I=0; e=[])"
    " + 1/2*G(n=2; I=1; e=[(i1->1),(i1->2)])"
    " - 1/12*G(n=2; I=2; e=[(i2->2),(i2->i1),(i1->1),(i1->2)])"
    " + 1/12*G(n=2; I=2; e=[(i2->1),(i2->i1),(i1->1),(i1->2)])"
    " + 1/8*G(n=2; I=2; e=[(i1->1),(i1->2),(i2->1),(i2->2)])"
    " + 1/24*G(n=2; I=2; e=[(i1->1),(i1->i2),(i2->i1),(i2->2)])";

// -1/4 xi1 - 1/16 xi2 + 1/48 xi3, per graph term.
const char* kXi =
    "-1/4*G(n=2; I=0; e=[(1->2)])"
    " + 1/4*G(n=2; I=0; e=[(2->1)])"
    " - 1/16*G(n=2; I=1; e=[(i1->1),(i1->2),(1->2)])"
    " + 1/16*G(n=2; I=1; e=[(i1->1),(i1->2),(2->1)])"
    " + 1/48*G(n=2; I=1; e=[(2->i1),(i1->1),(i1->2)])"
    " - 1/48*G(n=2; I=1; e=[(1->i1),(i1->1),(i1->2)])";

// a1 + a2 + 1/24 b.
const char* kAlphaDufPrime =
    "G(n=1; I=1; e=[(i1--1)])"
    " + G(n=2; I=0; e=[])"
    " + 1/24*G(n=3; I=1; e=[(i1--1),(i1--2),(i1--3)])";

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> t = {
      {"a1", kA1},         {"a2", kA2},
      {"a3", kA3},         {"a4", kA4},
      {"a5", kA5},         {"a6", kA6},
      {"xi1", kXi1},       {"xi2", kXi2},
      {"xi3", kXi3},       {"b1", kB1},
      {"b2", kB2},         {"b3", kB3},
      {"b", kB},           {"bprime", kBPrime},
      {"c", kC},           {"Q", kQ},
      {"alpha0", kAlpha0}, {"alphaduf", kAlphaDuf},
      {"xi", kXi},         {"alphadufprime", kAlphaDufPrime},
  };
  return t;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [k, v] : table()) n.push_back(k);
    return n;
  }();
  return names;
}

bool has_fixture(const std::string& name) { return table().count(name) > 0; }

const std::string& fixture_dsl(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end())
    throw std::runtime_error("unknown fixture: " + name);
  return it->second;
}

const GraphSum& fixture(const std::string& name) {
  static std::map<std::string, GraphSum> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end())
    it = cache.emplace(name, parse_graph_sum(fixture_dsl(name))).first;
  return it->second;
}

GraphSum fixture_from(const std::string& name, const std::string& dir) {
  std::string d = dir;
  if (d.empty()) {
    if (const char* env = std::getenv("GRAPHMC_FIXTURES")) d = env;
  }
  if (!d.empty()) {
    std::ifstream in(d + "/" + name + ".g");
    if (in) {
      std::stringstream ss;
      ss << in.rdbuf();
      return parse_graph_sum(ss.str());
    }
  }
  return fixture(name);
}

}  // namespace gmc
