#pragma once

#include <string>
#include <vector>

#include "graphmc/graph_sum.hpp"

namespace gmc {

// Named graph elements used throughout the verification pipeline: the
// building blocks a1..a6, the gauge parameters xi1..xi3 and xi, the
// obstruction-side elements b, b1..b3, bprime, c, Q, and the Maurer-Cartan
// elements alpha0, alphaduf, alphadufprime.
const std::vector<std::string>& fixture_names();
bool has_fixture(const std::string& name);

// DSL source of a fixture (the single source of truth).
const std::string& fixture_dsl(const std::string& name);

// Parsed fixture. Cached; honors no overrides.
const GraphSum& fixture(const std::string& name);

// Parsed fixture with directory override: if `dir` (or, when dir is empty,
// the GRAPHMC_FIXTURES environment variable) names a directory containing
// <name>.g, that file is parsed instead of the embedded source.
GraphSum fixture_from(const std::string& name, const std::string& dir);

}  // namespace gmc
