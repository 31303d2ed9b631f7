#include "graphmc/pipeline.hpp"

#include <chrono>

#include "graphmc/cobar.hpp"
#include "graphmc/dsl.hpp"
#include "graphmc/enumerate.hpp"
#include "graphmc/fixtures.hpp"
#include "graphmc/ihx.hpp"
#include "graphmc/liedata.hpp"
#include "graphmc/mc.hpp"
#include "graphmc/operad.hpp"
#include "graphmc/poly.hpp"

namespace gmc {

namespace {

LieData load_lie(const std::string& name) {
  if (name.find('/') != std::string::npos ||
      (name.size() > 5 && name.substr(name.size() - 5) == ".json"))
    return lie_from_file(name);
  return lie_preset(name);
}

std::string first_term(const GraphSum& s) {
  std::string out;
  s.for_each([&](const DirectedGraph& g, const Rat& c) {
    if (out.empty()) out = rat_str(c) + "*" + serialize_graph(g);
  });
  return out;
}

}  // namespace

FixtureSet::FixtureSet(const PipelineOptions& opt) : opt_(opt) {}

GraphSum FixtureSet::get(const std::string& name) const {
  auto base = [&](const std::string& n) {
    GraphSum g = fixture_from(n, opt_.fixtures_dir);
    if (n == opt_.corrupt_fixture) g *= Rat(7, 5);
    return g;
  };
  if (name == "alpha0") return base("a1") + base("a2");
  if (name == "alphaduf")
    return base("a1") + base("a2") + Rat(1, 2) * base("a3") -
           Rat(1, 12) * base("a4") + Rat(1, 8) * base("a5") +
           Rat(1, 24) * base("a6");
  if (name == "xi")
    return Rat(-1, 4) * base("xi1") - Rat(1, 16) * base("xi2") +
           Rat(1, 48) * base("xi3");
  if (name == "alphadufprime")
    return base("a1") + base("a2") + Rat(1, 24) * base("b");
  return base(name);
}

RunReport run_verify_paper(const PipelineOptions& opt) {
  auto t0 = std::chrono::steady_clock::now();
  RunReport rep;
  rep.command = "verify-paper";
  rep.inputs.emplace_back("lie", opt.lie);
  if (!opt.corrupt_fixture.empty())
    rep.inputs.emplace_back("corrupt-fixture", opt.corrupt_fixture);
  rep.bounds.emplace_back("max-vertices", std::to_string(opt.max_vertices));
  rep.bounds.emplace_back("obstruction-k", std::to_string(opt.obstruction_k));

  FixtureSet fix(opt);
  for (const auto& name : fixture_names())
    rep.fixture_hashes.emplace_back(name, fnv1a64(fixture_dsl(name)));

  auto add = [&](const std::string& name, CheckStatus st,
                 const std::string& detail = "") {
    rep.checks.push_back({name, st, detail});
  };
  auto check_eq = [&](const std::string& name, const GraphSum& lhs,
                      const GraphSum& rhs) {
    GraphSum diff = reduce_mod_ihx(lhs - rhs);
    if (diff.empty())
      add(name, CheckStatus::kPass);
    else
      add(name, CheckStatus::kFail, "first offending term " +
          first_term(diff));
  };

  // 1. Fixture admissibility and degrees.
  {
    bool ok = true;
    std::string detail;
    for (const auto& name : fixture_names()) {
      GraphSum f = fix.get(name);
      f.for_each([&](const DirectedGraph& g, const Rat&) {
        auto a = check_admissible(g);
        if (!a.ok) {
          ok = false;
          detail = name + ": " + a.detail;
        }
      });
      int want = (name == "xi" || name == "xi1" || name == "xi2" ||
                  name == "xi3" || name == "c")
                     ? 0
                     : 1;
      if (!f.homogeneous_lie_degree(want)) {
        ok = false;
        detail = name + ": unexpected Lie degree";
      }
    }
    add("fixture-admissibility-and-degrees",
        ok ? CheckStatus::kPass : CheckStatus::kFail, detail);
  }

  // 2. The eight bracket identities.
  {
    GraphSum xi1 = fix.get("xi1"), xi2 = fix.get("xi2"), xi3 = fix.get("xi3");
    GraphSum a1 = fix.get("a1"), a2 = fix.get("a2"), a3 = fix.get("a3");
    GraphSum Q = fix.get("Q");
    check_eq("bracket: [xi1,a1] = 2 a3", bracket(xi1, a1),
             Rat(2) * a3);
    check_eq("bracket: [xi1,a2] = 0", bracket(xi1, a2), GraphSum());
    check_eq("bracket: [xi1,a3] = Q", bracket(xi1, a3), Q);
    check_eq("bracket: [xi1,[xi1,a1]] = 2 Q", ad_pow(xi1, a1, 2),
             Rat(2) * Q);
    check_eq("bracket: [xi2,a1] = -a4 + 2 a5", bracket(xi2, a1),
             Rat(-1) * fix.get("a4") + Rat(2) * fix.get("a5"));
    check_eq("bracket: [xi2,a2] = -Q - b1 - b3", bracket(xi2, a2),
             Rat(-1) * Q - fix.get("b1") - fix.get("b3"));
    check_eq("bracket: [xi3,a1] = -2 a6 + a4", bracket(xi3, a1),
             Rat(-2) * fix.get("a6") + fix.get("a4"));
    check_eq("bracket: [xi3,a2] = -b1 + 2 b2 - b3", bracket(xi3, a2),
             Rat(-1) * fix.get("b1") + Rat(2) * fix.get("b2") -
                 fix.get("b3"));
  }

  // 3. Gauge computation.
  if (opt.max_vertices < 4) {
    add("gauge: exp(ad_xi) alphaduf = a1 + a2 + (1/24) b",
        CheckStatus::kInconclusive,
        "inconclusive: widen bounds (needs max-vertices >= 4)");
  } else {
    TruncationPolicy t{4};
    GraphSum got = gauge_act(fix.get("xi"), fix.get("alphaduf"), t);
    GraphSum want = reduce_mod_ihx(fix.get("alphadufprime"));
    check_eq("gauge: exp(ad_xi) alphaduf = a1 + a2 + (1/24) b", got, want);
  }

  // 4. Maurer-Cartan residuals of alpha0.
  {
    McReport mc = mc_check(fix.get("alpha0"),
                           TruncationPolicy{std::max(opt.max_vertices, 5)});
    bool pass = mc.reduced.empty();
    std::string detail;
    if (!pass)
      detail = "first residual at grading " +
               std::to_string(mc.reduced.begin()->first) + ": " +
               first_term(mc.reduced.begin()->second);
    add("mc: (1/2)[alpha0, alpha0] = 0 mod relations",
        pass ? CheckStatus::kPass : CheckStatus::kFail, detail);
  }

  // 5. Closedness of b.
  {
    bool ok = closedness_check(fix.get("b"), fix.get("alpha0"));
    add("closedness: [a1+a2, b] = 0 mod relations",
        ok ? CheckStatus::kPass : CheckStatus::kFail);
  }

  // 6. Figure of merit for the cohomologous representative.
  check_eq("cohomologous: b + bprime - [a1+a2, c] = 0",
           fix.get("b") + fix.get("bprime") -
               bracket(fix.get("alpha0"), fix.get("c")),
           GraphSum());

  // 7. Obstruction.
  {
    GraphSum adp = fix.get("alphadufprime");
    if (opt.obstruction_k != 3)
      rep.bounds.emplace_back("note", "nonstandard obstruction grading");
    try {
      auto res = obstruction_test(reduce_mod_ihx(adp), opt.obstruction_k);
      bool pass = res.obstructed && res.cocycle;
      add("obstruction: alphadufprime grading-" +
              std::to_string(opt.obstruction_k) + " class not exact",
          pass ? CheckStatus::kPass : CheckStatus::kFail,
          pass ? "domain dimension " + std::to_string(res.domain_keys.size())
               : "class is exact or not closed");
    } catch (const std::exception& e) {
      add("obstruction", CheckStatus::kFail, e.what());
    }
  }

  // 8. Relation vanishing under the representation.
  {
    LieData L = load_lie(opt.lie);
    bool ok = true;
    std::string detail;
    std::vector<std::vector<PolyElement>> argsets;
    for (int n = 1; n <= 3; ++n) {
      std::vector<PolyElement> xs, mixed;
      for (int i = 1; i <= n; ++i) {
        int v = 1 + (i - 1) % L.dim;
        xs.push_back(PolyElement::x(v, L.dim) * PolyElement::x(1, L.dim));
        mixed.push_back(i % 2 ? PolyElement::p(v, L.dim)
                              : PolyElement::x(v, L.dim) *
                                    PolyElement::x(v, L.dim));
      }
      for (int m = 1; m <= 2; ++m)
        for (int e = 1; e <= 4; ++e)
          for (const auto& rel : relations_at(n, m, e)) {
            if (!b_eval(rel.relation, xs, L).empty() ||
                !b_eval(rel.relation, mixed, L).empty()) {
              ok = false;
              detail = "relation from " + rel.parent_key;
            }
          }
    }
    add("representation: B(relations) = 0 for " + opt.lie,
        ok ? CheckStatus::kPass : CheckStatus::kFail, detail);
  }

  // 9. Cobar cohomology.
  {
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 4; ++n) {
      auto coh = cobar_cohomology(n);
      bool good = coh.total() == 1 && coh.homology[n - 1] == 1 &&
                  coh.top_is_omega;
      if (!good) {
        ok = false;
        detail = "n=" + std::to_string(n);
      }
    }
    add("cobar: H one-dimensional in top degree, n <= 4",
        ok ? CheckStatus::kPass : CheckStatus::kFail, detail);
  }

  // 10. Gluing chain map.
  {
    bool ok = true;
    std::string detail;
    int checked = 0, excluded = 0;
    for (int n = 2; n <= 3 && ok; ++n) {
      auto cores = enumerate_uni_cores(n, 1);
      auto comps = enumerate_compositions(n);
      for (const auto& core : cores) {
        for (const auto& comp : comps) {
          bool loop_pair = false;
          for (const auto& blk : comp.blocks)
            for (const Edge& e : core.graph.edges)
              if (e.src <= n && e.dst <= n &&
                  std::count(blk.begin(), blk.end(), e.src) &&
                  std::count(blk.begin(), blk.end(), e.dst))
                loop_pair = true;
          if (loop_pair) {
            ++excluded;
            continue;
          }
          ++checked;
          GraphSum glued = glue(core.graph, comp);
          int sign = 1;
          glued.for_each([&](const DirectedGraph& g, const Rat&) {
            sign = g.lie_degree() % 2 == 0 ? 1 : -1;
          });
          GraphSum lhs = Rat(sign) * glue(core.graph, cobar_d(comp));
          GraphSum rhs = bracket(fixture("a2"), glued);
          if (!is_zero_mod_ihx(lhs - rhs)) {
            ok = false;
            detail = "core " + core.key + " comp " + comp.key();
          }
        }
      }
    }
    add("gluing: chain map on univalent cores (n <= 3, m <= 1)",
        ok ? CheckStatus::kPass : CheckStatus::kFail,
        ok ? std::to_string(checked) + " pairs, " + std::to_string(excluded) +
                 " loop-pairs excluded"
           : detail);
  }

  if (opt.timing) {
    auto t1 = std::chrono::steady_clock::now();
    rep.timing_ms = static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count());
  }
  return rep;
}

}  // namespace gmc
