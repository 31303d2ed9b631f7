// Command-line surface over the graph calculator: parse DSL inputs, run the
// individual operations, or run the full verification pipeline. Exit codes:
// 0 pass, 1 check failure, 2 inconclusive, 3 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "graphmc/cobar.hpp"
#include "graphmc/dsl.hpp"
#include "graphmc/enumerate.hpp"
#include "graphmc/fixtures.hpp"
#include "graphmc/ihx.hpp"
#include "graphmc/liedata.hpp"
#include "graphmc/mc.hpp"
#include "graphmc/operad.hpp"
#include "graphmc/pipeline.hpp"
#include "graphmc/poly.hpp"
#include "graphmc/report.hpp"

using namespace gmc;

namespace {

// Input resolution: a path to a DSL file, a known fixture name, or an inline
// DSL expression.
GraphSum load_sum(const std::string& arg) {
  std::ifstream in(arg);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph_sum(ss.str());
  }
  if (has_fixture(arg)) return fixture_from(arg, "");
  return parse_graph_sum(arg);
}

LieData load_lie_arg(const std::string& name) {
  std::ifstream in(name);
  if (in) {
    std::stringstream ss;
    ss << in.rdbuf();
    return lie_from_json(ss.str());
  }
  return lie_preset(name);
}

// "x_1,x_2" or "x1*p2,x3": comma-separated arguments, '*'-joined factors.
std::vector<PolyElement> parse_args(const std::string& text, int dim) {
  std::vector<PolyElement> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    PolyElement f = PolyElement::constant(Rat(1), dim);
    std::stringstream fs(tok);
    std::string factor;
    while (std::getline(fs, factor, '*')) {
      auto strip = [](std::string s) {
        s.erase(remove_if(s.begin(), s.end(), isspace), s.end());
        return s;
      };
      factor = strip(factor);
      if (factor.empty()) continue;
      char kind = factor[0];
      std::string idx = factor.substr(1);
      if (!idx.empty() && idx[0] == '_') idx = idx.substr(1);
      if (kind == 'x')
        f = f * PolyElement::x(std::stoi(idx), dim);
      else if (kind == 'p')
        f = f * PolyElement::p(std::stoi(idx), dim);
      else if (kind == '1')
        continue;
      else
        throw std::runtime_error("bad argument factor: " + factor);
    }
    out.push_back(f);
  }
  return out;
}

void emit(const RunReport& rep, const std::string& format) {
  if (format == "json")
    std::cout << rep.to_json() << "\n";
  else
    std::cout << rep.to_text();
}

RunReport basic_report(const std::string& command) {
  RunReport rep;
  rep.command = command;
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact graph-complex calculator"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "text|json")->envname("GRAPHMC_FORMAT");
  bool timing = false;
  app.add_flag("--timing", timing, "report run time (breaks byte-identical reports)");

  // verify-paper
  auto* vp = app.add_subcommand("verify-paper", "run the full check pipeline");
  PipelineOptions opt;
  vp->add_option("--cap", opt.max_vertices,
                 "vertex-count truncation for the gauge computation");
  vp->add_option("--obstruction-k", opt.obstruction_k,
                 "second grading of the obstruction test");
  vp->add_option("--lie", opt.lie, "Lie algebra preset or config path");
  vp->add_option("--corrupt-fixture", opt.corrupt_fixture,
                 "scale the named fixture by 7/5 (negative control)");
  vp->add_option("--fixtures", opt.fixtures_dir,
                 "fixture directory override")->envname("GRAPHMC_FIXTURES");

  // bracket / star
  std::string lhs_arg, rhs_arg;
  auto* br = app.add_subcommand("bracket", "graded bracket of two graph sums");
  br->add_option("x", lhs_arg)->required();
  br->add_option("y", rhs_arg)->required();
  auto* st = app.add_subcommand("star", "pre-Lie product of two graph sums");
  st->add_option("x", lhs_arg)->required();
  st->add_option("y", rhs_arg)->required();

  // diff
  std::string diff_arg, alpha_arg = "alpha0";
  auto* df = app.add_subcommand("diff", "bracket with a Maurer-Cartan element");
  df->add_option("x", diff_arg)->required();
  df->add_option("--alpha", alpha_arg, "differential element (default alpha0)");

  // reduce
  std::string reduce_arg;
  auto* rd = app.add_subcommand("reduce", "normal form modulo the relations");
  rd->add_option("x", reduce_arg)->required();

  // mc
  std::string mc_arg;
  int cap = 5;
  auto* mc = app.add_subcommand("mc", "Maurer-Cartan residuals per grading");
  mc->add_option("alpha", mc_arg)->required();
  mc->add_option("--cap", cap, "vertex-count truncation");

  // gauge
  std::string gauge_xi, gauge_alpha;
  int gcap = 4;
  auto* ga = app.add_subcommand("gauge", "exponential gauge action");
  ga->add_option("xi", gauge_xi)->required();
  ga->add_option("alpha", gauge_alpha)->required();
  ga->add_option("--cap", gcap, "vertex-count truncation");

  // cohomology
  bool cobar_mode = false, slice_mode = false;
  int coh_n = 3, coh_m = 1;
  auto* coh = app.add_subcommand("cohomology", "cobar or graph-slice cohomology");
  coh->add_flag("--cobar", cobar_mode, "multilinear cobar complex");
  coh->add_flag("--slice", slice_mode, "bounded graph slices under ad_a2");
  coh->add_option("-n,--n", coh_n, "number of variables / external incidences");
  coh->add_option("--mmax", coh_m, "internal vertex bound (slice mode)");

  // enumerate
  int en_n = 2, en_m = 1, en_e = 2;
  bool en_exact = false;
  auto* en = app.add_subcommand("enumerate", "canonical admissible graphs");
  en->add_option("-n,--n", en_n)->required();
  en->add_option("--mmax", en_m);
  en->add_option("--emax", en_e);
  en->add_flag("--exact", en_exact, "exact (m, e) slice instead of bounds");

  // represent
  std::string rep_arg, rep_lie = "so3", rep_args;
  auto* rp = app.add_subcommand("represent",
                                "evaluate the polydifferential operator");
  rp->add_option("graph", rep_arg)->required();
  rp->add_option("--lie", rep_lie, "Lie algebra preset or config path");
  rp->add_option("--args", rep_args, "comma-separated arguments, e.g. x_1,x_2")
      ->required();

  // relations
  int rel_n = 2, rel_m = 2, rel_e = 2;
  auto* rl = app.add_subcommand("relations", "export relations as DSL text");
  rl->add_option("-n,--n", rel_n)->required();
  rl->add_option("-m,--m", rel_m)->required();
  rl->add_option("-e,--e", rel_e)->required();

  // fixtures
  std::string fx_name;
  auto* fx = app.add_subcommand("fixtures", "print fixture definitions");
  fx->add_option("name", fx_name);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*vp) {
      opt.timing = timing;
      RunReport rep = run_verify_paper(opt);
      emit(rep, format);
      return rep.exit_code();
    }
    if (*br || *st) {
      RunReport rep = basic_report(*br ? "bracket" : "star");
      GraphSum x = load_sum(lhs_arg), y = load_sum(rhs_arg);
      rep.inputs.emplace_back("x", serialize(x));
      rep.inputs.emplace_back("y", serialize(y));
      GraphSum r = *br ? bracket(x, y) : star(x, y);
      rep.payload.emplace_back("result", serialize(r));
      rep.payload.emplace_back("result_mod_relations",
                               serialize(reduce_mod_ihx(r)));
      emit(rep, format);
      return 0;
    }
    if (*df) {
      RunReport rep = basic_report("diff");
      GraphSum x = load_sum(diff_arg), alpha = load_sum(alpha_arg);
      rep.inputs.emplace_back("x", serialize(x));
      rep.inputs.emplace_back("alpha", serialize(alpha));
      GraphSum r = bracket(alpha, x);
      rep.payload.emplace_back("result", serialize(r));
      rep.payload.emplace_back("result_mod_relations",
                               serialize(reduce_mod_ihx(r)));
      emit(rep, format);
      return 0;
    }
    if (*rd) {
      RunReport rep = basic_report("reduce");
      GraphSum x = load_sum(reduce_arg);
      rep.inputs.emplace_back("x", serialize(x));
      GraphSum r = reduce_mod_ihx(x);
      rep.payload.emplace_back("normal_form", serialize(r));
      rep.payload.emplace_back("is_zero", r.empty() ? "true" : "false");
      emit(rep, format);
      return 0;
    }
    if (*mc) {
      RunReport rep = basic_report("mc");
      GraphSum alpha = load_sum(mc_arg);
      rep.inputs.emplace_back("alpha", serialize(alpha));
      rep.bounds.emplace_back("max-vertices", std::to_string(cap));
      McReport r = mc_check(alpha, TruncationPolicy{cap});
      rep.bounds.emplace_back("determined-grading",
                              std::to_string(r.determined_grading));
      bool pass = true;
      for (const auto& [g, res] : r.reduced) {
        pass = false;
        rep.payload.emplace_back("residual_grading_" + std::to_string(g),
                                 serialize(res));
      }
      rep.checks.push_back({"maurer-cartan residuals vanish",
                            pass ? CheckStatus::kPass : CheckStatus::kFail,
                            ""});
      emit(rep, format);
      return rep.exit_code();
    }
    if (*ga) {
      RunReport rep = basic_report("gauge");
      GraphSum xi = load_sum(gauge_xi), alpha = load_sum(gauge_alpha);
      rep.inputs.emplace_back("xi", serialize(xi));
      rep.inputs.emplace_back("alpha", serialize(alpha));
      rep.bounds.emplace_back("max-vertices", std::to_string(gcap));
      GraphSum r = gauge_act(xi, alpha, TruncationPolicy{gcap});
      rep.payload.emplace_back("result_mod_relations", serialize(r));
      emit(rep, format);
      return 0;
    }
    if (*coh) {
      RunReport rep = basic_report("cohomology");
      rep.bounds.emplace_back("n", std::to_string(coh_n));
      if (slice_mode) {
        rep.bounds.emplace_back("mmax", std::to_string(coh_m));
        auto r = slice_cohomology_vs_corollary(coh_n, coh_m);
        std::string dims;
        for (auto h : r.homology) dims += (dims.empty() ? "" : ",") +
                                          std::to_string(h);
        rep.payload.emplace_back("homology_dims", "(" + dims + ")");
        rep.payload.emplace_back("antisym_core_rank",
                                 std::to_string(r.antisym_core_rank));
        rep.checks.push_back({"slice cohomology matches antisymmetric cores",
                              r.match ? CheckStatus::kPass
                                      : CheckStatus::kFail,
                              ""});
      } else {
        auto r = cobar_cohomology(coh_n);
        std::string dims;
        for (auto h : r.homology) dims += (dims.empty() ? "" : ",") +
                                          std::to_string(h);
        rep.payload.emplace_back("homology_dims", "(" + dims + ")");
        rep.checks.push_back({"cohomology one-dimensional in top degree",
                              (r.total() == 1 && r.top_is_omega)
                                  ? CheckStatus::kPass
                                  : CheckStatus::kFail,
                              ""});
      }
      emit(rep, format);
      return rep.exit_code();
    }
    if (*en) {
      RunReport rep = basic_report("enumerate");
      rep.bounds.emplace_back("n", std::to_string(en_n));
      rep.bounds.emplace_back(en_exact ? "m" : "mmax", std::to_string(en_m));
      rep.bounds.emplace_back(en_exact ? "e" : "emax", std::to_string(en_e));
      auto graphs = en_exact ? enumerate_slice(en_n, en_m, en_e)
                             : enumerate_graphs(en_n, en_m, en_e);
      rep.payload.emplace_back("count", std::to_string(graphs.size()));
      for (const auto& cg : graphs)
        rep.payload.emplace_back(cg.key, serialize_graph(cg.graph));
      emit(rep, format);
      return 0;
    }
    if (*rp) {
      RunReport rep = basic_report("represent");
      GraphSum g = load_sum(rep_arg);
      LieData L = load_lie_arg(rep_lie);
      auto args = parse_args(rep_args, L.dim);
      rep.inputs.emplace_back("graph", serialize(g));
      rep.inputs.emplace_back("lie", L.name);
      PolyElement r = b_eval(g, args, L);
      rep.payload.emplace_back("result", r.str());
      emit(rep, format);
      return 0;
    }
    if (*rl) {
      RunReport rep = basic_report("relations");
      rep.bounds.emplace_back("n", std::to_string(rel_n));
      rep.bounds.emplace_back("m", std::to_string(rel_m));
      rep.bounds.emplace_back("e", std::to_string(rel_e));
      auto rels = relations_at(rel_n, rel_m, rel_e);
      rep.payload.emplace_back("count", std::to_string(rels.size()));
      int idx = 0;
      for (const auto& rel : rels)
        rep.payload.emplace_back(
            "relation_" + std::to_string(idx++) + "_from_" + rel.parent_key +
                "_v" + std::to_string(rel.vertex) + "_type" +
                std::to_string(rel.type),
            serialize(rel.relation));
      emit(rep, format);
      return 0;
    }
    if (*fx) {
      if (fx_name.empty()) {
        for (const auto& name : fixture_names())
          std::cout << name << ": " << fixture_dsl(name) << "\n";
      } else {
        std::cout << fixture_dsl(fx_name) << "\n";
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
