#include "cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>
#include <optional>
#include <string>

#include "l3col/classify.hpp"
#include "l3col/errors.hpp"
#include "l3col/generate.hpp"
#include "l3col/hardness.hpp"
#include "l3col/io.hpp"
#include "l3col/oracle.hpp"
#include "l3col/propagation.hpp"
#include "l3col/report.hpp"
#include "l3col/solver.hpp"

namespace l3col {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  return read_file(path);
}

Instance load(const std::string& path, bool dimacs) {
  const std::string text = slurp(path);
  if (!dimacs) return parse_instance(text);
  Graph g = parse_dimacs_graph(text);
  const int n = g.order();
  return {std::move(g), full_lists(n)};
}

GadgetGraph make_gadget(const NaeFormula& f, std::optional<int> p, std::optional<int> t) {
  const int subdiv = p ? *p : (t ? *t : 0);
  return subdivide_gadget(build_gadget(f), subdiv);
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"List 3-Colouring on diameter-2 graphs", "l3col"};
  app.require_subcommand(1);

  std::string file;
  bool json = false, dimacs = false;
  int jobs = 1;

  auto* solve = app.add_subcommand("solve", "decide an instance with the routed solver");
  std::string stage1 = "cycles";
  double time_budget = 0;
  std::string witness_path;
  solve->add_option("file", file, "instance file ('-' for stdin)")->required();
  solve->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::Range(1, 256));
  solve->add_option("--stage1", stage1, "subset family for C6/C7 stage 1")->check(CLI::IsMember({"cycles", "all"}));
  solve->add_option("--time-budget", time_budget, "exact search limit in seconds (0 = none)");
  solve->add_option("--witness", witness_path, "also write the witness to this file");
  solve->add_flag("--json", json, "JSON report");
  solve->add_flag("--dimacs", dimacs, "input is a DIMACS edge file (all lists {1,2,3})");

  auto* cls = app.add_subcommand("classify", "print the class profile");
  cls->add_option("file", file, "instance file")->required();
  cls->add_flag("--json", json, "JSON profile");
  cls->add_flag("--dimacs", dimacs, "input is a DIMACS edge file");

  auto* prop = app.add_subcommand("propagate", "run the propagation rules once to a fixpoint");
  std::string rules = "basic";
  bool trace = false;
  prop->add_option("file", file, "instance file")->required();
  prop->add_option("--rules", rules, "comma list of 3,4,5,c6,c7 or basic/all/none");
  prop->add_flag("--trace", trace, "print every list change");
  prop->add_flag("--json", json, "JSON result");
  prop->add_flag("--dimacs", dimacs, "input is a DIMACS edge file");

  auto* orc = app.add_subcommand("oracle", "brute-force decision");
  orc->add_option("file", file, "instance file")->required();
  orc->add_flag("--dimacs", dimacs, "input is a DIMACS edge file");

  std::optional<int> p, t;
  std::string roles_path;
  auto* gad = app.add_subcommand("gadget", "build the hardness gadget of a NAE formula");
  gad->add_option("file", file, "formula file")->required();
  gad->add_option("-p", p, "subdivision vertices per occurrence edge (default t, else 0)")->check(CLI::Range(0, 64));
  gad->add_option("-t", t, "target even cycle bound")->check(CLI::Range(6, 12));
  gad->add_option("--roles", roles_path, "write the role map to this file");

  auto* chk = app.add_subcommand("check-gadget", "verify the gadget and its equivalence with the formula");
  chk->add_option("file", file, "formula file")->required();
  chk->add_option("-p", p, "subdivision count (default t)")->check(CLI::Range(0, 64));
  chk->add_option("-t", t, "even cycle bound, default 6")->check(CLI::Range(6, 12));
  chk->add_flag("--json", json, "JSON verification");

  auto* gen = app.add_subcommand("gen", "generate a random class member with random lists");
  std::string class_arg;
  int n = 0;
  std::uint64_t seed = 0;
  double restrict_prob = -1;
  bool allow_k4 = false;
  std::string out_path;
  gen->add_option("--class", class_arg, "c5free, c6free, c4c7, c4c8 or c4c9")
      ->required()
      ->check(CLI::IsMember({"c5free", "c6free", "c4c7", "c4c8", "c4c9"}));
  gen->add_option("--n", n, "vertex count")->required()->check(CLI::Range(0, 100000));
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--restrict", restrict_prob, "probability of a restricted list");
  gen->add_flag("--allow-k4", allow_k4, "keep graphs that contain K4");
  gen->add_option("-o,--output", out_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*solve) {
      const Instance inst = load(file, dimacs);
      SolveOptions opt;
      opt.jobs = jobs;
      opt.stage1 = stage1 == "all" ? SubsetPolicy::All : SubsetPolicy::Cycles;
      opt.time_budget = time_budget;
      const SolveReport r = dispatch_solve(inst.graph, inst.lists, opt);
      if (json) {
        out << report_json(r) << '\n';
      } else {
        out << report_text(r);
        if (r.yes) out << "witness:\n" << format_colouring(r.witness);
      }
      if (!witness_path.empty() && r.yes) write_file(witness_path, format_colouring(r.witness));
      return r.yes ? 0 : 1;
    }
    if (*cls) {
      const Instance inst = load(file, dimacs);
      const ClassProfile prof = classify(inst.graph);
      out << (json ? profile_json(prof) : describe(prof)) << '\n';
      return 0;
    }
    if (*prop) {
      const Instance inst = load(file, dimacs);
      PropagateOptions po;
      po.record_trace = trace;
      const PropagationResult r = propagate(inst.graph, inst.lists, RuleSet::parse(rules), po);
      if (json) {
        out << propagation_json(r) << '\n';
      } else {
        out << propagation_text(r);
        if (trace) out << "trace:\n" << r.trace.serialize();
        if (r.outcome == Outcome::Yes) out << "witness:\n" << format_colouring(r.colouring);
      }
      return r.outcome == Outcome::No ? 1 : 0;
    }
    if (*orc) {
      const Instance inst = load(file, dimacs);
      const auto c = oracle_list_colour(inst.graph, inst.lists);
      out << "answer: " << (c ? "yes" : "no") << '\n';
      if (c) out << "witness:\n" << format_colouring(*c);
      return c ? 0 : 1;
    }
    if (*gad) {
      const GadgetGraph gg = make_gadget(parse_formula(slurp(file)), p, t);
      out << format_instance(gg.graph, full_lists(gg.graph.order()));
      if (!roles_path.empty()) write_file(roles_path, format_roles(gg));
      return 0;
    }
    if (*chk) {
      const int tt = t ? *t : 6;
      if (tt % 2 != 0) throw InputError("-t must be even");
      const NaeFormula f = parse_formula(slurp(file));
      const GadgetGraph gg = make_gadget(f, p ? p : std::optional<int>(tt), tt);
      const GadgetVerification v = verify_gadget(gg, tt);
      std::optional<bool> equivalent;
      if (gg.graph.order() <= kOracleMaxVertices && f.variables <= 30) equivalent = check_equivalence(f, gg);
      if (json) {
        out << verification_json(v, equivalent) << '\n';
      } else {
        out << verification_text(v);
        out << "equivalence: "
            << (equivalent ? (*equivalent ? "holds" : "FAILS") : "skipped (gadget above oracle size)") << '\n';
        if (max_occurrences(f) > 3) out << "note: some variable occurs more than 3 times\n";
      }
      return v.passed && equivalent.value_or(true) ? 0 : 1;
    }
    if (*gen) {
      GenOptions go;
      go.k4_free = !allow_k4;
      go.restrict_prob = restrict_prob;
      const Instance inst = gen_class_instance(*class_from_name(class_arg), n, seed, go);
      const std::string text = format_instance(inst.graph, inst.lists);
      if (out_path.empty())
        out << text;
      else
        write_file(out_path, text);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace l3col
