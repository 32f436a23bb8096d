#include "l3col/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "l3col/errors.hpp"
#include "l3col/twosat.hpp"

namespace l3col {

std::string_view summary_name(N0Summary s) {
  switch (s) {
    case N0Summary::Yes: return "yes";
    case N0Summary::AllNo: return "all-no";
    case N0Summary::Mixed: return "mixed";
  }
  return "?";
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::C5Free: return "c5-free";
    case Route::C6Free: return "c6-free";
    case Route::C4C7Free: return "c4c7-free";
    case Route::C4C8Free: return "c4c8-free";
    case Route::C4C9Free: return "c4c9-free";
    case Route::Exact: return "exact";
  }
  return "?";
}

bool is_cycle_pattern(std::span<const int> colours) {
  const int k = static_cast<int>(colours.size());
  if (k == 6) {
    for (int i = 0; i < 6; ++i)
      if (colours[i] == colours[(i + 2) % 6]) return true;
    return false;
  }
  if (k == 7) {
    for (int c = 1; c <= 3; ++c) {
      std::vector<int> at;
      for (int i = 0; i < 7; ++i)
        if (colours[i] == c) at.push_back(i);
      if (at.size() != 2) continue;
      const int d = at[1] - at[0];
      if (std::min(d, 7 - d) == 2) return true;
    }
    return false;
  }
  throw ContractError("colour patterns are defined for 6- and 7-cycles only");
}

// ---- full N0-propagation ----------------------------------------------------

namespace {

struct BranchResult {
  Outcome outcome = Outcome::Unknown;
  bool inherited = false;
  Colouring colouring;
  ListAssignment lists;
  std::size_t steps = 0;
};

BranchResult run_branch(const Graph& g, const ListAssignment& L, const Precolouring& p,
                        const N0Options& opt, const CycleCache* cycles) {
  PropagateOptions po;
  po.record_trace = false;
  po.cycles = cycles;
  PropagationResult r = propagate(g, restrict_to_precolouring(L, p), opt.rules, po);
  BranchResult b;
  b.outcome = r.outcome;
  b.steps = r.steps;
  if (r.outcome == Outcome::Yes) b.colouring = std::move(r.colouring);
  if (r.outcome == Outcome::Unknown && opt.keep_branches) b.lists = std::move(r.lists);
  return b;
}

}  // namespace

N0Report full_n0_propagation(const Graph& g, const ListAssignment& L, std::span<const Vertex> N0,
                             const N0Options& opt) {
  const std::vector<Precolouring> pcs = enumerate_promising(g, L, N0, opt.bound);
  const std::size_t count = pcs.size();

  CycleCache own;
  const CycleCache* cycles = opt.cycles;
  if ((opt.rules.c6 || opt.rules.c7) &&
      (!cycles || (opt.rules.c6 && !cycles->has_c6) || (opt.rules.c7 && !cycles->has_c7))) {
    own = CycleCache::build(g, opt.rules);
    cycles = &own;
  }

  std::vector<char> skipped(count, 0);
  if (opt.skip)
    for (std::size_t i = 0; i < count; ++i) skipped[i] = opt.skip(pcs[i]) ? 1 : 0;

  std::vector<BranchResult> results(count);
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::size_t first_yes = kNone;

  auto evaluate = [&](std::size_t i) {
    if (skipped[i]) {
      results[i].outcome = Outcome::No;
      results[i].inherited = true;
    } else {
      results[i] = run_branch(g, L, pcs[i], opt, cycles);
    }
  };

  const int jobs = std::max(1, std::min<int>(opt.jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      evaluate(i);
      if (results[i].outcome == Outcome::Yes && first_yes == kNone) {
        first_yes = i;
        if (opt.stop_on_yes) break;
      }
    }
  } else {
    // Workers pull indices in order; everything below the smallest Yes index
    // is always evaluated, so the aggregate matches the sequential run.
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> best{kNone};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      while (true) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        if (opt.stop_on_yes && i > best.load()) return;
        try {
          evaluate(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          best.store(0);
          return;
        }
        if (results[i].outcome == Outcome::Yes) {
          std::size_t cur = best.load();
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
        }
      }
    };
    {
      std::vector<std::jthread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    first_yes = best.load();
  }

  N0Report rep;
  const std::size_t limit = (opt.stop_on_yes && first_yes != kNone) ? first_yes + 1 : count;
  for (std::size_t i = 0; i < limit; ++i) {
    BranchResult& r = results[i];
    rep.rule_steps += r.steps;
    switch (r.outcome) {
      case Outcome::Yes: ++rep.yes_branches; break;
      case Outcome::No: ++rep.no_branches; break;
      case Outcome::Unknown: ++rep.unknown_branches; break;
    }
    if (r.inherited) ++rep.inherited_branches;
    if (opt.keep_branches)
      rep.branches.push_back({pcs[i], r.outcome, r.inherited, std::move(r.lists)});
  }
  if (first_yes != kNone) {
    rep.summary = N0Summary::Yes;
    rep.witness = std::move(results[first_yes].colouring);
  } else if (rep.unknown_branches == 0) {
    rep.summary = N0Summary::AllNo;
  } else {
    rep.summary = N0Summary::Mixed;
  }
  return rep;
}

// ---- full p-propagation -----------------------------------------------------

PReport full_p_propagation(const Graph& g, const ListAssignment& L, int p, const SubsetFamily& family,
                           const N0Options& opt) {
  if (p < 0 || p > 7) throw ContractError("p-propagation supports p in 0..7");
  PReport out;
  bool all_no = true;

  auto consider = [&](std::vector<Vertex> subset) -> bool {
    N0Report r = full_n0_propagation(g, L, subset, opt);
    ++out.subsets_examined;
    out.branches += r.total();
    out.rule_steps += r.rule_steps;
    if (r.summary != N0Summary::AllNo) all_no = false;
    const bool yes = r.summary == N0Summary::Yes;
    if (yes) out.witness = r.witness;
    out.subsets.push_back({std::move(subset), std::move(r)});
    return !yes;
  };

  if (family.kind == SubsetPolicy::All) {
    const int n = g.order();
    bool go = true;
    for (int size = 0; size <= std::min(p, n) && go; ++size) {
      std::vector<Vertex> idx(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) idx[i] = i;
      while (go) {
        go = consider(idx);
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
      }
      if (size == 0 && !go) break;
    }
    if (!go) {
      out.summary = N0Summary::Yes;
      return out;
    }
  } else {
    const int k = family.cycle_length;
    if (k > p) throw ContractError("cycle family longer than p");
    std::vector<InducedCycle> own;
    const std::vector<InducedCycle>* cycles = nullptr;
    if (opt.cycles && k == 6 && opt.cycles->has_c6) cycles = &opt.cycles->c6;
    else if (opt.cycles && k == 7 && opt.cycles->has_c7) cycles = &opt.cycles->c7;
    else {
      own = enumerate_induced_cycles(g, k);
      cycles = &own;
    }
    out.vacuous = cycles->empty();
    for (const InducedCycle& c : *cycles)
      if (!consider(c.vertices)) {
        out.summary = N0Summary::Yes;
        return out;
      }
  }
  out.summary = all_no ? N0Summary::AllNo : N0Summary::Mixed;
  return out;
}

// ---- class solvers ----------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;

void check(bool ok, Route r, const char* what) {
  if (!ok) throw ContractError(std::string(route_name(r)) + " solver precondition failed: " + what);
}

void finish_yes(SolveReport& rep, const Graph& g, const ListAssignment& L, Colouring c) {
  if (!respects(c, g, L)) throw std::logic_error("solver produced a colouring that does not respect the lists");
  rep.yes = true;
  rep.witness = std::move(c);
}

bool has_empty_list(const ListAssignment& L) { return rule_no_empty(L).has_value(); }

N0Options base_options(const SolveOptions& opt) {
  N0Options o;
  o.jobs = opt.jobs;
  o.keep_branches = false;
  return o;
}

void absorb(SolveReport& rep, const N0Report& r) {
  rep.stats.branches += r.total();
  rep.stats.rule_steps += r.rule_steps;
}

// Decides from an N0 report that the class guarantees to be terminal.
void decide_terminal(SolveReport& rep, const Graph& g, const ListAssignment& L, const N0Report& r,
                     Route route, const char* stage) {
  absorb(rep, r);
  rep.reason = stage;
  if (r.summary == N0Summary::Yes) {
    finish_yes(rep, g, L, r.witness);
  } else if (r.summary == N0Summary::Mixed) {
    throw OutOfClassError(std::string(route_name(route)),
                          std::string(stage) + " left " + std::to_string(r.unknown_branches) +
                              " undecided branches");
  }
}

SolveReport c5free_impl(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  const Graph& g = f.graph();
  if (L.size() != static_cast<std::size_t>(g.order())) throw ContractError("list assignment size mismatch");
  check(f.diameter_at_most_2(), Route::C5Free, "diameter exceeds 2");
  check(f.cycle_free(5), Route::C5Free, "graph contains an induced C5");
  SolveReport rep;
  rep.route = Route::C5Free;
  rep.path.push_back(Route::C5Free);
  if (has_empty_list(L)) {
    rep.reason = "empty-list";
    return rep;
  }

  if (const auto& bip = f.bipartition()) {
    if (!is_complete_bipartite(g, *bip))
      throw std::logic_error("bipartite graph of diameter 2 that is not complete bipartite");
    rep.reason = "bipartite";
    bool any_candidate = false;
    for (int role = 0; role < 2; ++role) {
      const auto& mono = role == 0 ? bip->part_a : bip->part_b;
      const auto& other = role == 0 ? bip->part_b : bip->part_a;
      ColourSet common = ColourSet::full();
      for (Vertex u : mono) common = common & L[u];
      for (int i = 1; i <= 3; ++i) {
        if (!common.contains(i)) continue;
        any_candidate = true;
        ListAssignment M = L;
        bool empty = false;
        for (Vertex u : mono) M[u] = ColourSet::single(i);
        for (Vertex v : other) {
          M[v] = M[v].without(i);
          empty = empty || M[v].empty();
        }
        ++rep.stats.branches;
        if (empty) continue;
        if (auto c = solve_2list(g, M)) {
          finish_yes(rep, g, L, std::move(*c));
          return rep;
        }
      }
    }
    if (!any_candidate) rep.notes.push_back("no colour is common to all lists of either side");
    return rep;
  }

  if (f.has_k4()) {
    rep.reason = "k4";
    return rep;
  }
  const auto pattern = find_triangle_or_induced_c5(g);
  if (!std::holds_alternative<Triangle>(pattern))
    throw std::logic_error("C5-free graph returned an induced C5");
  const Triangle t = std::get<Triangle>(pattern);
  N0Options o = base_options(opt);
  decide_terminal(rep, g, L, full_n0_propagation(g, L, t, o), Route::C5Free, "n0");
  return rep;
}

SolveReport c5_driver(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt, Route self) {
  const Graph& g = f.graph();
  if (f.cycle_free(5)) {
    SolveReport rep = c5free_impl(f, L, opt);
    rep.path.insert(rep.path.begin(), self);
    return rep;
  }
  SolveReport rep;
  rep.route = self;
  rep.path.push_back(self);
  if (has_empty_list(L)) {
    rep.reason = "empty-list";
    return rep;
  }
  if (f.has_k4()) {
    rep.reason = "k4";
    return rep;
  }
  const auto c5 = find_induced_cycle(g, 5, opt.limits);
  if (!c5) throw std::logic_error("graph with an induced C5 returned none");
  N0Options o = base_options(opt);
  decide_terminal(rep, g, L, full_n0_propagation(g, L, c5->vertices, o), self, "n0");
  return rep;
}

SolveReport c6free_impl(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  if (L.size() != static_cast<std::size_t>(f.graph().order())) throw ContractError("list assignment size mismatch");
  check(f.diameter_at_most_2(), Route::C6Free, "diameter exceeds 2");
  check(f.cycle_free(6), Route::C6Free, "graph contains an induced C6");
  return c5_driver(f, L, opt, Route::C6Free);
}

SolveReport c4c7free_impl(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  if (L.size() != static_cast<std::size_t>(f.graph().order())) throw ContractError("list assignment size mismatch");
  check(f.diameter_at_most_2(), Route::C4C7Free, "diameter exceeds 2");
  check(f.cycle_free(4), Route::C4C7Free, "graph contains an induced C4");
  check(f.cycle_free(7), Route::C4C7Free, "graph contains an induced C7");
  return c5_driver(f, L, opt, Route::C4C7Free);
}

// Shared driver for the C6 and C7 cycle classes.
SolveReport cycle_driver(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt, Route self,
                         int k) {
  const Graph& g = f.graph();
  if (L.size() != static_cast<std::size_t>(g.order())) throw ContractError("list assignment size mismatch");
  check(f.diameter_at_most_2(), self, "diameter exceeds 2");
  check(f.cycle_free(4), self, "graph contains an induced C4");
  check(f.cycle_free(k + 2), self, k == 6 ? "graph contains an induced C8" : "graph contains an induced C9");

  if (f.cycle_free(k)) {
    SolveReport rep = k == 6 ? c6free_impl(f, L, opt) : c4c7free_impl(f, L, opt);
    rep.path.insert(rep.path.begin(), self);
    return rep;
  }
  SolveReport rep;
  rep.route = self;
  rep.path.push_back(self);
  if (has_empty_list(L)) {
    rep.reason = "empty-list";
    return rep;
  }
  if (f.has_k4()) {
    rep.reason = "k4";
    return rep;
  }

  const RuleSet stage2_rules = k == 6 ? RuleSet::basic().with_c6() : RuleSet::basic().with_c7();
  const CycleCache cache = CycleCache::build(g, stage2_rules, opt.limits);
  const auto& cycles = k == 6 ? cache.c6 : cache.c7;

  // Stage 1: p-propagation. Any Yes decides; otherwise every pattern branch
  // on every induced k-cycle has to be No for the cycle rule to be safe.
  N0Options s1 = base_options(opt);
  s1.cycles = &cache;
  s1.keep_branches = opt.stage1 == SubsetPolicy::Cycles;
  const SubsetFamily family =
      opt.stage1 == SubsetPolicy::Cycles ? SubsetFamily::cycles(k) : SubsetFamily::all();
  PReport stage1 = full_p_propagation(g, L, k, family, s1);
  rep.stats.branches += stage1.branches;
  rep.stats.rule_steps += stage1.rule_steps;
  rep.stats.subsets += stage1.subsets_examined;
  if (stage1.summary == N0Summary::Yes) {
    rep.reason = "stage1";
    finish_yes(rep, g, L, stage1.witness);
    return rep;
  }
  if (stage1.summary == N0Summary::AllNo) {
    rep.reason = "stage1";
    return rep;
  }

  std::vector<SubsetReport> pattern_reports;
  if (opt.stage1 == SubsetPolicy::Cycles) {
    pattern_reports = std::move(stage1.subsets);
  } else {
    N0Options s1c = s1;
    s1c.keep_branches = true;
    PReport again = full_p_propagation(g, L, k, SubsetFamily::cycles(k), s1c);
    rep.stats.branches += again.branches;
    rep.stats.rule_steps += again.rule_steps;
    if (again.summary == N0Summary::Yes)
      throw std::logic_error("cycle subsets found Yes after the all-subsets run did not");
    pattern_reports = std::move(again.subsets);
  }
  for (const SubsetReport& sr : pattern_reports)
    for (const BranchRecord& b : sr.report.branches)
      if (b.outcome != Outcome::No && is_cycle_pattern(b.precolouring.colours))
        throw OutOfClassError(std::string(route_name(self)),
                              "a pattern colouring of an induced C" + std::to_string(k) +
                                  " stayed undecided");

  // Stage 2: the least induced cycle, pattern branches already known to be No.
  N0Options s2 = base_options(opt);
  s2.rules = stage2_rules;
  s2.cycles = &cache;
  s2.skip = [](const Precolouring& p) { return is_cycle_pattern(p.colours); };
  N0Report r2 = full_n0_propagation(g, L, cycles.front().vertices, s2);
  decide_terminal(rep, g, L, r2, self, "stage2");
  return rep;
}

template <class Fn>
SolveReport timed(Fn&& fn) {
  const auto start = Clock::now();
  SolveReport rep = fn();
  rep.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return rep;
}

// ---- exact search -----------------------------------------------------------

class ExactSearch {
 public:
  ExactSearch(const Graph& g, const SolveOptions& opt, SolveReport& rep)
      : g_(g), opt_(opt), rep_(rep), start_(Clock::now()) {
    rules_ = g.has_matrix() ? RuleSet::basic() : RuleSet::none();
    rules_.single_colour = true;
  }

  std::optional<Colouring> run(const ListAssignment& L) {
    ++rep_.stats.nodes;
    if (opt_.node_budget && rep_.stats.nodes > opt_.node_budget)
      throw BudgetError("exact search exceeded " + std::to_string(opt_.node_budget) + " nodes");
    if (opt_.time_budget > 0 && (rep_.stats.nodes & 255) == 0 &&
        std::chrono::duration<double>(Clock::now() - start_).count() > opt_.time_budget)
      throw BudgetError("exact search exceeded the time budget");

    PropagateOptions po;
    po.record_trace = false;
    PropagationResult r = propagate(g_, L, rules_, po);
    rep_.stats.rule_steps += r.steps;
    if (r.outcome == Outcome::Yes) return std::move(r.colouring);
    if (r.outcome == Outcome::No) return std::nullopt;

    const Vertex v = pick(r.lists);
    std::vector<int> tried;
    for (int c = 1; c <= 3; ++c) {
      bool symmetric = false;
      for (int t : tried)
        if (swap_invariant(r.lists, t, c)) symmetric = true;
      if (symmetric) continue;
      tried.push_back(c);
      ListAssignment M = r.lists;
      M[v] = ColourSet::single(c);
      if (auto col = run(M)) return col;
    }
    return std::nullopt;
  }

 private:
  // Full-list vertex with the most constrained neighbourhood.
  Vertex pick(const ListAssignment& L) const {
    Vertex best = -1;
    int best_small = -1, best_deg = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (L[v].size() != 3) continue;
      int small = 0;
      for (Vertex w : g_.neighbours(v))
        if (L[w].size() < 3) ++small;
      if (small > best_small || (small == best_small && g_.degree(v) > best_deg)) {
        best = v;
        best_small = small;
        best_deg = g_.degree(v);
      }
    }
    return best;
  }

  // Swapping colours a and b maps L to itself, so the two branches are equivalent.
  static bool swap_invariant(const ListAssignment& L, int a, int b) {
    for (ColourSet s : L)
      if (s.contains(a) != s.contains(b)) return false;
    return true;
  }

  const Graph& g_;
  const SolveOptions& opt_;
  SolveReport& rep_;
  RuleSet rules_;
  Clock::time_point start_;
};

SolveReport exact_impl(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  if (L.size() != static_cast<std::size_t>(g.order())) throw ContractError("list assignment size mismatch");
  SolveReport rep;
  rep.route = Route::Exact;
  rep.path.push_back(Route::Exact);
  rep.reason = "search";
  ExactSearch search(g, opt, rep);
  if (auto c = search.run(L)) finish_yes(rep, g, L, std::move(*c));
  return rep;
}

}  // namespace

SolveReport solve_c5free(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] { return c5free_impl(f, L, opt); });
}
SolveReport solve_c6free(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] { return c6free_impl(f, L, opt); });
}
SolveReport solve_c4c7free(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] { return c4c7free_impl(f, L, opt); });
}
SolveReport solve_c4c8free(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] { return cycle_driver(f, L, opt, Route::C4C8Free, 6); });
}
SolveReport solve_c4c9free(ClassFacts& f, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] { return cycle_driver(f, L, opt, Route::C4C9Free, 7); });
}

SolveReport solve_c5free(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  ClassFacts f(g, opt.limits);
  return solve_c5free(f, L, opt);
}
SolveReport solve_c6free(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  ClassFacts f(g, opt.limits);
  return solve_c6free(f, L, opt);
}
SolveReport solve_c4c7free(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  ClassFacts f(g, opt.limits);
  return solve_c4c7free(f, L, opt);
}
SolveReport solve_c4c8free(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  ClassFacts f(g, opt.limits);
  return solve_c4c8free(f, L, opt);
}
SolveReport solve_c4c9free(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  ClassFacts f(g, opt.limits);
  return solve_c4c9free(f, L, opt);
}

SolveReport solve_class(GraphClass c, const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  switch (c) {
    case GraphClass::C5Free: return solve_c5free(g, L, opt);
    case GraphClass::C6Free: return solve_c6free(g, L, opt);
    case GraphClass::C4C7Free: return solve_c4c7free(g, L, opt);
    case GraphClass::C4C8Free: return solve_c4c8free(g, L, opt);
    case GraphClass::C4C9Free: return solve_c4c9free(g, L, opt);
  }
  throw ContractError("unknown graph class");
}

SolveReport solve_exact(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] { return exact_impl(g, L, opt); });
}

SolveReport dispatch_solve(const Graph& g, const ListAssignment& L, const SolveOptions& opt) {
  return timed([&] {
    ClassFacts f(g, opt.limits);
    std::string why;
    try {
      if (!f.diameter_at_most_2()) {
        why = "unsupported class: diameter exceeds 2";
      } else if (f.cycle_free(5)) {
        return c5free_impl(f, L, opt);
      } else if (f.cycle_free(6)) {
        return c6free_impl(f, L, opt);
      } else if (f.cycle_free(4) && f.cycle_free(7)) {
        return c4c7free_impl(f, L, opt);
      } else if (f.cycle_free(4) && f.cycle_free(8)) {
        return cycle_driver(f, L, opt, Route::C4C8Free, 6);
      } else if (f.cycle_free(4) && f.cycle_free(9)) {
        return cycle_driver(f, L, opt, Route::C4C9Free, 7);
      } else if (f.cycle_free(3) && f.cycle_free(4)) {
        why = "(C3,C4)-free of diameter 2: one of finitely many Moore-type graphs, exact search";
      } else {
        why = "warning: no polynomial route for this class, exact search";
      }
    } catch (const OutOfClassError& e) {
      why = std::string("warning: ") + e.what() + "; exact search";
    } catch (const EnumerationOverflow& e) {
      why = std::string("warning: ") + e.what() + "; exact search";
    } catch (const ConfigError& e) {
      why = std::string("warning: ") + e.what() + "; exact search";
    }
    SolveReport rep = exact_impl(g, L, opt);
    rep.fallback = true;
    rep.notes.push_back(why);
    return rep;
  });
}

}  // namespace l3col
