#include "l3col/propagation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

#include "l3col/errors.hpp"
#include "l3col/twosat.hpp"

namespace l3col {

using bits::Word;

std::string_view rule_tag(RuleId r) {
  switch (r) {
    case RuleId::NoEmpty: return "R1";
    case RuleId::AllSmall: return "R2";
    case RuleId::SingleColour: return "R3";
    case RuleId::Diamond: return "R4";
    case RuleId::Bull: return "R5";
    case RuleId::C6: return "C6";
    case RuleId::C7: return "C7";
  }
  return "?";
}

std::optional<RuleId> rule_from_tag(std::string_view tag) {
  for (RuleId r : {RuleId::NoEmpty, RuleId::AllSmall, RuleId::SingleColour, RuleId::Diamond,
                   RuleId::Bull, RuleId::C6, RuleId::C7})
    if (rule_tag(r) == tag) return r;
  return std::nullopt;
}

std::string_view outcome_name(Outcome o) {
  switch (o) {
    case Outcome::Yes: return "yes";
    case Outcome::No: return "no";
    case Outcome::Unknown: return "unknown";
  }
  return "?";
}

RuleSet RuleSet::parse(std::string_view text) {
  RuleSet r = none();
  std::string tok;
  auto flush = [&] {
    std::string t;
    for (char ch : tok)
      if (!std::isspace(static_cast<unsigned char>(ch)))
        t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    tok.clear();
    if (t.empty() || t == "none" || t == "1" || t == "2" || t == "r1" || t == "r2") return;
    if (t == "3" || t == "r3" || t == "single") r.single_colour = true;
    else if (t == "4" || t == "r4" || t == "diamond") r.diamond = true;
    else if (t == "5" || t == "r5" || t == "bull") r.bull = true;
    else if (t == "c6") r.c6 = true;
    else if (t == "c7") r.c7 = true;
    else if (t == "basic") r.single_colour = r.diamond = r.bull = true;
    else if (t == "all") r = RuleSet{true, true, true, true, true};
    else throw InputError("unknown rule '" + t + "'");
  };
  for (char ch : text) {
    if (ch == ',') flush();
    else tok += ch;
  }
  flush();
  return r;
}

std::string RuleSet::str() const {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  add(single_colour, "3");
  add(diamond, "4");
  add(bull, "5");
  add(c6, "c6");
  add(c7, "c7");
  return s.empty() ? "none" : s;
}

// ---- trace ----------------------------------------------------------------

namespace {

std::optional<ColourSet> parse_colour_set(std::string_view s) {
  if (s == "-") return ColourSet{};
  unsigned m = 0;
  for (char ch : s) {
    if (ch < '1' || ch > '3') return std::nullopt;
    m |= 1U << (ch - '1');
  }
  if (m == 0) return std::nullopt;
  return ColourSet::from_mask(m);
}

}  // namespace

std::string RuleTrace::serialize() const {
  std::string out;
  for (const TraceEntry& e : entries) {
    out += rule_tag(e.rule);
    out += " site=";
    for (std::size_t i = 0; i < e.site.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e.site[i]);
    }
    out += " vertex=" + std::to_string(e.vertex) + ' ' + e.before.str() + "->" + e.after.str() + '\n';
  }
  return out;
}

RuleTrace RuleTrace::parse(std::string_view text) {
  RuleTrace t;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string tag, site, vertex, change;
    if (!(ls >> tag >> site >> vertex >> change)) throw InputError("truncated trace line", lineno);
    TraceEntry e;
    auto r = rule_from_tag(tag);
    if (!r) throw InputError("unknown rule tag '" + tag + "'", lineno);
    e.rule = *r;
    if (site.rfind("site=", 0) != 0 || vertex.rfind("vertex=", 0) != 0)
      throw InputError("expected site= and vertex= fields", lineno);
    try {
      std::string list = site.substr(5);
      std::size_t pos = 0;
      while (pos < list.size()) {
        auto comma = list.find(',', pos);
        if (comma == std::string::npos) comma = list.size();
        e.site.push_back(std::stoi(list.substr(pos, comma - pos)));
        pos = comma + 1;
      }
      e.vertex = std::stoi(vertex.substr(7));
    } catch (const std::logic_error&) {
      throw InputError("bad vertex number", lineno);
    }
    const auto arrow = change.find("->");
    if (arrow == std::string::npos) throw InputError("expected before->after", lineno);
    auto before = parse_colour_set(std::string_view(change).substr(0, arrow));
    auto after = parse_colour_set(std::string_view(change).substr(arrow + 2));
    if (!before || !after) throw InputError("bad colour set", lineno);
    e.before = *before;
    e.after = *after;
    t.entries.push_back(std::move(e));
  }
  return t;
}

ListAssignment RuleTrace::replay(ListAssignment L) const {
  for (const TraceEntry& e : entries) {
    if (e.vertex < 0 || static_cast<std::size_t>(e.vertex) >= L.size())
      throw ContractError("trace vertex out of range");
    if (L[e.vertex] != e.before)
      throw ContractError("trace entry for vertex " + std::to_string(e.vertex) +
                          " does not match the current list");
    L[e.vertex] = e.after;
  }
  return L;
}

void apply_step(ListAssignment& L, const RuleStep& step) {
  RuleTrace t{step};
  L = t.replay(std::move(L));
}

// ---- reference single steps -------------------------------------------------

std::optional<Vertex> rule_no_empty(const ListAssignment& L) {
  for (std::size_t v = 0; v < L.size(); ++v)
    if (L[v].empty()) return static_cast<Vertex>(v);
  return std::nullopt;
}

std::optional<SmallListsVerdict> rule_all_small(const Graph& g, const ListAssignment& L) {
  for (ColourSet s : L)
    if (s.size() == 3 || s.empty()) return std::nullopt;
  return SmallListsVerdict{solve_2list(g, L)};
}

std::optional<RuleStep> rule_single_colour(const Graph& g, const ListAssignment& L) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (L[u].size() != 1) continue;
    for (Vertex v : g.neighbours(u))
      if (L[u].subset_of(L[v]))
        return RuleStep{{RuleId::SingleColour, {u, v}, v, L[v], L[v].without(L[u])}};
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_diamond(const Graph& g, const ListAssignment& L) {
  for (Vertex x = 0; x < g.order(); ++x) {
    if (L[x].size() != 2) continue;
    for (const DiamondSite& s : diamond_sites_at(g, x)) {
      if (L[s.y].size() != 2 || L[s.y] == L[x]) continue;
      const ColourSet both = L[x] & L[s.y];
      std::vector<Vertex> site{s.u, s.v, s.x, s.y};
      return RuleStep{{RuleId::Diamond, site, s.x, L[s.x], both},
                      {RuleId::Diamond, site, s.y, L[s.y], both}};
    }
  }
  return std::nullopt;
}

std::optional<RuleStep> rule_bull(const Graph& g, const ListAssignment& L) {
  for (Vertex w = 0; w < g.order(); ++w) {
    if (L[w].empty()) continue;
    for (const BullSite& s : bull_sites_at(g, w)) {
      if (L[s.u].size() != 1 || L[s.u] != L[s.v] || L[w] == L[s.u]) continue;
      const ColourSet after = L[w] & L[s.u];
      return RuleStep{{RuleId::Bull, {s.u, s.v, s.w, s.x, s.y}, w, L[w], after}};
    }
  }
  return std::nullopt;
}

namespace {

template <class Fn>
std::optional<RuleStep> over_orientations(std::span<const Vertex> cycle, Fn&& fn) {
  const int k = static_cast<int>(cycle.size());
  std::vector<Vertex> x(static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r) {
    for (int d : {1, -1}) {
      for (int j = 0; j < k; ++j) x[j] = cycle[((r + d * j) % k + k) % k];
      if (auto step = fn(x)) return step;
    }
  }
  return std::nullopt;
}

bool covers_palette(ColourSet a, ColourSet b, ColourSet c) {
  return a.size() == 1 && b.size() == 1 && c.size() == 1 && (a | b | c) == ColourSet::full();
}

}  // namespace

std::optional<RuleStep> rule_c6_on(std::span<const Vertex> cycle, const ListAssignment& L) {
  if (cycle.size() != 6) throw ContractError("Rule-C6 needs a 6-cycle");
  return over_orientations(cycle, [&](const std::vector<Vertex>& x) -> std::optional<RuleStep> {
    if (!covers_palette(L[x[0]], L[x[1]], L[x[2]])) return std::nullopt;
    const ColourSet before = L[x[4]];
    const ColourSet after = L[x[1]] & before;
    if (before == L[x[1]] || after == before) return std::nullopt;
    return RuleStep{{RuleId::C6, x, x[4], before, after}};
  });
}

std::optional<RuleStep> rule_c7_on(std::span<const Vertex> cycle, const ListAssignment& L) {
  if (cycle.size() != 7) throw ContractError("Rule-C7 needs a 7-cycle");
  return over_orientations(cycle, [&](const std::vector<Vertex>& x) -> std::optional<RuleStep> {
    if (!covers_palette(L[x[0]], L[x[1]], L[x[2]])) return std::nullopt;
    if (L[x[3]] != L[x[1]] || !L[x[0]].subset_of(L[x[5]])) return std::nullopt;
    const ColourSet before = L[x[5]];
    return RuleStep{{RuleId::C7, x, x[5], before, before.without(L[x[0]])}};
  });
}

std::optional<RuleStep> rule_c6(const Graph& g, const ListAssignment& L) {
  for (const InducedCycle& c : enumerate_induced_cycles(g, 6))
    if (auto s = rule_c6_on(c.vertices, L)) return s;
  return std::nullopt;
}

std::optional<RuleStep> rule_c7(const Graph& g, const ListAssignment& L) {
  for (const InducedCycle& c : enumerate_induced_cycles(g, 7))
    if (auto s = rule_c7_on(c.vertices, L)) return s;
  return std::nullopt;
}

CycleCache CycleCache::build(const Graph& g, const RuleSet& rules, const CycleSearchLimits& limits) {
  CycleCache c;
  if (rules.c6) {
    c.c6 = enumerate_induced_cycles(g, 6, limits);
    c.has_c6 = true;
  }
  if (rules.c7) {
    c.c7 = enumerate_induced_cycles(g, 7, limits);
    c.has_c7 = true;
  }
  return c;
}

// ---- engine -----------------------------------------------------------------

namespace {

class Engine {
 public:
  Engine(const Graph& g, const ListAssignment& L, const RuleSet& rules,
         const PropagateOptions& opt)
      : g_(g), rules_(rules), opt_(opt), words_(g.words()) {
    res_.lists = L;
  }

  PropagationResult run() {
    if (res_.lists.size() != static_cast<std::size_t>(g_.order()))
      throw ContractError("list assignment size mismatch");
    const bool needs_matrix = rules_.diamond || rules_.bull || rules_.c6 || rules_.c7;
    if (needs_matrix && !g_.has_matrix())
      throw ConfigError("propagation rules beyond Rule 3 need an adjacency matrix");
    if (rule_no_empty(res_.lists)) return finish_no();
    setup_cycles();
    const int n = g_.order();
    if (rules_.bull)
      for (auto& s : singles_) s.assign(words_, 0);
    for (Vertex v = 0; v < n; ++v) note_size(v);

    while (true) {
      if (!r3_.empty()) {
        const Vertex u = r3_.front();
        r3_.pop_front();
        if (!single_colour(u)) return finish_no();
        continue;
      }
      if (!diamond_.empty()) {
        const Vertex x = *diamond_.begin();
        const int r = diamond_at(x);
        if (r < 0) return finish_no();
        if (r == 0) diamond_.erase(diamond_.begin());
        continue;
      }
      if (!bull_.empty()) {
        const Vertex u = *bull_.begin();
        const int r = bull_at(u);
        if (r < 0) return finish_no();
        if (r == 0) bull_.erase(bull_.begin());
        continue;
      }
      if (!c6_dirty_.empty()) {
        const int id = *c6_dirty_.begin();
        const int r = cycle_rule(cycles_->c6[id].vertices, true);
        if (r < 0) return finish_no();
        if (r == 0) c6_dirty_.erase(c6_dirty_.begin());
        continue;
      }
      if (!c7_dirty_.empty()) {
        const int id = *c7_dirty_.begin();
        const int r = cycle_rule(cycles_->c7[id].vertices, false);
        if (r < 0) return finish_no();
        if (r == 0) c7_dirty_.erase(c7_dirty_.begin());
        continue;
      }
      break;
    }

    for (ColourSet s : res_.lists)
      if (s.size() == 3) {
        res_.outcome = Outcome::Unknown;
        return std::move(res_);
      }
    res_.decided_by = RuleId::AllSmall;
    if (auto c = solve_2list(g_, res_.lists)) {
      res_.outcome = Outcome::Yes;
      res_.colouring = std::move(*c);
    } else {
      res_.outcome = Outcome::No;
    }
    return std::move(res_);
  }

 private:
  PropagationResult finish_no() {
    res_.outcome = Outcome::No;
    res_.decided_by = RuleId::NoEmpty;
    return std::move(res_);
  }

  void setup_cycles() {
    if (!rules_.c6 && !rules_.c7) return;
    if (opt_.cycles && (!rules_.c6 || opt_.cycles->has_c6) && (!rules_.c7 || opt_.cycles->has_c7)) {
      cycles_ = opt_.cycles;
    } else {
      own_ = CycleCache::build(g_, rules_, opt_.limits);
      cycles_ = &own_;
    }
    auto index = [&](const std::vector<InducedCycle>& cs, std::vector<std::vector<int>>& of,
                     std::set<int>& dirty) {
      of.assign(static_cast<std::size_t>(g_.order()), {});
      for (std::size_t i = 0; i < cs.size(); ++i) {
        for (Vertex v : cs[i].vertices) of[v].push_back(static_cast<int>(i));
        dirty.insert(static_cast<int>(i));
      }
    };
    if (rules_.c6) index(cycles_->c6, c6_of_, c6_dirty_);
    if (rules_.c7) index(cycles_->c7, c7_of_, c7_dirty_);
  }

  // Queues the triggers for v's current list size.
  void note_size(Vertex v) {
    const ColourSet s = res_.lists[v];
    if (s.size() == 2 && rules_.diamond) diamond_.insert(v);
    if (s.size() != 1) return;
    if (rules_.single_colour) r3_.push_back(v);
    if (rules_.bull) {
      bits::set(singles_[s.first() - 1], v);
      bull_.insert(v);
    }
    if (rules_.c6)
      for (int id : c6_of_[v]) c6_dirty_.insert(id);
    if (rules_.c7)
      for (int id : c7_of_[v]) c7_dirty_.insert(id);
  }

  // False when the list became empty.
  bool change(Vertex v, ColourSet after, RuleId rule, std::span<const Vertex> site) {
    if (opt_.record_trace)
      res_.trace.entries.push_back({rule, {site.begin(), site.end()}, v, res_.lists[v], after});
    res_.lists[v] = after;
    ++res_.steps;
    if (after.empty()) return false;
    note_size(v);
    return true;
  }

  bool single_colour(Vertex u) {
    const ColourSet s = res_.lists[u];
    for (Vertex v : g_.neighbours(u)) {
      if (!s.subset_of(res_.lists[v])) continue;
      const std::array<Vertex, 2> site{u, v};
      if (!change(v, res_.lists[v].without(s), RuleId::SingleColour, site)) return false;
    }
    return true;
  }

  // 1 applied, 0 nothing found, -1 emptied a list.
  int diamond_at(Vertex x) {
    const ColourSet lx = res_.lists[x];
    if (lx.size() != 2) return 0;
    auto rx = g_.row(x);
    for (Vertex y = 0; y < g_.order(); ++y) {
      const ColourSet ly = res_.lists[y];
      if (y == x || ly.size() != 2 || ly == lx || g_.adjacent(x, y)) continue;
      auto ry = g_.row(y);
      int found_u = -1, found_v = -1;
      bits::for_each(
          words_, [&](std::size_t i) { return rx[i] & ry[i]; },
          [&](int u) {
            if (found_u >= 0) return;
            auto ru = g_.row(u);
            const int v = bits::first(
                words_, [&](std::size_t i) { return rx[i] & ry[i] & ru[i] & bits::above_mask(i, u); });
            if (v >= 0) {
              found_u = u;
              found_v = v;
            }
          });
      if (found_u < 0) continue;
      const ColourSet both = lx & ly;
      const std::array<Vertex, 4> site{found_u, found_v, x, y};
      if (!change(x, both, RuleId::Diamond, site)) return -1;
      if (!change(y, both, RuleId::Diamond, site)) return -1;
      return 1;
    }
    return 0;
  }

  int bull_at(Vertex u) {
    const ColourSet lu = res_.lists[u];
    if (lu.size() != 1) return 0;
    const auto& single = singles_[lu.first() - 1];
    auto ru = g_.row(u);
    auto not_u = [&](std::size_t i) {
      Word m = ~ru[i];
      if (static_cast<std::size_t>(u) / 64 == i) m &= ~(Word{1} << (u % 64));
      return m;
    };
    for (Vertex x : g_.neighbours(u)) {
      auto rx = g_.row(x);
      for (Vertex y : g_.neighbours(x)) {
        if (y == u || g_.adjacent(u, y)) continue;
        auto ry = g_.row(y);
        int hit_w = -1, hit_v = -1;
        bits::for_each(
            words_, [&](std::size_t i) { return rx[i] & ry[i] & not_u(i); },
            [&](int w) {
              if (hit_w >= 0 || res_.lists[w] == lu) return;
              auto rw = g_.row(w);
              const int v = bits::first(words_, [&](std::size_t i) {
                Word m = ry[i] & single[i] & ~rx[i] & ~rw[i] & not_u(i);
                if (static_cast<std::size_t>(x) / 64 == i) m &= ~(Word{1} << (x % 64));
                if (static_cast<std::size_t>(w) / 64 == i) m &= ~(Word{1} << (w % 64));
                return m;
              });
              if (v >= 0) {
                hit_w = w;
                hit_v = v;
              }
            });
        if (hit_w < 0) continue;
        const std::array<Vertex, 5> site{u, hit_v, hit_w, x, y};
        if (!change(hit_w, res_.lists[hit_w] & lu, RuleId::Bull, site)) return -1;
        return 1;
      }
    }
    return 0;
  }

  int cycle_rule(const std::vector<Vertex>& cycle, bool c6) {
    auto step = c6 ? rule_c6_on(cycle, res_.lists) : rule_c7_on(cycle, res_.lists);
    if (!step) return 0;
    const TraceEntry& e = step->front();
    if (!change(e.vertex, e.after, e.rule, e.site)) return -1;
    return 1;
  }

  const Graph& g_;
  RuleSet rules_;
  const PropagateOptions& opt_;
  std::size_t words_;
  PropagationResult res_;
  std::deque<Vertex> r3_;
  std::set<Vertex> diamond_, bull_;
  std::set<int> c6_dirty_, c7_dirty_;
  std::vector<std::vector<int>> c6_of_, c7_of_;
  std::array<std::vector<Word>, 3> singles_;
  CycleCache own_;
  const CycleCache* cycles_ = nullptr;
};

}  // namespace

PropagationResult propagate(const Graph& g, const ListAssignment& L, const RuleSet& rules,
                            const PropagateOptions& options) {
  Engine e(g, L, rules, options);
  return e.run();
}

}  // namespace l3col
