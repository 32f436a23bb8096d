#include "l3col/hardness.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "l3col/errors.hpp"
#include "l3col/lists.hpp"
#include "l3col/oracle.hpp"
#include "l3col/patterns.hpp"

namespace l3col {

NaeFormula parse_formula(std::string_view text) {
  NaeFormula f;
  std::optional<int> declared;
  int max_var = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "c" || first[0] == 'c' || first[0] == '%' || first[0] == '#') continue;
    if (first == "p") {
      std::string kind;
      long n = 0, m = 0;
      if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
        throw InputError("malformed header, expected 'p cnf N M'", lineno);
      declared = static_cast<int>(n);
      continue;
    }
    ls.clear();
    ls.str(line);
    std::vector<Literal> pending;
    std::string tok;
    while (ls >> tok) {
      char* end = nullptr;
      const long x = std::strtol(tok.c_str(), &end, 10);
      if (end == tok.c_str() || *end != '\0') throw InputError("bad literal '" + tok + "'", lineno);
      if (x == 0) {
        if (pending.size() != 3)
          throw InputError("clause has " + std::to_string(pending.size()) +
                               " literals, expected 3", lineno);
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      const long v = std::labs(x);
      if (v > 1000000) throw InputError("variable index too large", lineno);
      if (declared && v > *declared)
        throw InputError("variable " + std::to_string(v) + " exceeds the header count", lineno);
      max_var = std::max(max_var, static_cast<int>(v));
      pending.push_back({static_cast<int>(v) - 1, x > 0});
    }
    if (!pending.empty()) throw InputError("clause not terminated by 0", lineno);
  }
  f.variables = declared ? *declared : max_var;
  return f;
}

std::string format_formula(const NaeFormula& f) {
  std::string out = "p cnf " + std::to_string(f.variables) + ' ' + std::to_string(f.clauses.size()) + '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) out += std::to_string(l.positive ? l.var + 1 : -(l.var + 1)) + ' ';
    out += "0\n";
  }
  return out;
}

std::optional<std::vector<bool>> nae_satisfiable(const NaeFormula& f) {
  if (f.variables > 30) throw BudgetError("NAE enumeration limited to 30 variables");
  const std::uint64_t total = std::uint64_t{1} << f.variables;
  for (std::uint64_t bitsv = 0; bitsv < total; ++bitsv) {
    bool ok = true;
    for (const Clause& c : f.clauses) {
      int trues = 0;
      for (const Literal& l : c) trues += (((bitsv >> l.var) & 1U) != 0) == l.positive;
      if (trues == 0 || trues == 3) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<bool> tau(static_cast<std::size_t>(f.variables));
    for (int i = 0; i < f.variables; ++i) tau[i] = (bitsv >> i) & 1U;
    return tau;
  }
  return std::nullopt;
}

int max_occurrences(const NaeFormula& f) {
  std::vector<int> occ(static_cast<std::size_t>(f.variables), 0);
  for (const Clause& c : f.clauses)
    for (const Literal& l : c) ++occ[l.var];
  return occ.empty() ? 0 : *std::max_element(occ.begin(), occ.end());
}

std::string role_tag(const VertexRole& r) {
  switch (r.kind) {
    case RoleKind::Hub: return "z";
    case RoleKind::Literal: return "v" + std::to_string(r.variable + 1) + (r.positive ? "" : "'");
    case RoleKind::Clause: return "c" + std::to_string(r.clause + 1) + '.' + std::to_string(r.slot + 1);
    case RoleKind::Subdivision:
      return "s" + std::to_string(r.clause + 1) + '.' + std::to_string(r.slot + 1) + '.' +
             std::to_string(r.step);
  }
  return "?";
}

GadgetGraph build_gadget(const NaeFormula& f) {
  const int n = f.variables;
  const int m = static_cast<int>(f.clauses.size());
  GadgetGraph gg;
  gg.hub = 0;
  gg.roles.resize(static_cast<std::size_t>(1 + 2 * n + 3 * m));
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    const Vertex pos = 1 + 2 * i, neg = 2 + 2 * i;
    gg.roles[pos] = {RoleKind::Literal, i, true};
    gg.roles[neg] = {RoleKind::Literal, i, false};
    edges.push_back({pos, neg});
    edges.push_back({0, pos});
    edges.push_back({0, neg});
  }
  for (int j = 0; j < m; ++j) {
    const Vertex base = 1 + 2 * n + 3 * j;
    for (int s = 0; s < 3; ++s) {
      VertexRole r;
      r.kind = RoleKind::Clause;
      r.clause = j;
      r.slot = s;
      gg.roles[base + s] = r;
    }
    edges.push_back({base, base + 1});
    edges.push_back({base + 1, base + 2});
    edges.push_back({base, base + 2});
    for (int s = 0; s < 3; ++s) {
      const Literal& l = f.clauses[j][s];
      if (l.var < 0 || l.var >= n) throw ContractError("literal variable out of range");
      const Vertex lit = l.positive ? 1 + 2 * l.var : 2 + 2 * l.var;
      edges.push_back({lit, base + s});
      gg.occurrences.push_back({lit, base + s, j, s});
    }
  }
  gg.graph = Graph(static_cast<int>(gg.roles.size()), edges);
  return gg;
}

GadgetGraph subdivide_gadget(const GadgetGraph& gg, int p) {
  if (p < 0) throw ContractError("negative subdivision count");
  if (gg.subdivisions != 0) throw ContractError("gadget is already subdivided");
  if (p == 0) return gg;
  GadgetGraph out;
  out.hub = gg.hub;
  out.roles = gg.roles;
  out.subdivisions = p;
  std::vector<Edge> edges;
  std::vector<std::pair<Vertex, Vertex>> occ;
  for (const Occurrence& o : gg.occurrences) occ.emplace_back(std::min(o.literal, o.clause_vertex), std::max(o.literal, o.clause_vertex));
  std::sort(occ.begin(), occ.end());
  for (const Edge& e : gg.graph.edges())
    if (!std::binary_search(occ.begin(), occ.end(), std::make_pair(e.u, e.v))) edges.push_back(e);
  Vertex next = gg.graph.order();
  for (const Occurrence& o : gg.occurrences) {
    Vertex prev = o.literal;
    for (int step = 1; step <= p; ++step) {
      VertexRole r;
      r.kind = RoleKind::Subdivision;
      r.clause = o.clause;
      r.slot = o.slot;
      r.step = step;
      out.roles.push_back(r);
      edges.push_back({prev, next});
      edges.push_back({gg.hub, next});
      prev = next++;
    }
    edges.push_back({prev, o.clause_vertex});
    out.occurrences.push_back(o);
  }
  out.graph = Graph(next, edges);
  return out;
}

GadgetVerification verify_gadget(const GadgetGraph& gg, int t) {
  if (t < 6 || t > 12 || t % 2 != 0) throw ContractError("verify_gadget needs an even t in 6..12");
  GadgetVerification v;
  v.t = t;
  v.diameter = diameter(gg.graph);
  v.diameter_ok = v.diameter && *v.diameter <= 4;
  v.even_free = true;
  v.only_c3_c5 = true;
  for (int k = 3; k <= t; ++k) {
    std::size_t count = 0;
    for_each_induced_cycle(gg.graph, k, [&](std::span<const Vertex> c) {
      ++count;
      if (k == 5 && std::find(c.begin(), c.end(), gg.hub) == c.end()) ++v.c5_without_hub;
      return true;
    });
    v.census[k] = count;
    if (count == 0) continue;
    if (k % 2 == 0) v.even_free = false;
    if (k != 3 && k != 5) v.only_c3_c5 = false;
  }
  if (gg.subdivisions < t)
    v.notes.push_back("subdivision count " + std::to_string(gg.subdivisions) + " is below t = " +
                      std::to_string(t));
  if (v.c5_without_hub > 0)
    v.notes.push_back(std::to_string(v.c5_without_hub) + " induced C5 avoid the hub");
  v.passed = v.diameter_ok && v.even_free && v.only_c3_c5;
  return v;
}

bool check_equivalence(const NaeFormula& f, const GadgetGraph& gg) {
  const bool sat = nae_satisfiable(f).has_value();
  const bool col = oracle_list_colour(gg.graph, full_lists(gg.graph.order())).has_value();
  return sat == col;
}

}  // namespace l3col
