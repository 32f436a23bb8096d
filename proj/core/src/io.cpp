#include "l3col/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "l3col/errors.hpp"

namespace l3col {

namespace {

// Splits a line into whitespace tokens, dropping '#' comments.
std::vector<std::string> tokens(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ls(line.substr(0, line.find('#')));
  std::string t;
  while (ls >> t) out.push_back(t);
  return out;
}

long to_int(const std::string& s, int lineno) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw InputError("expected an integer, got '" + s + "'", lineno);
  return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  ListAssignment lists;
  std::vector<char> listed;

  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2) throw InputError("expected header 'n m'", lineno);
      n = to_int(tok[0], lineno);
      m = to_int(tok[1], lineno);
      if (n < 0 || m < 0) throw InputError("negative count in header", lineno);
      lists.assign(static_cast<std::size_t>(n), ColourSet::full());
      listed.assign(static_cast<std::size_t>(n), 0);
      continue;
    }
    if (static_cast<long>(edges.size()) < m) {
      if (tok.size() != 2 || tok[0].back() == ':')
        throw InputError("expected edge line 'u v' (" + std::to_string(edges.size()) + " of " +
                             std::to_string(m) + " read)", lineno);
      const long u = to_int(tok[0], lineno), v = to_int(tok[1], lineno);
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw InputError("vertex out of range 0.." + std::to_string(n - 1), lineno);
      if (u == v) throw InputError("self-loop at vertex " + std::to_string(u), lineno);
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
      continue;
    }
    // list line "v: c1 c2"
    const std::string body = line.substr(0, line.find('#'));
    const auto colon = body.find(':');
    if (colon == std::string::npos)
      throw InputError(static_cast<long>(edges.size()) == m && tok.size() == 2
                           ? "more edge lines than the header declares"
                           : "expected list line 'v: colours'",
                       lineno);
    const auto head_tok = tokens(body.substr(0, colon));
    if (head_tok.size() != 1) throw InputError("expected a single vertex before ':'", lineno);
    const std::string head = head_tok[0];
    const long v = to_int(head, lineno);
    if (v < 0 || v >= n) throw InputError("vertex out of range 0.." + std::to_string(n - 1), lineno);
    if (listed[v]) throw InputError("second list for vertex " + std::to_string(v), lineno);
    listed[v] = 1;
    unsigned mask = 0;
    for (const std::string& t : tokens(body.substr(colon + 1))) {
      const long c = to_int(t, lineno);
      if (c < 1 || c > 3) throw InputError("colour must be 1, 2 or 3", lineno);
      mask |= 1U << (c - 1);
    }
    if (mask == 0) throw InputError("empty list for vertex " + std::to_string(v), lineno);
    lists[v] = ColourSet::from_mask(mask);
  }
  if (n < 0) throw InputError("missing header 'n m'", lineno);
  if (static_cast<long>(edges.size()) < m)
    throw InputError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()), lineno);
  return {Graph(static_cast<int>(n), edges), std::move(lists)};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Instance read_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::string format_instance(const Graph& g, const ListAssignment& L) {
  std::string out = std::to_string(g.order()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + ' ' + std::to_string(e.v) + '\n';
  for (std::size_t v = 0; v < L.size(); ++v) {
    if (L[v] == ColourSet::full()) continue;
    out += std::to_string(v) + ':';
    for (int c = 1; c <= 3; ++c)
      if (L[v].contains(c)) out += ' ' + std::to_string(c);
    out += '\n';
  }
  return out;
}

void write_instance(const std::string& path, const Graph& g, const ListAssignment& L) {
  write_file(path, format_instance(g, L));
}

Graph parse_dimacs_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = tokens(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (tok.size() != 4) throw InputError("expected 'p edge N M'", lineno);
      n = to_int(tok[2], lineno);
      if (n < 0) throw InputError("negative vertex count", lineno);
      continue;
    }
    if (tok[0] == "e") {
      if (n < 0) throw InputError("edge before the problem line", lineno);
      if (tok.size() != 3) throw InputError("expected 'e u v'", lineno);
      const long u = to_int(tok[1], lineno), v = to_int(tok[2], lineno);
      if (u < 1 || u > n || v < 1 || v > n) throw InputError("vertex out of range 1.." + std::to_string(n), lineno);
      if (u == v) throw InputError("self-loop", lineno);
      edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
      continue;
    }
    throw InputError("unknown line type '" + tok[0] + "'", lineno);
  }
  if (n < 0) throw InputError("missing problem line");
  return Graph(static_cast<int>(n), edges);
}

std::string format_colouring(const Colouring& c) {
  std::string out;
  for (std::size_t v = 0; v < c.size(); ++v) out += std::to_string(v) + ' ' + std::to_string(c[v]) + '\n';
  return out;
}

std::string format_roles(const GadgetGraph& gg) {
  std::string out;
  for (std::size_t v = 0; v < gg.roles.size(); ++v) out += std::to_string(v) + ' ' + role_tag(gg.roles[v]) + '\n';
  return out;
}

}  // namespace l3col
