#pragma once

// Plain-text instance format:
//
//   # comment
//   n m
//   u v          (m edge lines, 0-based vertices)
//   v: c1 c2     (optional list lines; unlisted vertices get {1,2,3})

#include <string>
#include <string_view>

#include "l3col/graph.hpp"
#include "l3col/hardness.hpp"
#include "l3col/lists.hpp"

namespace l3col {

struct Instance {
  Graph graph;
  ListAssignment lists;
};

/// Throws InputError with the 1-based line of the problem.
Instance parse_instance(std::string_view text);
Instance read_instance(const std::string& path);

/// Canonical text: edges ascending, list lines only for lists other than {1,2,3}.
std::string format_instance(const Graph& g, const ListAssignment& L);
void write_instance(const std::string& path, const Graph& g, const ListAssignment& L);

/// DIMACS edge format ("p edge N M", "e u v", 1-based). Graph only.
Graph parse_dimacs_graph(std::string_view text);

/// "v c" per line, vertices ascending.
std::string format_colouring(const Colouring& c);

/// "index role" per line (see role_tag).
std::string format_roles(const GadgetGraph& gg);

/// Whole-file read; InputError if the file cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace l3col
