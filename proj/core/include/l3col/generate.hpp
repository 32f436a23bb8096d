#pragma once

// Seeded random instances: plain random graphs and lists, and self-checked
// members of the five solver classes.

#include <cstdint>
#include <random>

#include "l3col/classify.hpp"
#include "l3col/graph.hpp"
#include "l3col/io.hpp"
#include "l3col/lists.hpp"

namespace l3col {

using Rng = std::mt19937_64;

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// Each vertex keeps {1,2,3} with probability 1 - restrict_prob, otherwise
/// gets a uniformly random non-empty proper subset.
ListAssignment random_lists(int n, double restrict_prob, Rng& rng);

/// Random lists of size 1 or 2 only (the 2-list regime).
ListAssignment random_small_lists(int n, Rng& rng);

/// Random permutation relabelling.
Graph shuffle_vertices(const Graph& g, Rng& rng);

struct GenOptions {
  /// Reject graphs containing K4 (those are decided by the K4 test alone).
  bool k4_free = true;
  /// Restriction probability for random_lists; negative means drawn per
  /// instance from [0, 0.6].
  double restrict_prob = -1;
  /// Growth attempts before the dominating-vertex fallback.
  int retry_budget = 64;
};

/// Random graph in the class, verified by classify. Up to 64 vertices by
/// randomized edge growth (a seed cycle of the length the class solver keys
/// on, then edges that shorten a distance-3 pair and create no forbidden
/// induced cycle), falling back to a dominating vertex plus random admissible
/// edges. Larger n uses a hub over a disjoint union of class-friendly blocks.
/// Throws GenerationError when no member was found.
Graph gen_class_graph(GraphClass c, int n, std::uint64_t seed, const GenOptions& opt = {});

/// gen_class_graph plus random_lists from the same stream.
Instance gen_class_instance(GraphClass c, int n, std::uint64_t seed, const GenOptions& opt = {});

}  // namespace l3col
