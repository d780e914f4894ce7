#pragma once

#include <optional>
#include <vector>

#include "kappa/clique.hpp"
#include "kappa/graph.hpp"
#include "kappa/word.hpp"

namespace kappa {

// Conflict graph over all legal placements of the relevant symbols into [n].
// A placement is an injective assignment, stored as a pattern word with stars
// in the unused positions; two placements are adjacent when the mode's
// predicate holds. Enumeration order is the lexicographic order of the
// position tuple (position of the smallest symbol first), which fixes vertex
// ids for witness determinism.
struct conflict_graph {
  natural_graph graph;
  int n = 0;
  relation_kind mode = relation_kind::graph_different;
  std::optional<std::vector<int>> order_constraint;
  std::vector<int> placed_symbols;       // sorted
  std::vector<pattern_word> placements;  // vertex id -> word
  bit_graph adjacency;

  std::size_t size() const { return placements.size(); }
};

// Number of placements without materializing them; saturates at 2^63-1.
unsigned long long count_placements(const natural_graph& g, int n,
                                    const std::optional<std::vector<int>>& order_constraint);

conflict_graph build_conflict_graph(const natural_graph& g, int n, relation_kind mode,
                                    std::optional<std::vector<int>> order_constraint = {},
                                    std::size_t max_vertices = 20000);

}  // namespace kappa
