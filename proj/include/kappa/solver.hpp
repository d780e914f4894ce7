#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kappa/conflict.hpp"
#include "kappa/graph.hpp"
#include "kappa/word.hpp"

namespace kappa {

struct solve_result {
  long long value = 0;
  family witness;  // passes verify_family; |witness| == value
  std::uint64_t nodes = 0;
  std::string bound_name = "none";      // star | chi_power | binomial | placements | none
  unsigned long long bound_value = 0;   // the cap passed to the search
  bool certified_optimal = true;        // exhausted, or the incumbent met the cap
  bool cap_attained = false;            // value == cap
  bool kappa_certified = false;         // cap also bounds kappa(G) over all n
  bool symmetry_fixed_root = false;     // first placement pinned by transitivity
  long long elapsed_ms = 0;
  int n = 0;
  relation_kind mode = relation_kind::graph_different;
  natural_graph graph;
};

// Exact maximum clique of a conflict graph. When the placement set is
// unconstrained the conflict graph is vertex-transitive under position
// permutations, so the search pins the first placement and solves its
// neighborhood; the witness is deterministic regardless of thread count.
solve_result max_clique_solve(const conflict_graph& cg,
                              std::optional<unsigned long long> upper_cap = {},
                              int threads = 1);

// kappa(g, n): pairwise g-different placements, capped by the tightest of the
// star formula, chromatic power bound and placement count.
solve_result kappa(const natural_graph& g, int n, int threads = 1,
                   std::size_t max_vertices = 20000);

// kappa(g, n) for n = |S(g)| .. n_max; monotone non-decreasing.
std::vector<solve_result> kappa_sweep(const natural_graph& g, int n_max, int threads = 1,
                                      std::size_t max_vertices = 20000);

// rho(n) = kappa(P_n, n) in colliding mode. Refuses n > 7 unless forced (the
// n! = 5040 conflict graph is the default ceiling).
solve_result rho(int n, int threads = 1, bool force = false);

// kappa_id: K_n-different placements with 1..n in natural order within
// n_positions positions.
solve_result kappa_id(int n, int n_positions, int threads = 1,
                      std::size_t max_vertices = 20000);

struct scan_entry {
  natural_graph graph;  // canonical class representative on [v]
  solve_result result;
};

struct scan_report {
  int v = 0;
  int l = 0;
  int n = 0;
  std::vector<scan_entry> entries;  // all isomorphism classes, canonical order
  long long max_value = 0;
  long long min_value = 0;
  std::vector<std::size_t> argmax;
  std::vector<std::size_t> argmin;
};

// Enumerates the isomorphism classes of graphs on [v] with l edges (isolated
// vertices permitted) and solves kappa(G, n) for each: the finite-n proxy for
// K(v,l) / K(l) / k(l).
scan_report extremal_scan(int v, int l, int n, int threads = 1,
                          std::size_t max_vertices = 20000);

}  // namespace kappa
