#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kappa/graph.hpp"

namespace kappa {

using u128 = unsigned __int128;

std::string u128_to_string(u128 v);

// Exact chromatic number by branch-and-bound coloring; refuses |V| > 16.
int chromatic_number(const natural_graph& g);

// chi(G)^|V(G)| with |V(G)| counting declared vertices, isolated included.
u128 chromatic_power_upper(const natural_graph& g);

// The same bound evaluated on the non-isolated vertices only; this is the
// tightest form and the one handed to the solver as a cap. Saturates at
// 2^63-1, far above any feasible conflict graph.
unsigned long long solver_upper_cap(const natural_graph& g);

// Exact matching number; refuses |V| > 20.
int matching_number(const natural_graph& g);

// 2r+1 when g is isomorphic to the star K_{1,r} (exact kappa value).
std::optional<long long> star_exact(const natural_graph& g);

struct star_part {
  int center = 0;
  std::vector<int> leaves;
};

// Lower bound on kappa(g) from a maximum matching turned into vertex-disjoint
// stars: max(3^nu, prod(2*l_i+1)), with the star decomposition as certificate.
struct decomposition_bound {
  unsigned long long value = 1;
  unsigned long long product_value = 1;   // prod(2*l_i + 1)
  unsigned long long matching_value = 1;  // 3^nu
  std::vector<std::pair<int, int>> matching;
  std::vector<star_part> stars;

  // Positions needed to realize each route; the bound applies to kappa(g, n)
  // only once n accommodates the corresponding construction.
  int product_length() const;
  int matching_length() const;

  // Largest of the routes that fit into n positions (1 when none do).
  unsigned long long value_at(int n) const;
};

decomposition_bound decomposition_lower(const natural_graph& g);

unsigned long long binomial(int n, int k);

// binom(n, floor(n/2)): the colliding-permutation upper bound.
unsigned long long binomial_upper(int n);

struct alpha_ratio_result {
  int t = 0;
  int vertex_count = 0;       // t(t-1)
  int alpha = 0;              // independence number of L(K-hat_t)
  int ratio_num = 0;          // |V|/alpha, reduced
  int ratio_den = 1;
};

// Independence number and |V|/alpha for the line graph of the bidirected
// complete digraph on t vertices; 2 <= t <= 6.
alpha_ratio_result line_graph_alpha_ratio(int t);

struct bound_report {
  natural_graph graph;
  int chromatic = 0;
  u128 chromatic_power = 1;
  int matching = 0;
  decomposition_bound decomposition;
  std::optional<long long> star;
  std::optional<unsigned long long> binomial_rho;  // set when rho context given
};

bound_report compute_bounds(const natural_graph& g, std::optional<int> rho_n = {});

}  // namespace kappa
