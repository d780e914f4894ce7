#pragma once

#include "kappa/graph.hpp"
#include "kappa/word.hpp"

namespace kappa {

// True iff some position holds the two endpoints of an edge of g. Star cells
// never match an edge. Throws input_error on length mismatch.
bool is_g_different(const pattern_word& x, const pattern_word& y, const natural_graph& g);

// True iff some position holds two non-star symbols differing by exactly 1.
bool is_colliding(const pattern_word& x, const pattern_word& y);

// Checks every unordered pair of words of f against f.relation (and the order
// constraint, if any). Malformed families (mixed lengths, repeated symbols
// within a word) raise input_error naming the offending word index.
verification_report verify_family(const family& f);

// P_n on vertices 1..n. Colliding permutations of [n] are exactly the
// P_n-different ones, which is how rho(n) reduces to kappa(P_n, n).
natural_graph collision_graph_of_path(int n);

}  // namespace kappa
