#pragma once

#include <vector>

#include "kappa/word.hpp"

namespace kappa {

// Every constructor returns a family that verify_family certifies for its
// declared graph and relation.

// 2r+1 words of length 2r+1 over [r+1], pairwise K_{1,r}-different. Word i
// places 1 at position i and j+1 at position i+j (mod 2r+1) for j <= r.
family construct_star(int r);

// 3^l words of length 3l, the cartesian product of the three cyclic block
// words per matching edge; pairwise lK_2-different.
family construct_matching(int l);

// The even permutations of [n+1], pairwise K_n-different; size (n+1)!/2.
family construct_complete(int n);

// The ten permutations of [5] that are pairwise P_4-different (vertex 5
// isolated): the five cyclic shifts of 12435 and of 43125.
family construct_p4_ten();

// Concatenation product over families whose graphs have pairwise disjoint
// supports; size is the product of the input sizes.
family product_construction(const std::vector<family>& fs);

// Adds `offset` to every symbol (and graph vertex). Stars are unchanged.
family shift_family(const family& f, int offset);
pattern_word shift_word(const pattern_word& w, int offset);

// Splices y into x: non-star cells of x stay put, the k-th star position of
// x receives y_k, and the remaining cells of y extend the word to length
// (non-star count of x) + |y|. Throws on symbol overlap.
pattern_word substitute(const pattern_word& x, const pattern_word& y);

// Pairwise colliding permutations of [n] built by iterating the length-4
// substitution step over the ten-word base; size 10^((n-5)/4) * 10 when
// n = 1 (mod 4), with verified small bases covering the other residues.
family rho_recursion_build(int n);

// From a family of permutations of [n-1] whose pairwise witnesses avoid the
// symbol n-1 (P_{n-2}-different), emits each word with n appended plus the
// variant with n-1 and n exchanged; 2|f| pairwise colliding words over [n].
family parity_double(const family& f, int n);

// C_n words, pairwise K_n-different, containing 1..n in natural positional
// order. anchor <= 0 picks the minimal feasible top-level anchor.
family catalan_construction(int n, int anchor = 0);

// Smallest legal top-level anchor for catalan_construction(n).
int catalan_min_anchor(int n);

// Catalan number C_n.
long long catalan_number(int n);

// Rewrites a family for F into one of equal size for F minus {a,b} plus a
// fresh edge {c,d}: each word gets a suffix that repeats it with a -> c,
// b -> d and stars elsewhere.
family edge_split_transform(const family& f, std::pair<int, int> edge, int c, int d);

}  // namespace kappa
