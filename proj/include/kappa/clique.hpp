#pragma once

#include <cstdint>
#include <vector>

namespace kappa {

// Fixed-size bitset over the vertex range of one graph.
struct dyn_bits {
  std::vector<std::uint64_t> w;

  dyn_bits() = default;
  explicit dyn_bits(std::size_t words) : w(words, 0) {}

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto x : w)
      if (x) return true;
    return false;
  }
  std::size_t count() const;
  int first() const;  // index of lowest set bit, -1 if none

  void intersect(const std::uint64_t* other) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= other[i];
  }
  void subtract(const std::uint64_t* other) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~other[i];
  }
};

// Undirected graph as an adjacency bit-matrix.
class bit_graph {
 public:
  bit_graph() = default;
  explicit bit_graph(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

  std::size_t size() const { return n_; }
  std::size_t word_count() const { return words_; }

  void add_edge(std::size_t u, std::size_t v) {
    row_mut(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
    row_mut(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
  }
  bool adjacent(std::size_t u, std::size_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1;
  }
  const std::uint64_t* row(std::size_t v) const { return bits_.data() + v * words_; }

  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;

  bit_graph complement() const;

 private:
  std::uint64_t* row_mut(std::size_t v) { return bits_.data() + v * words_; }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct clique_result {
  int size = 0;
  std::vector<int> members;     // original vertex ids, ascending
  std::uint64_t nodes = 0;      // branch-and-bound nodes over all phases
  bool cap_reached = false;     // search stopped because the incumbent met the cap
};

// Exact maximum clique. Branch and bound with greedy-coloring bounds over
// bit-parallel candidate sets, vertices taken in degeneracy order. upper_cap
// (0 = none) lets a certified external bound stop the search early. Root
// subtrees are distributed round-robin over `threads` workers with
// worker-local incumbents; the witness is recovered afterwards by a
// deterministic lexicographic extraction pass, so value and witness do not
// depend on the worker count.
//
// fixed_vertex (>= 0) restricts the search to cliques through that vertex;
// callers use it when the graph is known to be vertex-transitive.
clique_result max_clique(const bit_graph& g, int upper_cap = 0, int threads = 1,
                         int fixed_vertex = -1);

// Exact independence number via the complement graph.
clique_result max_independent_set(const bit_graph& g, int threads = 1);

}  // namespace kappa
