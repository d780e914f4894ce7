#pragma once

#include <string>
#include <vector>

#include "kappa/graph.hpp"
#include "kappa/word.hpp"

namespace kappa {

// Directed multigraph with labeled arcs. Vertices are position identifiers;
// each arc's label is the index of the pattern word it stands for, so labels
// are distinct within one digraph. Self-loops are forbidden (one word holds
// both endpoints of an edge in distinct positions).
struct digraph {
  struct arc {
    int tail = 0;
    int head = 0;
    int label = 0;
  };

  std::vector<int> positions;  // sorted vertex ids
  std::vector<arc> arcs;

  void validate() const;  // throws input_error
};

// Vertex per arc (identified by label); arcs (a,b) and (c,d) are adjacent iff
// b=c or a=d. Two parallel arcs (i,j), (i,j) satisfy neither clause and stay
// independent.
natural_graph line_graph(const digraph& d);

struct cover_part {
  natural_graph graph;  // on vertex set [M]
  digraph realizer;     // its line graph, up to isolated-vertex padding
};

// Certificate that the edges of K_M are covered by line graphs of digraphs.
struct cover_certificate {
  int m = 0;
  std::vector<cover_part> parts;
  // covered_by[q-1][r-1] = index of a covering part for the pair {q,r}; the
  // map is derived data and is recomputed when a certificate is loaded.
  std::vector<std::vector<int>> covered_by;

  void rebuild_coverage();  // from the part graphs; -1 marks uncovered pairs
};

struct cover_verification {
  bool ok = true;
  std::vector<std::string> failures;
};

// Checks both certificate invariants exhaustively: every part graph must
// equal the line graph of its realizer (padded to [M]), and every pair of
// [M] must be covered by some part.
cover_verification verify_cover(const cover_certificate& c);

// The family -> covering direction: one part per matching edge {2s-1, 2s},
// with the realizing digraph read off the symbol positions.
cover_certificate perms_to_covering(const family& f);

// The covering -> family direction: M pattern words, pairwise lK_2-different
// with l = |parts|, laid out in consecutive position blocks per part.
family covering_to_perms(const cover_certificate& c);

// Certificate JSON: {schema_version, M, parts: [{edges, digraph: {positions,
// arcs: [[tail, head, label], ...]}}]}.
std::string cover_certificate_to_json(const cover_certificate& c);
cover_certificate cover_certificate_from_json(const std::string& text);
void write_cover_certificate_file(const std::string& path, const cover_certificate& c);
cover_certificate read_cover_certificate_file(const std::string& path);

}  // namespace kappa
