#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace kappa {

// Finite simple graph on positive-integer vertices. Vertices are kept sorted,
// edges are stored as (a, b) with a < b, sorted lexicographically. Isolated
// vertices are allowed and must be declared explicitly.
class natural_graph {
 public:
  natural_graph() = default;

  // Builds a graph from an edge list plus extra (possibly isolated) vertices.
  // Endpoints are added to the vertex set automatically. Throws input_error
  // on loops or non-positive vertex labels; duplicate edges collapse.
  static natural_graph from_edges(const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& extra_vertices = {});

  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(int v) const;
  bool has_edge(int a, int b) const;

  // S(G): the non-isolated vertices, i.e. the union of all edge endpoints.
  std::vector<int> support() const;

  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  bool operator==(const natural_graph& other) const {
    return vertices_ == other.vertices_ && edges_ == other.edges_;
  }

  // Compact display form like "V={1..5} E={1-2,2-3,3-4}".
  std::string to_string() const;

 private:
  std::vector<int> vertices_;
  std::vector<std::pair<int, int>> edges_;
};

// Named instances used throughout.
natural_graph path_graph(int r);                     // P_r on 1..r
natural_graph star_graph(int r);                     // K_{1,r} on 1..r+1, center 1
natural_graph matching_graph(int l);                 // l K_2 with edges {2i-1,2i}
natural_graph complete_graph(int n);                 // K_n on 1..n
natural_graph union_graph(const natural_graph& a, const natural_graph& b);

// Adds `offset` to every vertex label.
natural_graph shift_graph(const natural_graph& g, int offset);

}  // namespace kappa
