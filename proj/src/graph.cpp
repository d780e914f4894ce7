#include "kappa/graph.hpp"

#include <algorithm>
#include <sstream>

#include "kappa/errors.hpp"

namespace kappa {

natural_graph natural_graph::from_edges(const std::vector<std::pair<int, int>>& edges,
                                        const std::vector<int>& extra_vertices) {
  natural_graph g;
  for (auto [a, b] : edges) {
    if (a == b) throw input_error("graph has a loop at vertex " + std::to_string(a));
    if (a < 1 || b < 1)
      throw input_error("graph vertices must be positive integers");
    if (a > b) std::swap(a, b);
    g.edges_.emplace_back(a, b);
    g.vertices_.push_back(a);
    g.vertices_.push_back(b);
  }
  for (int v : extra_vertices) {
    if (v < 1) throw input_error("graph vertices must be positive integers");
    g.vertices_.push_back(v);
  }
  std::sort(g.vertices_.begin(), g.vertices_.end());
  g.vertices_.erase(std::unique(g.vertices_.begin(), g.vertices_.end()), g.vertices_.end());
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  return g;
}

bool natural_graph::has_vertex(int v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool natural_graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

std::vector<int> natural_graph::support() const {
  std::vector<int> s;
  s.reserve(edges_.size() * 2);
  for (const auto& [a, b] : edges_) {
    s.push_back(a);
    s.push_back(b);
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::vector<int> natural_graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int natural_graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

std::string natural_graph::to_string() const {
  std::ostringstream os;
  os << "V={";
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    os << (i ? "," : "") << vertices_[i];
  os << "} E={";
  for (std::size_t i = 0; i < edges_.size(); ++i)
    os << (i ? "," : "") << edges_[i].first << "-" << edges_[i].second;
  os << "}";
  return os.str();
}

natural_graph path_graph(int r) {
  if (r < 1) throw input_error("path_graph: r must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < r; ++i) edges.emplace_back(i, i + 1);
  std::vector<int> verts;
  for (int i = 1; i <= r; ++i) verts.push_back(i);
  return natural_graph::from_edges(edges, verts);
}

natural_graph star_graph(int r) {
  if (r < 1) throw input_error("star_graph: r must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 2; i <= r + 1; ++i) edges.emplace_back(1, i);
  return natural_graph::from_edges(edges);
}

natural_graph matching_graph(int l) {
  if (l < 1) throw input_error("matching_graph: l must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= l; ++i) edges.emplace_back(2 * i - 1, 2 * i);
  return natural_graph::from_edges(edges);
}

natural_graph complete_graph(int n) {
  if (n < 1) throw input_error("complete_graph: n must be >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
  std::vector<int> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(i);
  return natural_graph::from_edges(edges, verts);
}

natural_graph union_graph(const natural_graph& a, const natural_graph& b) {
  std::vector<std::pair<int, int>> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  std::vector<int> verts = a.vertices();
  verts.insert(verts.end(), b.vertices().begin(), b.vertices().end());
  return natural_graph::from_edges(edges, verts);
}

natural_graph shift_graph(const natural_graph& g, int offset) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(a + offset, b + offset);
  std::vector<int> verts;
  for (int v : g.vertices()) verts.push_back(v + offset);
  return natural_graph::from_edges(edges, verts);
}

}  // namespace kappa
