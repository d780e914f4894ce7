#include "kappa/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "kappa/clique.hpp"
#include "kappa/covering.hpp"
#include "kappa/errors.hpp"

namespace kappa {

std::string u128_to_string(u128 v) {
  if (v == 0) return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

namespace {

// Compact adjacency over the support vertices.
struct small_graph {
  int n = 0;
  std::vector<std::uint32_t> adj;
  std::vector<int> labels;

  explicit small_graph(const natural_graph& g, const std::vector<int>& verts) {
    labels = verts;
    n = static_cast<int>(verts.size());
    adj.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.has_edge(verts[i], verts[j])) {
          adj[i] |= 1u << j;
          adj[j] |= 1u << i;
        }
  }
};

// Backtracking k-colorability on <= 16 vertices, vertices in degree order.
bool colorable(const small_graph& g, int k) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    int da = std::popcount(g.adj[a]), db = std::popcount(g.adj[b]);
    return da != db ? da > db : a < b;
  });
  std::vector<int> color(g.n, -1);
  int used = 0;

  std::function<bool(int)> go = [&](int idx) -> bool {
    if (idx == g.n) return true;
    const int v = order[idx];
    // Trying at most used+1 colors avoids symmetric relabelings.
    const int tryable = std::min(k, used + 1);
    for (int c = 0; c < tryable; ++c) {
      bool clash = false;
      std::uint32_t nb = g.adj[v];
      while (nb) {
        int u = std::countr_zero(nb);
        nb &= nb - 1;
        if (color[u] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[v] = c;
      const int prev_used = used;
      used = std::max(used, c + 1);
      if (go(idx + 1)) return true;
      used = prev_used;
      color[v] = -1;
    }
    return false;
  };
  return go(0);
}

int greedy_clique_size(const small_graph& g) {
  int best = 1;
  for (int v = 0; v < g.n; ++v) {
    std::uint32_t cand = g.adj[v];
    int size = 1;
    while (cand) {
      int u = std::countr_zero(cand);
      cand &= cand - 1;
      cand &= g.adj[u];
      ++size;
    }
    best = std::max(best, size);
  }
  return best;
}

int matching_number_masked(const std::vector<std::uint32_t>& adj, std::uint32_t active);

}  // namespace

int chromatic_number(const natural_graph& g) {
  if (g.vertex_count() > 16)
    throw input_error("chromatic_number: graphs above 16 vertices are refused");
  if (g.vertices().empty()) return 0;
  auto support = g.support();
  if (support.empty()) return 1;  // edgeless, non-empty
  small_graph sg(g, support);
  for (int k = std::max(2, greedy_clique_size(sg)); ; ++k)
    if (colorable(sg, k)) return k;
}

u128 chromatic_power_upper(const natural_graph& g) {
  const int chi = chromatic_number(g);
  u128 result = 1;
  for (std::size_t i = 0; i < g.vertex_count(); ++i) result *= static_cast<u128>(chi);
  return result;
}

unsigned long long solver_upper_cap(const natural_graph& g) {
  const auto support = g.support();
  if (support.empty()) return 1;
  const int chi = chromatic_number(g);
  constexpr unsigned long long limit = std::numeric_limits<long long>::max();
  unsigned long long result = 1;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (result > limit / static_cast<unsigned long long>(chi)) return limit;
    result *= static_cast<unsigned long long>(chi);
  }
  return result;
}

namespace {

int matching_number_masked(const std::vector<std::uint32_t>& adj, std::uint32_t active) {
  // Find the lowest active vertex with a neighbor; branch on skipping it or
  // matching it with each neighbor.
  int v = -1;
  std::uint32_t scan = active;
  while (scan) {
    int u = std::countr_zero(scan);
    scan &= scan - 1;
    if (adj[u] & active) {
      v = u;
      break;
    }
  }
  if (v < 0) return 0;
  // Skip v entirely.
  int best = matching_number_masked(adj, active & ~(1u << v));
  std::uint32_t nb = adj[v] & active;
  while (nb) {
    int u = std::countr_zero(nb);
    nb &= nb - 1;
    best = std::max(best,
                    1 + matching_number_masked(adj, active & ~(1u << v) & ~(1u << u)));
  }
  return best;
}

}  // namespace

int matching_number(const natural_graph& g) {
  if (g.vertex_count() > 20)
    throw input_error("matching_number: graphs above 20 vertices are refused");
  auto support = g.support();
  if (support.empty()) return 0;
  small_graph sg(g, support);
  return matching_number_masked(sg.adj, (1u << sg.n) - 1);
}

std::optional<long long> star_exact(const natural_graph& g) {
  const auto support = g.support();
  if (support.empty()) return std::nullopt;
  const long long r = static_cast<long long>(g.edge_count());
  if (static_cast<long long>(support.size()) != r + 1) return std::nullopt;
  // One vertex of degree r, the rest of degree 1.
  int centers = 0;
  for (int v : support) {
    const int d = g.degree(v);
    if (d == static_cast<int>(r))
      ++centers;
    else if (d != 1)
      return std::nullopt;
  }
  if (r == 1) return 3;  // K_2: both endpoints have degree 1 = r
  if (centers != 1) return std::nullopt;
  return 2 * r + 1;
}

int decomposition_bound::product_length() const {
  int total = 0;
  for (const auto& s : stars) total += 2 * static_cast<int>(s.leaves.size()) + 1;
  return total;
}

int decomposition_bound::matching_length() const {
  return 3 * static_cast<int>(matching.size());
}

unsigned long long decomposition_bound::value_at(int n) const {
  unsigned long long v = 1;
  if (n >= matching_length()) v = std::max(v, matching_value);
  if (n >= product_length()) v = std::max(v, product_value);
  return v;
}

decomposition_bound decomposition_lower(const natural_graph& g) {
  decomposition_bound out;
  if (g.edge_count() == 0) return out;

  const auto support = g.support();
  if (support.size() > 20)
    throw input_error("decomposition_lower: graphs above 20 non-isolated vertices are refused");
  small_graph sg(g, support);
  const std::uint32_t all = (1u << sg.n) - 1;
  const int nu = matching_number_masked(sg.adj, all);

  auto support_index = [&support](int v) {
    return static_cast<int>(std::lower_bound(support.begin(), support.end(), v) -
                            support.begin());
  };

  // Lexicographically least maximum matching over the sorted edge list.
  std::uint32_t used = 0;
  int picked = 0;
  for (const auto& [a, b] : g.edges()) {
    if (picked == nu) break;
    const int ia = support_index(a);
    const int ib = support_index(b);
    if ((used >> ia) & 1 || (used >> ib) & 1) continue;
    const std::uint32_t rest = all & ~used & ~(1u << ia) & ~(1u << ib);
    if (matching_number_masked(sg.adj, rest) == nu - picked - 1) {
      used |= (1u << ia) | (1u << ib);
      out.matching.emplace_back(a, b);
      ++picked;
    }
  }

  // Attach every remaining non-isolated vertex to a matched endpoint, as one
  // leaf of the star centered there. Maximality guarantees each matching edge
  // collects attachments on one endpoint only.
  std::map<int, std::vector<int>> attached;  // center -> outside leaves
  std::map<int, int> center_of_edge;         // index into out.matching -> center
  for (std::size_t e = 0; e < out.matching.size(); ++e) {
    const auto [u, v] = out.matching[e];
    bool only_u = false, only_v = false;
    for (int a : support) {
      if ((used >> support_index(a)) & 1) continue;
      const bool au = g.has_edge(a, u), av = g.has_edge(a, v);
      if (au && !av) only_u = true;
      if (av && !au) only_v = true;
    }
    center_of_edge[static_cast<int>(e)] = only_u ? u : only_v ? v : std::min(u, v);
  }
  for (int a : support) {
    if ((used >> support_index(a)) & 1) continue;
    int chosen = -1;
    for (std::size_t e = 0; e < out.matching.size() && chosen < 0; ++e)
      if (g.has_edge(a, center_of_edge[static_cast<int>(e)]))
        chosen = center_of_edge[static_cast<int>(e)];
    if (chosen < 0)
      throw input_error("decomposition_lower: internal error, unattachable vertex " +
                        std::to_string(a));
    attached[chosen].push_back(a);
  }

  out.product_value = 1;
  for (std::size_t e = 0; e < out.matching.size(); ++e) {
    const auto [u, v] = out.matching[e];
    const int center = center_of_edge[static_cast<int>(e)];
    star_part part;
    part.center = center;
    part.leaves.push_back(center == u ? v : u);
    for (int a : attached[center]) part.leaves.push_back(a);
    std::sort(part.leaves.begin(), part.leaves.end());
    out.product_value *= static_cast<unsigned long long>(2 * part.leaves.size() + 1);
    out.stars.push_back(std::move(part));
  }
  out.matching_value = 1;
  for (int i = 0; i < nu; ++i) out.matching_value *= 3;
  out.value = std::max(out.product_value, out.matching_value);
  return out;
}

unsigned long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

unsigned long long binomial_upper(int n) {
  if (n < 1) throw input_error("binomial_upper: n must be >= 1");
  if (n > 60) throw input_error("binomial_upper: n above 60 overflows");
  return binomial(n, n / 2);
}

alpha_ratio_result line_graph_alpha_ratio(int t) {
  if (t < 2 || t > 6)
    throw input_error("line_graph_alpha_ratio: t must be between 2 and 6");
  digraph d;
  int label = 0;
  for (int i = 1; i <= t; ++i) d.positions.push_back(i);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= t; ++j)
      if (i != j) d.arcs.push_back({i, j, ++label});
  const natural_graph lg = line_graph(d);

  const std::size_t count = lg.vertex_count();
  bit_graph bg(count);
  for (const auto& [a, b] : lg.edges()) bg.add_edge(a - 1, b - 1);
  const auto independent = max_independent_set(bg);

  alpha_ratio_result out;
  out.t = t;
  out.vertex_count = static_cast<int>(count);
  out.alpha = independent.size;
  // The arcs of a balanced bipartition are pairwise independent, so alpha
  // can never fall below floor(t/2)*ceil(t/2).
  if (out.alpha < (t / 2) * ((t + 1) / 2))
    throw input_error("line_graph_alpha_ratio: independence search returned " +
                      std::to_string(out.alpha) + ", below the bipartite floor");
  const int g = std::gcd(out.vertex_count, out.alpha);
  out.ratio_num = out.vertex_count / g;
  out.ratio_den = out.alpha / g;
  return out;
}

bound_report compute_bounds(const natural_graph& g, std::optional<int> rho_n) {
  bound_report r;
  r.graph = g;
  r.chromatic = chromatic_number(g);
  r.chromatic_power = chromatic_power_upper(g);
  r.matching = matching_number(g);
  r.decomposition = decomposition_lower(g);
  r.star = star_exact(g);
  if (rho_n) r.binomial_rho = binomial_upper(*rho_n);
  return r;
}

}  // namespace kappa
