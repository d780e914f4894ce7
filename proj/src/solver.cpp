#include "kappa/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

#include "kappa/bounds.hpp"
#include "kappa/clique.hpp"
#include "kappa/errors.hpp"
#include "kappa/relations.hpp"

namespace kappa {

namespace {

using clock_type = std::chrono::steady_clock;

long long ms_since(clock_type::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(clock_type::now() - start)
      .count();
}

struct cap_choice {
  std::string name = "none";
  unsigned long long value = 0;  // 0 = no cap
};

// The tightest certified cap; ties resolve toward the globally valid bounds.
cap_choice tightest_cap(const std::vector<cap_choice>& candidates) {
  cap_choice best;
  for (const auto& c : candidates) {
    if (c.value == 0) continue;
    if (best.value == 0 || c.value < best.value) best = c;
  }
  return best;
}

}  // namespace

solve_result max_clique_solve(const conflict_graph& cg,
                              std::optional<unsigned long long> upper_cap, int threads) {
  const auto start = clock_type::now();
  solve_result res;
  res.n = cg.n;
  res.mode = cg.mode;
  res.graph = cg.graph;
  if (upper_cap) {
    res.bound_value = *upper_cap;
    res.bound_name = "external";
  }

  const int cap = upper_cap && *upper_cap <= 1000000000ull ? static_cast<int>(*upper_cap) : 0;
  const bool transitive = !cg.order_constraint.has_value();
  const int fixed = transitive && cg.size() > 0 ? 0 : -1;

  clique_result cr;
  if (cg.size() > 0) cr = max_clique(cg.adjacency, cap, threads, fixed);

  res.value = cr.size;
  res.nodes = cr.nodes;
  res.cap_attained = cr.cap_reached || (cap > 0 && cr.size == cap);
  res.symmetry_fixed_root = fixed == 0;
  res.certified_optimal = true;

  family w;
  for (int v : cr.members) w.words.push_back(cg.placements[v]);
  w.graph = cg.graph;
  w.relation = cg.mode;
  w.order_constraint = cg.order_constraint;
  w.refresh_support();
  res.witness = std::move(w);
  if (static_cast<long long>(res.witness.words.size()) != res.value)
    throw std::logic_error("max_clique_solve: witness size " +
                           std::to_string(res.witness.words.size()) +
                           " does not match value " + std::to_string(res.value));
  res.elapsed_ms = ms_since(start);
  return res;
}

solve_result kappa(const natural_graph& g, int n, int threads, std::size_t max_vertices) {
  const auto start = clock_type::now();
  const auto placements = count_placements(g, n, std::nullopt);
  std::vector<cap_choice> caps;
  if (auto se = star_exact(g))
    caps.push_back({"star", static_cast<unsigned long long>(*se)});
  caps.push_back({"chi_power", solver_upper_cap(g)});
  caps.push_back({"placements", placements});
  const cap_choice cap = tightest_cap(caps);

  conflict_graph cg =
      build_conflict_graph(g, n, relation_kind::graph_different, {}, max_vertices);
  solve_result res = max_clique_solve(cg, cap.value, threads);
  res.bound_name = cap.name;
  res.bound_value = cap.value;
  res.kappa_certified =
      res.cap_attained && (cap.name == "star" || cap.name == "chi_power");
  res.elapsed_ms = ms_since(start);

  // Self-check after every solve: the value must sit between the realizable
  // decomposition floor and the chromatic power ceiling.
  const auto floor_at_n = decomposition_lower(g).value_at(n);
  if (floor_at_n > static_cast<unsigned long long>(res.value) ||
      static_cast<unsigned long long>(res.value) > solver_upper_cap(g))
    throw std::logic_error("kappa: solve value " + std::to_string(res.value) +
                           " escapes the bound sandwich for n=" + std::to_string(n));
  return res;
}

std::vector<solve_result> kappa_sweep(const natural_graph& g, int n_max, int threads,
                                      std::size_t max_vertices) {
  const int s = static_cast<int>(g.support().size());
  const int n_min = std::max(1, s);
  if (n_max < n_min)
    throw input_error("kappa_sweep: n_max below the " + std::to_string(n_min) +
                      " non-isolated vertices");
  std::vector<solve_result> out;
  for (int n = n_min; n <= n_max; ++n) out.push_back(kappa(g, n, threads, max_vertices));
  return out;
}

solve_result rho(int n, int threads, bool force) {
  if (n < 1) throw input_error("rho: n must be >= 1");
  if (n > 7 && !force) {
    unsigned long long estimate = 1;
    for (int i = 2; i <= n && estimate < (1ull << 62); ++i) estimate *= i;
    throw input_error("rho: n=" + std::to_string(n) + " needs a conflict graph on " +
                      std::to_string(estimate) +
                      " permutations; beyond the default ceiling of 7 (use force)");
  }
  const auto start = clock_type::now();
  const natural_graph g = collision_graph_of_path(n);
  const auto placements = count_placements(g, n, std::nullopt);
  const cap_choice cap = tightest_cap(
      {{"binomial", binomial_upper(n)}, {"placements", placements}});

  conflict_graph cg = build_conflict_graph(g, n, relation_kind::colliding, {},
                                           std::max<std::size_t>(20000, placements + 1));
  solve_result res = max_clique_solve(cg, cap.value, threads);
  res.bound_name = cap.name;
  res.bound_value = cap.value;
  res.elapsed_ms = ms_since(start);
  if (static_cast<unsigned long long>(res.value) > binomial_upper(n))
    throw std::logic_error("rho: value " + std::to_string(res.value) +
                           " exceeds the colliding ceiling");
  return res;
}

solve_result kappa_id(int n, int n_positions, int threads, std::size_t max_vertices) {
  if (n < 1) throw input_error("kappa_id: n must be >= 1");
  if (n_positions < n)
    throw input_error("kappa_id: need at least n positions");
  const auto start = clock_type::now();
  const natural_graph g = complete_graph(n);
  std::vector<int> natural_order(n);
  std::iota(natural_order.begin(), natural_order.end(), 1);

  const auto placements = count_placements(g, n_positions, natural_order);
  const cap_choice cap =
      tightest_cap({{"chi_power", solver_upper_cap(g)}, {"placements", placements}});

  conflict_graph cg = build_conflict_graph(g, n_positions, relation_kind::graph_different,
                                           natural_order, max_vertices);
  solve_result res = max_clique_solve(cg, cap.value, threads);
  res.bound_name = cap.name;
  res.bound_value = cap.value;
  res.elapsed_ms = ms_since(start);
  return res;
}

namespace {

// Canonical form of an edge subset of K_v: the minimum edge bitmask over all
// vertex relabelings. v <= 7 keeps the permutation sweep cheap.
std::uint64_t canonical_mask(std::uint64_t mask, int v,
                             const std::vector<std::pair<int, int>>& pool,
                             const std::vector<std::vector<int>>& pool_index) {
  std::vector<int> perm(v);
  std::iota(perm.begin(), perm.end(), 1);
  std::uint64_t best = ~0ull;
  do {
    std::uint64_t relabeled = 0;
    std::uint64_t rest = mask;
    while (rest) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      int a = perm[pool[e].first - 1];
      int b = perm[pool[e].second - 1];
      if (a > b) std::swap(a, b);
      relabeled |= 1ull << pool_index[a][b];
    }
    best = std::min(best, relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

scan_report extremal_scan(int v, int l, int n, int threads, std::size_t max_vertices) {
  if (v < 2 || v > 7)
    throw input_error("extremal_scan: v must be between 2 and 7");
  std::vector<std::pair<int, int>> pool;
  for (int a = 1; a <= v; ++a)
    for (int b = a + 1; b <= v; ++b) pool.emplace_back(a, b);
  const int pool_size = static_cast<int>(pool.size());
  if (l < 1 || l > pool_size)
    throw input_error("extremal_scan: l must be between 1 and " + std::to_string(pool_size));
  if (binomial(pool_size, l) > 100000)
    throw input_error("extremal_scan: too many edge subsets to canonicalize");

  std::vector<std::vector<int>> pool_index(v + 1, std::vector<int>(v + 1, -1));
  for (int e = 0; e < pool_size; ++e)
    pool_index[pool[e].first][pool[e].second] = e;

  // Enumerate l-subsets in lexicographic order; keep canonical forms.
  std::set<std::uint64_t> canon;
  std::vector<int> pick(l);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::uint64_t mask = 0;
    for (int e : pick) mask |= 1ull << e;
    canon.insert(canonical_mask(mask, v, pool, pool_index));
    int i = l - 1;
    while (i >= 0 && pick[i] == pool_size - l + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }

  scan_report report;
  report.v = v;
  report.l = l;
  report.n = n;
  for (std::uint64_t mask : canon) {
    std::vector<std::pair<int, int>> edges;
    std::uint64_t rest = mask;
    while (rest) {
      const int e = std::countr_zero(rest);
      rest &= rest - 1;
      edges.push_back(pool[e]);
    }
    std::vector<int> verts(v);
    std::iota(verts.begin(), verts.end(), 1);
    scan_entry entry;
    entry.graph = natural_graph::from_edges(edges, verts);
    entry.result = kappa(entry.graph, n, threads, max_vertices);
    report.entries.push_back(std::move(entry));
  }

  report.max_value = report.entries.front().result.value;
  report.min_value = report.entries.front().result.value;
  for (const auto& e : report.entries) {
    report.max_value = std::max(report.max_value, e.result.value);
    report.min_value = std::min(report.min_value, e.result.value);
  }
  for (std::size_t i = 0; i < report.entries.size(); ++i) {
    if (report.entries[i].result.value == report.max_value) report.argmax.push_back(i);
    if (report.entries[i].result.value == report.min_value) report.argmin.push_back(i);
  }
  return report;
}

}  // namespace kappa
