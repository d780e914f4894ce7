#include "kappa/conflict.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <string>

#include "kappa/errors.hpp"
#include "kappa/relations.hpp"

namespace kappa {

namespace {

// Relevant symbols: S(g) plus any constrained symbols (isolated vertices can
// take part in the order constraint even though they never witness an edge).
std::vector<int> relevant_symbols(const natural_graph& g,
                                  const std::optional<std::vector<int>>& order_constraint) {
  std::vector<int> symbols = g.support();
  if (order_constraint) {
    symbols.insert(symbols.end(), order_constraint->begin(), order_constraint->end());
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
  }
  return symbols;
}

}  // namespace

unsigned long long count_placements(const natural_graph& g, int n,
                                    const std::optional<std::vector<int>>& order_constraint) {
  const auto symbols = relevant_symbols(g, order_constraint);
  const std::size_t s = symbols.size();
  if (n < static_cast<int>(s)) return 0;
  constexpr unsigned long long limit = std::numeric_limits<long long>::max();

  unsigned long long total = 1;
  if (!order_constraint) {
    for (std::size_t i = 0; i < s; ++i) {
      unsigned long long factor = static_cast<unsigned long long>(n - i);
      if (total > limit / factor) return limit;
      total *= factor;
    }
    return total;
  }
  // Constrained symbols keep a fixed relative order: choose their positions
  // as a combination, the rest as a falling factorial.
  std::vector<int> constrained = *order_constraint;
  std::sort(constrained.begin(), constrained.end());
  constrained.erase(std::unique(constrained.begin(), constrained.end()), constrained.end());
  const std::size_t k = constrained.size();
  unsigned long long comb = 1;
  for (std::size_t i = 0; i < k; ++i) {
    comb = comb * (n - i) / (i + 1);
    if (comb > limit) return limit;
  }
  total = comb;
  for (std::size_t i = k; i < s; ++i) {
    unsigned long long factor = static_cast<unsigned long long>(n - i);
    if (total > limit / factor) return limit;
    total *= factor;
  }
  return total;
}

conflict_graph build_conflict_graph(const natural_graph& g, int n, relation_kind mode,
                                    std::optional<std::vector<int>> order_constraint,
                                    std::size_t max_vertices) {
  if (n < 1) throw input_error("build_conflict_graph: n must be >= 1");
  if (order_constraint) {
    std::sort(order_constraint->begin(), order_constraint->end());
    order_constraint->erase(
        std::unique(order_constraint->begin(), order_constraint->end()),
        order_constraint->end());
  }
  const auto symbols = relevant_symbols(g, order_constraint);
  if (n < static_cast<int>(symbols.size()))
    throw input_error("build_conflict_graph: n=" + std::to_string(n) + " is below the " +
                      std::to_string(symbols.size()) + " relevant symbols");
  const unsigned long long expected = count_placements(g, n, order_constraint);
  if (expected > max_vertices)
    throw input_error("build_conflict_graph: " + std::to_string(expected) +
                      " placements exceed the limit of " + std::to_string(max_vertices));

  conflict_graph cg;
  cg.graph = g;
  cg.n = n;
  cg.mode = mode;
  cg.order_constraint = order_constraint;
  cg.placed_symbols = symbols;

  std::vector<char> constrained_flag(symbols.size(), 0);
  if (order_constraint)
    for (std::size_t i = 0; i < symbols.size(); ++i)
      constrained_flag[i] =
          std::binary_search(order_constraint->begin(), order_constraint->end(), symbols[i]);

  // Depth-first over symbols in ascending order; positions tried ascending,
  // so placements come out in lexicographic position-tuple order.
  std::vector<int> cells(n, star);

  struct walker {
    const std::vector<int>& symbols;
    const std::vector<char>& constrained_flag;
    int n;
    std::vector<pattern_word>& out;
    std::vector<int>& cells;

    void walk(std::size_t idx, int floor) {
      if (idx == symbols.size()) {
        out.emplace_back(cells);
        return;
      }
      const bool constrained = constrained_flag[idx];
      for (int pos = 0; pos < n; ++pos) {
        if (cells[pos] != star) continue;
        if (constrained && pos <= floor) continue;
        cells[pos] = symbols[idx];
        walk(idx + 1, constrained ? pos : floor);
        cells[pos] = star;
      }
    }
  };

  walker w{symbols, constrained_flag, n, cg.placements, cells};
  w.walk(0, -1);

  const std::size_t count = cg.placements.size();
  cg.adjacency = bit_graph(count);
  if (mode == relation_kind::graph_different) {
    // Dense symbol-pair table for the quadratic fill.
    int max_sym = 1;
    for (int s : symbols) max_sym = std::max(max_sym, s);
    std::vector<char> edge_table(static_cast<std::size_t>(max_sym + 1) * (max_sym + 1), 0);
    for (const auto& [a, b] : g.edges()) {
      if (a > max_sym || b > max_sym) continue;  // edge between never-placed symbols
      edge_table[static_cast<std::size_t>(a) * (max_sym + 1) + b] = 1;
      edge_table[static_cast<std::size_t>(b) * (max_sym + 1) + a] = 1;
    }
    for (std::size_t i = 0; i < count; ++i) {
      const auto& wi = cg.placements[i].cells();
      for (std::size_t j = i + 1; j < count; ++j) {
        const auto& wj = cg.placements[j].cells();
        for (int p = 0; p < n; ++p) {
          const int a = wi[p], b = wj[p];
          if (a != star && b != star &&
              edge_table[static_cast<std::size_t>(a) * (max_sym + 1) + b]) {
            cg.adjacency.add_edge(i, j);
            break;
          }
        }
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const auto& wi = cg.placements[i].cells();
      for (std::size_t j = i + 1; j < count; ++j) {
        const auto& wj = cg.placements[j].cells();
        for (int p = 0; p < n; ++p) {
          const int a = wi[p], b = wj[p];
          if (a != star && b != star && std::abs(a - b) == 1) {
            cg.adjacency.add_edge(i, j);
            break;
          }
        }
      }
    }
  }
  return cg;
}

}  // namespace kappa
