#include "kappa/relations.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

// Dense symbol adjacency for the inner pairwise loops. Symbols are remapped
// to 1..k; 0 stays reserved for star.
struct symbol_adjacency {
  std::vector<int> remap;        // symbol -> compact id (index by symbol)
  std::vector<char> adj;         // (k+1)*(k+1) matrix, star row/col all zero
  int k = 0;

  explicit symbol_adjacency(const natural_graph& g) {
    int max_sym = 0;
    for (int v : g.vertices()) max_sym = std::max(max_sym, v);
    remap.assign(max_sym + 1, 0);
    for (int v : g.vertices()) {
      remap[v] = ++k;
    }
    adj.assign(static_cast<std::size_t>(k + 1) * (k + 1), 0);
    for (const auto& [a, b] : g.edges()) {
      int ia = remap[a], ib = remap[b];
      adj[static_cast<std::size_t>(ia) * (k + 1) + ib] = 1;
      adj[static_cast<std::size_t>(ib) * (k + 1) + ia] = 1;
    }
  }

  int id(int symbol) const {
    if (symbol == star) return 0;
    if (symbol >= static_cast<int>(remap.size())) return 0;
    return remap[symbol];
  }

  bool edge(int ia, int ib) const {
    return adj[static_cast<std::size_t>(ia) * (k + 1) + ib] != 0;
  }
};

bool different_compact(const std::vector<int>& x, const std::vector<int>& y,
                       const symbol_adjacency& sa) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sa.edge(x[i], y[i])) return true;
  return false;
}

}  // namespace

bool is_g_different(const pattern_word& x, const pattern_word& y, const natural_graph& g) {
  if (x.length() != y.length())
    throw input_error("is_g_different: words have different lengths");
  for (std::size_t i = 0; i < x.length(); ++i) {
    int a = x.cell(i), b = y.cell(i);
    if (a != star && b != star && g.has_edge(a, b)) return true;
  }
  return false;
}

bool is_colliding(const pattern_word& x, const pattern_word& y) {
  if (x.length() != y.length())
    throw input_error("is_colliding: words have different lengths");
  for (std::size_t i = 0; i < x.length(); ++i) {
    int a = x.cell(i), b = y.cell(i);
    if (a != star && b != star && std::abs(a - b) == 1) return true;
  }
  return false;
}

verification_report verify_family(const family& f) {
  verification_report report;
  if (f.words.empty()) return report;

  const std::size_t len = f.words.front().length();
  for (std::size_t i = 0; i < f.words.size(); ++i) {
    try {
      f.words[i].check_well_formed();
    } catch (const input_error& e) {
      throw input_error("word " + std::to_string(i) + ": " + e.what());
    }
    if (f.words[i].length() != len)
      throw input_error("word " + std::to_string(i) + ": length mismatch within family");
  }

  if (f.relation == relation_kind::graph_different) {
    symbol_adjacency sa(f.graph);
    std::vector<std::vector<int>> compact(f.words.size());
    for (std::size_t i = 0; i < f.words.size(); ++i) {
      compact[i].resize(len);
      for (std::size_t p = 0; p < len; ++p) compact[i][p] = sa.id(f.words[i].cell(p));
    }
    for (std::size_t i = 0; i < f.words.size(); ++i)
      for (std::size_t j = i + 1; j < f.words.size(); ++j)
        if (!different_compact(compact[i], compact[j], sa))
          report.violations.push_back({i, j});
  } else {
    for (std::size_t i = 0; i < f.words.size(); ++i)
      for (std::size_t j = i + 1; j < f.words.size(); ++j)
        if (!is_colliding(f.words[i], f.words[j]))
          report.violations.push_back({i, j});
  }

  if (f.order_constraint) {
    std::vector<int> constrained = *f.order_constraint;
    std::sort(constrained.begin(), constrained.end());
    for (std::size_t i = 0; i < f.words.size(); ++i) {
      long long last_pos = -1;
      bool ok = true;
      for (int s : constrained) {
        auto pos = f.words[i].position_of(s);
        if (!pos || static_cast<long long>(*pos) <= last_pos) {
          ok = false;
          break;
        }
        last_pos = static_cast<long long>(*pos);
      }
      if (!ok) report.order_violations.push_back(i);
    }
  }
  return report;
}

natural_graph collision_graph_of_path(int n) {
  if (n < 1) throw input_error("collision_graph_of_path: n must be >= 1");
  return path_graph(n);
}

}  // namespace kappa
