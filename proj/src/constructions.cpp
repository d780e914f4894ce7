#include "kappa/constructions.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>

#include "kappa/errors.hpp"
#include "kappa/relations.hpp"

namespace kappa {

namespace {

family make_family(std::vector<pattern_word> words, natural_graph g, relation_kind rel) {
  family f;
  f.words = std::move(words);
  f.graph = std::move(g);
  f.relation = rel;
  f.refresh_support();
  return f;
}

pattern_word rotate_left(const pattern_word& w, int k) {
  std::vector<int> cells = w.cells();
  std::rotate(cells.begin(), cells.begin() + k, cells.end());
  return pattern_word(std::move(cells));
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

// Small pairwise colliding bases for the rho recursion residues.
family rho_base(int n) {
  switch (n) {
    case 1:
      return make_family({pattern_word({1})}, path_graph(1), relation_kind::colliding);
    case 2:
      return make_family({pattern_word({1, 2}), pattern_word({2, 1})}, path_graph(2),
                         relation_kind::colliding);
    case 3:
      return make_family(
          {pattern_word({1, 2, 3}), pattern_word({2, 3, 1}), pattern_word({3, 1, 2})},
          path_graph(3), relation_kind::colliding);
    case 4:
      // The 3-word base is P_2-different, so the doubling step applies.
      return parity_double(rho_base(3), 4);
    case 5: {
      family f = construct_p4_ten();
      f.relation = relation_kind::colliding;
      f.graph = path_graph(5);
      return f;
    }
    default:
      throw input_error("rho_base: no base for n=" + std::to_string(n));
  }
}

}  // namespace

family construct_star(int r) {
  if (r < 1) throw input_error("construct_star: r must be >= 1");
  const int len = 2 * r + 1;
  std::vector<pattern_word> words;
  words.reserve(len);
  for (int i = 0; i < len; ++i) {
    std::vector<int> cells(len, star);
    for (int j = 0; j <= r; ++j) cells[(i + j) % len] = j + 1;
    words.emplace_back(std::move(cells));
  }
  return make_family(std::move(words), star_graph(r), relation_kind::graph_different);
}

family construct_matching(int l) {
  if (l < 1) throw input_error("construct_matching: l must be >= 1");
  // The three cyclic words of one block, on symbols {2i-1, 2i}.
  auto block = [](int i, int choice) -> std::array<int, 3> {
    const int a = 2 * i - 1, b = 2 * i;
    switch (choice) {
      case 0: return {a, b, star};
      case 1: return {b, star, a};
      default: return {star, a, b};
    }
  };
  std::size_t count = 1;
  for (int i = 0; i < l; ++i) count *= 3;
  std::vector<pattern_word> words;
  words.reserve(count);
  std::vector<int> choice(l, 0);
  for (std::size_t w = 0; w < count; ++w) {
    std::vector<int> cells;
    cells.reserve(3 * l);
    for (int i = 1; i <= l; ++i) {
      auto blk = block(i, choice[i - 1]);
      cells.insert(cells.end(), blk.begin(), blk.end());
    }
    words.emplace_back(std::move(cells));
    for (int i = l - 1; i >= 0; --i) {
      if (++choice[i] < 3) break;
      choice[i] = 0;
    }
  }
  return make_family(std::move(words), matching_graph(l), relation_kind::graph_different);
}

family construct_complete(int n) {
  if (n < 1) throw input_error("construct_complete: n must be >= 1");
  std::vector<int> p(n + 1);
  std::iota(p.begin(), p.end(), 1);
  std::vector<pattern_word> words;
  do {
    if (is_even_permutation(p)) words.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return make_family(std::move(words), complete_graph(n), relation_kind::graph_different);
}

family construct_p4_ten() {
  std::vector<pattern_word> words;
  for (const auto& seed : {pattern_word({1, 2, 4, 3, 5}), pattern_word({4, 3, 1, 2, 5})})
    for (int k = 0; k < 5; ++k) words.push_back(rotate_left(seed, k));
  natural_graph p4_plus_isolated =
      natural_graph::from_edges({{1, 2}, {2, 3}, {3, 4}}, {1, 2, 3, 4, 5});
  return make_family(std::move(words), std::move(p4_plus_isolated),
                     relation_kind::graph_different);
}

family product_construction(const std::vector<family>& fs) {
  if (fs.empty()) throw input_error("product_construction: empty family list");
  std::set<int> seen_graph, seen_words;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (int v : fs[i].graph.support())
      if (!seen_graph.insert(v).second)
        throw input_error("product_construction: graphs share non-isolated vertex " +
                          std::to_string(v));
    for (int s : fs[i].support)
      if (!seen_words.insert(s).second)
        throw input_error("product_construction: families share symbol " + std::to_string(s));
    if (fs[i].relation != fs.front().relation)
      throw input_error("product_construction: mixed relation kinds");
  }

  std::vector<pattern_word> words;
  std::vector<std::size_t> idx(fs.size(), 0);
  std::size_t total = 1;
  for (const auto& f : fs) {
    if (f.words.empty()) throw input_error("product_construction: empty family");
    total *= f.words.size();
  }
  words.reserve(total);
  for (std::size_t w = 0; w < total; ++w) {
    std::vector<int> cells;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const auto& part = fs[k].words[idx[k]].cells();
      cells.insert(cells.end(), part.begin(), part.end());
    }
    words.emplace_back(std::move(cells));
    for (std::size_t k = fs.size(); k-- > 0;) {
      if (++idx[k] < fs[k].words.size()) break;
      idx[k] = 0;
    }
  }

  natural_graph g = fs.front().graph;
  for (std::size_t k = 1; k < fs.size(); ++k) g = union_graph(g, fs[k].graph);
  return make_family(std::move(words), std::move(g), fs.front().relation);
}

pattern_word shift_word(const pattern_word& w, int offset) {
  std::vector<int> cells = w.cells();
  for (int& c : cells)
    if (c != star) c += offset;
  return pattern_word(std::move(cells));
}

family shift_family(const family& f, int offset) {
  family out = f;
  for (auto& w : out.words) w = shift_word(w, offset);
  out.graph = shift_graph(f.graph, offset);
  if (out.order_constraint)
    for (int& s : *out.order_constraint) s += offset;
  out.refresh_support();
  return out;
}

pattern_word substitute(const pattern_word& x, const pattern_word& y) {
  const auto xs = x.symbols();
  const auto ys = y.symbols();
  std::vector<int> overlap;
  std::set_intersection(xs.begin(), xs.end(), ys.begin(), ys.end(),
                        std::back_inserter(overlap));
  if (!overlap.empty())
    throw input_error("substitute: words share symbol " + std::to_string(overlap.front()));

  std::vector<std::size_t> star_positions;
  for (std::size_t i = 0; i < x.length(); ++i)
    if (x.is_star(i)) star_positions.push_back(i);
  if (y.length() < star_positions.size())
    throw input_error("substitute: y too short to fill the stars of x");

  const std::size_t out_len = x.length() - star_positions.size() + y.length();
  std::vector<int> cells(out_len, star);
  for (std::size_t i = 0; i < x.length(); ++i)
    if (!x.is_star(i)) cells[i] = x.cell(i);
  std::size_t next = 0;
  for (std::size_t k = 0; k < star_positions.size(); ++k) cells[star_positions[k]] = y.cell(next++);
  for (std::size_t i = x.length(); i < out_len; ++i) cells[i] = y.cell(next++);
  return pattern_word(std::move(cells));
}

family rho_recursion_build(int n) {
  if (n < 5) throw input_error("rho_recursion_build: n must be >= 5");
  family lower = n <= 5 ? rho_base(n) : (n <= 8 ? rho_base(n - 4) : rho_recursion_build(n - 4));
  if (n == 5) return lower;

  // The ten-word base with its isolated symbol masked out, so that the
  // shifted lower family can be spliced into the free cells.
  family base = construct_p4_ten();
  std::vector<pattern_word> masked;
  for (const auto& w : base.words) {
    std::vector<int> cells = w.cells();
    for (int& c : cells)
      if (c == 5) c = star;
    masked.emplace_back(std::move(cells));
  }

  family shifted = shift_family(lower, 4);
  std::vector<pattern_word> words;
  words.reserve(masked.size() * shifted.words.size());
  for (const auto& x : masked)
    for (const auto& y : shifted.words) words.push_back(substitute(x, y));
  return make_family(std::move(words), path_graph(n), relation_kind::colliding);
}

family parity_double(const family& f, int n) {
  if (n < 2) throw input_error("parity_double: n must be >= 2");
  const int m = n - 1;
  for (std::size_t i = 0; i < f.words.size(); ++i) {
    const auto& w = f.words[i];
    if (static_cast<int>(w.length()) != m || static_cast<int>(w.symbols().size()) != m)
      throw input_error("parity_double: word " + std::to_string(i) +
                        " is not a permutation of [" + std::to_string(m) + "]");
    if (!w.symbols().empty() && (w.symbols().front() != 1 || w.symbols().back() != m))
      throw input_error("parity_double: word " + std::to_string(i) +
                        " is not a permutation of [" + std::to_string(m) + "]");
  }
  // Soundness needs every pairwise witness to avoid the symbol n-1, i.e. the
  // input must be P_{n-2}-different, not merely colliding.
  if (m >= 2 && f.words.size() > 1) {
    family check = f;
    check.graph = path_graph(m - 1);
    check.relation = relation_kind::graph_different;
    check.order_constraint.reset();
    auto rep = verify_family(check);
    if (!rep.valid())
      throw input_error("parity_double: input pair " + std::to_string(rep.violations[0].i) +
                        "," + std::to_string(rep.violations[0].j) +
                        " has no witness avoiding symbol " + std::to_string(m));
  }

  std::vector<pattern_word> words;
  words.reserve(2 * f.words.size());
  for (const auto& w : f.words) {
    std::vector<int> appended = w.cells();
    appended.push_back(n);
    std::vector<int> exchanged = appended;
    for (int& c : exchanged) {
      if (c == n - 1)
        c = n;
      else if (c == n)
        c = n - 1;
    }
    words.emplace_back(std::move(appended));
    words.emplace_back(std::move(exchanged));
  }
  return make_family(std::move(words), path_graph(n), relation_kind::colliding);
}

long long catalan_number(int n) {
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

namespace {

// Minimal word length of the level-k construction: 2^k - 1.
long long catalan_min_length(int k) { return (1LL << k) - 1; }

std::vector<pattern_word> catalan_level(int k, long long anchor,
                                        std::vector<std::vector<pattern_word>>& memo);

// Level k at its minimal anchor, built once.
const std::vector<pattern_word>& catalan_level_minimal(
    int k, std::vector<std::vector<pattern_word>>& memo) {
  if (k > 0 && memo[k].empty())
    memo[k] = catalan_level(k, catalan_min_length(k - 1) + 1, memo);
  return memo[k];
}

// Builds the level-k words with anchor j (1-based): a prefix block of j-1
// cells, the anchor cell, and a suffix block. Lower levels use their minimal
// anchors and are memoized.
std::vector<pattern_word> catalan_level(int k, long long anchor,
                                        std::vector<std::vector<pattern_word>>& memo) {
  if (k == 0) return {pattern_word(std::vector<int>{})};
  const long long total = anchor + catalan_min_length(k - 1);
  std::vector<pattern_word> out;
  for (int i = 0; i < k; ++i) {
    const auto& prefixes = catalan_level_minimal(i, memo);
    const auto& suffixes = catalan_level_minimal(k - 1 - i, memo);
    for (const auto& p : prefixes) {
      for (const auto& s : suffixes) {
        std::vector<int> cells(static_cast<std::size_t>(total), star);
        for (std::size_t c = 0; c < p.length(); ++c) cells[c] = p.cell(c);
        cells[static_cast<std::size_t>(anchor - 1)] = i + 1;
        for (std::size_t c = 0; c < s.length(); ++c) {
          int v = s.cell(c);
          cells[static_cast<std::size_t>(anchor) + c] = v == star ? star : v + i + 1;
        }
        out.emplace_back(std::move(cells));
      }
    }
  }
  return out;
}

}  // namespace

int catalan_min_anchor(int n) {
  if (n < 1) throw input_error("catalan_construction: n must be >= 1");
  return static_cast<int>(catalan_min_length(n - 1) + 1);
}

family catalan_construction(int n, int anchor) {
  if (n < 1) throw input_error("catalan_construction: n must be >= 1");
  if (n > 10) throw input_error("catalan_construction: n > 10 not supported (word length 2^n)");
  const int min_anchor = catalan_min_anchor(n);
  if (anchor <= 0) anchor = min_anchor;
  if (anchor < min_anchor)
    throw input_error("catalan_construction: anchor " + std::to_string(anchor) +
                      " too small for recursion depth; minimum is " +
                      std::to_string(min_anchor));

  std::vector<std::vector<pattern_word>> memo(n + 1);
  memo[0] = {pattern_word(std::vector<int>{})};
  auto words = catalan_level(n, anchor, memo);

  family f = make_family(std::move(words), complete_graph(n), relation_kind::graph_different);
  std::vector<int> constrained(n);
  std::iota(constrained.begin(), constrained.end(), 1);
  f.order_constraint = std::move(constrained);
  return f;
}

family edge_split_transform(const family& f, std::pair<int, int> edge, int c, int d) {
  auto [a, b] = edge;
  if (!f.graph.has_edge(a, b))
    throw input_error("edge_split_transform: {" + std::to_string(a) + "," + std::to_string(b) +
                      "} is not an edge of the family graph");
  int max_seen = 0;
  for (int s : f.support) max_seen = std::max(max_seen, s);
  for (int v : f.graph.vertices()) max_seen = std::max(max_seen, v);
  if (c <= max_seen || d <= max_seen || c == d)
    throw input_error("edge_split_transform: replacement symbols must be fresh (> " +
                      std::to_string(max_seen) + ") and distinct");
  if (f.relation != relation_kind::graph_different)
    throw input_error("edge_split_transform: family must use the graph-different relation");

  std::vector<pattern_word> words;
  words.reserve(f.words.size());
  for (const auto& w : f.words) {
    std::vector<int> cells = w.cells();
    cells.reserve(2 * w.length());
    for (std::size_t i = 0; i < w.length(); ++i) {
      int v = w.cell(i);
      cells.push_back(v == a ? c : v == b ? d : star);
    }
    words.emplace_back(std::move(cells));
  }

  std::vector<std::pair<int, int>> new_edges;
  for (const auto& e : f.graph.edges())
    if (!(e.first == std::min(a, b) && e.second == std::max(a, b))) new_edges.push_back(e);
  new_edges.emplace_back(std::min(c, d), std::max(c, d));
  std::vector<int> verts = f.graph.vertices();
  natural_graph g = natural_graph::from_edges(new_edges, verts);
  return make_family(std::move(words), std::move(g), relation_kind::graph_different);
}

}  // namespace kappa
