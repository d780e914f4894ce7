#include "kappa/clique.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <thread>

namespace kappa {

std::size_t dyn_bits::count() const {
  std::size_t c = 0;
  for (auto x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

int dyn_bits::first() const {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i]) return static_cast<int>((i << 6) + std::countr_zero(w[i]));
  return -1;
}

std::size_t bit_graph::degree(std::size_t v) const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < words_; ++i) c += static_cast<std::size_t>(std::popcount(row(v)[i]));
  return c;
}

std::size_t bit_graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < n_; ++v) total += degree(v);
  return total / 2;
}

bit_graph bit_graph::complement() const {
  bit_graph c(n_);
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

namespace {

// Smallest-last (degeneracy) order, ties by vertex id.
std::vector<int> degeneracy_order(const bit_graph& g) {
  const std::size_t n = g.size();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (std::size_t v = 0; v < n; ++v) deg[v] = static_cast<int>(g.degree(v));
  std::vector<int> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = static_cast<int>(v);
    removed[best] = 1;
    order.push_back(best);
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && g.adjacent(best, v)) --deg[v];
  }
  return order;
}

// Immutable search graph, renumbered so that internal id = reverse degeneracy
// rank: the dense end comes first in every bitset scan.
class search_graph {
 public:
  explicit search_graph(const bit_graph& g) : n_(g.size()) {
    auto order = degeneracy_order(g);
    to_internal_.assign(n_, 0);
    to_original_.assign(n_, 0);
    for (std::size_t rank = 0; rank < n_; ++rank) {
      const int orig = order[n_ - 1 - rank];
      to_internal_[orig] = static_cast<int>(rank);
      to_original_[rank] = orig;
    }
    adj_ = bit_graph(n_);
    for (std::size_t u = 0; u < n_; ++u)
      for (std::size_t v = u + 1; v < n_; ++v)
        if (g.adjacent(u, v)) adj_.add_edge(to_internal_[u], to_internal_[v]);
  }

  std::size_t size() const { return n_; }
  std::size_t words() const { return adj_.word_count() ? adj_.word_count() : 1; }
  const std::uint64_t* row(int v) const { return adj_.row(v); }
  int to_original(int v) const { return to_original_[v]; }
  int to_internal(int v) const { return to_internal_[v]; }

  dyn_bits full_mask() const {
    dyn_bits m(words());
    for (std::size_t v = 0; v < n_; ++v) m.set(v);
    return m;
  }

  dyn_bits neighbor_mask(const dyn_bits& mask, int v) const {
    dyn_bits m = mask;
    m.intersect(row(v));
    return m;
  }

 private:
  std::size_t n_;
  bit_graph adj_;
  std::vector<int> to_internal_;
  std::vector<int> to_original_;
};

// Worker-local branch-and-bound state over a shared search_graph. `cap` and
// all sizes are in subtree scale: the caller accounts for any fixed vertex.
class search_context {
 public:
  search_context(const search_graph& g, int cap, std::atomic<bool>* stop)
      : g_(g), cap_(cap > 0 ? cap : INT_MAX), stop_(stop) {
    // Depth never exceeds the vertex count; sizing up front keeps the frame
    // references stable across the recursion.
    frames_.resize(g.size() + 2);
  }

  std::uint64_t nodes() const { return nodes_; }

  // Greedy clique from every seed vertex; deterministic lower bound.
  int greedy_lower_bound(const dyn_bits& mask) {
    int best = 0;
    for (std::size_t v = 0; v < g_.size(); ++v) {
      if (!mask.test(v)) continue;
      dyn_bits cand = g_.neighbor_mask(mask, v);
      int size = 1;
      for (int u = cand.first(); u >= 0; u = cand.first()) {
        ++size;
        cand.intersect(g_.row(u));
        cand.reset(u);
      }
      best = std::max(best, size);
      if (best >= cap_) break;
    }
    return best;
  }

  // Exact max clique size within mask starting at depth `base` (number of
  // vertices already committed by the caller).
  int search(const dyn_bits& mask, int base, int initial_best) {
    best_ = initial_best;
    dyn_bits p = mask;
    expand(p, base);
    return best_;
  }

  // True iff a clique of size >= want exists within mask.
  bool exists(const dyn_bits& mask, int want) {
    if (want <= 0) return true;
    found_ = false;
    want_ = want;
    dyn_bits p = mask;
    probe(p, 0);
    return found_;
  }

  void color_sort(const dyn_bits& p, std::vector<int>& r, std::vector<int>& c) {
    r.clear();
    c.clear();
    uncolored_ = p;
    int color = 0;
    while (uncolored_.any()) {
      ++color;
      klass_ = uncolored_;
      for (int v = klass_.first(); v >= 0; v = klass_.first()) {
        r.push_back(v);
        c.push_back(color);
        uncolored_.reset(v);
        klass_.reset(v);
        klass_.subtract(g_.row(v));
      }
    }
  }

 private:
  struct frame {
    std::vector<int> r;
    std::vector<int> c;
  };

  bool stopped() const { return stop_ && stop_->load(std::memory_order_relaxed); }

  void expand(dyn_bits& p, int depth) {
    if (stopped()) return;
    ++nodes_;
    frame& f = frames_[depth];
    color_sort(p, f.r, f.c);
    for (int i = static_cast<int>(f.r.size()) - 1; i >= 0; --i) {
      if (depth + f.c[i] <= best_) return;
      if (stopped()) return;
      const int v = f.r[i];
      dyn_bits next = g_.neighbor_mask(p, v);
      if (!next.any()) {
        if (depth + 1 > best_) {
          best_ = depth + 1;
          if (best_ >= cap_ && stop_) stop_->store(true, std::memory_order_relaxed);
        }
      } else {
        expand(next, depth + 1);
      }
      p.reset(v);
    }
  }

  void probe(dyn_bits& p, int depth) {
    if (found_) return;
    ++nodes_;
    frame& f = frames_[depth];
    color_sort(p, f.r, f.c);
    for (int i = static_cast<int>(f.r.size()) - 1; i >= 0 && !found_; --i) {
      if (depth + f.c[i] < want_) return;
      const int v = f.r[i];
      if (depth + 1 >= want_) {
        found_ = true;
        return;
      }
      dyn_bits next = g_.neighbor_mask(p, v);
      if (next.any()) probe(next, depth + 1);
      p.reset(v);
    }
  }

  const search_graph& g_;
  int cap_;
  std::atomic<bool>* stop_;
  int best_ = 0;
  int want_ = 0;
  bool found_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<frame> frames_;
  dyn_bits uncolored_;
  dyn_bits klass_;
};

// Lexicographically least (by original vertex id) clique of the given size
// within mask. Each accepted vertex is provably the least member over all
// remaining completions, so the scan never needs to revisit smaller ids.
std::vector<int> extract_witness(const search_graph& g, dyn_bits mask, int size,
                                 std::uint64_t& nodes) {
  std::vector<int> chosen;
  int need = size;
  std::size_t scan_from = 0;
  search_context ctx(g, 0, nullptr);
  while (need > 0) {
    bool advanced = false;
    for (std::size_t orig = scan_from; orig < g.size(); ++orig) {
      const int v = g.to_internal(static_cast<int>(orig));
      if (!mask.test(v)) continue;
      if (need == 1) {
        chosen.push_back(static_cast<int>(orig));
        --need;
        advanced = true;
        break;
      }
      dyn_bits sub = g.neighbor_mask(mask, v);
      if (ctx.exists(sub, need - 1)) {
        chosen.push_back(static_cast<int>(orig));
        mask = std::move(sub);
        --need;
        scan_from = orig + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) break;  // unreachable when `size` is the true clique number
  }
  nodes += ctx.nodes();
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

clique_result max_clique(const bit_graph& g, int upper_cap, int threads, int fixed_vertex) {
  clique_result result;
  if (g.size() == 0) return result;
  if (threads < 1) threads = 1;

  const search_graph sg(g);
  const int base_depth = fixed_vertex >= 0 ? 1 : 0;
  // Subtree-scale cap: sizes inside the search exclude the fixed vertex.
  const int sub_cap = upper_cap > 0 ? upper_cap - base_depth : 0;

  dyn_bits root_mask = sg.full_mask();
  if (fixed_vertex >= 0)
    root_mask = sg.neighbor_mask(root_mask, sg.to_internal(fixed_vertex));

  std::atomic<bool> stop{false};
  std::uint64_t nodes = 0;

  search_context seed_ctx(sg, sub_cap, &stop);
  int best_sub = seed_ctx.greedy_lower_bound(root_mask);
  nodes += seed_ctx.nodes();

  if (sub_cap > 0 && best_sub >= sub_cap) {
    best_sub = sub_cap;
    result.cap_reached = true;
  } else if (root_mask.any()) {
    // Root branches in processing order (highest color first); branch for
    // R[i] owns candidates R[0..i-1] & N(R[i]).
    std::vector<int> r, c;
    seed_ctx.color_sort(root_mask, r, c);
    const int branch_count = static_cast<int>(r.size());
    std::vector<dyn_bits> branch_masks;
    branch_masks.reserve(branch_count);
    {
      dyn_bits p = root_mask;
      for (int i = branch_count - 1; i >= 0; --i) {
        branch_masks.push_back(sg.neighbor_mask(p, r[i]));
        p.reset(r[i]);
      }
    }
    const int workers = std::max(1, std::min(threads, branch_count));
    std::vector<int> worker_best(workers, best_sub);
    std::vector<std::uint64_t> worker_nodes(workers, 0);
    auto run = [&](int w) {
      search_context ctx(sg, sub_cap, &stop);
      for (int k = w; k < branch_count; k += workers) {
        if (stop.load(std::memory_order_relaxed)) break;
        const int i = branch_count - 1 - k;
        // Color bound: any clique inside branch k has at most c[i] vertices.
        if (c[i] <= worker_best[w]) continue;
        worker_best[w] =
            std::max(worker_best[w], ctx.search(branch_masks[k], 1, worker_best[w]));
        if (sub_cap > 0 && worker_best[w] >= sub_cap) {
          stop.store(true, std::memory_order_relaxed);
          break;
        }
      }
      worker_nodes[w] = ctx.nodes();
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    for (int w = 0; w < workers; ++w) {
      best_sub = std::max(best_sub, worker_best[w]);
      nodes += worker_nodes[w];
    }
    if (sub_cap > 0 && best_sub >= sub_cap) {
      best_sub = sub_cap;
      result.cap_reached = true;
    }
  }

  int best = best_sub + base_depth;
  if (fixed_vertex >= 0 && best < 1) best = 1;  // the fixed vertex alone
  result.size = best;

  // Witness extraction, always sequential and scheduling-independent.
  std::vector<int> witness;
  dyn_bits mask = sg.full_mask();
  int need = best;
  if (fixed_vertex >= 0) {
    witness.push_back(fixed_vertex);
    mask = sg.neighbor_mask(mask, sg.to_internal(fixed_vertex));
    --need;
  }
  if (need > 0) {
    auto rest = extract_witness(sg, std::move(mask), need, nodes);
    witness.insert(witness.end(), rest.begin(), rest.end());
  }
  std::sort(witness.begin(), witness.end());
  result.members = std::move(witness);
  result.nodes = nodes;
  return result;
}

clique_result max_independent_set(const bit_graph& g, int threads) {
  return max_clique(g.complement(), 0, threads, -1);
}

}  // namespace kappa
