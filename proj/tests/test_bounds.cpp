#include <doctest.h>

#include <random>

#include "kappa/bounds.hpp"
#include "kappa/errors.hpp"
#include "kappa/graph.hpp"

using namespace kappa;

namespace {

natural_graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n, 1);
  return natural_graph::from_edges(edges);
}

}  // namespace

TEST_CASE("chromatic numbers of the named graphs") {
  CHECK(chromatic_number(natural_graph::from_edges({{1, 2}})) == 2);
  CHECK(chromatic_number(complete_graph(4)) == 4);
  CHECK(chromatic_number(matching_graph(3)) == 2);
  CHECK(chromatic_number(path_graph(5)) == 2);
  CHECK(chromatic_number(cycle_graph(5)) == 3);
  CHECK(chromatic_number(star_graph(4)) == 2);
  CHECK(chromatic_number(natural_graph::from_edges({}, {1, 2, 3})) == 1);
  CHECK(chromatic_number(natural_graph()) == 0);
}

TEST_CASE("chromatic_power_upper is chi to the number of declared vertices") {
  CHECK(chromatic_power_upper(natural_graph::from_edges({{1, 2}})) == u128(4));
  // K_{1,2} has 3 vertices and chi 2.
  CHECK(chromatic_power_upper(star_graph(2)) == u128(8));
  u128 expected = 1;
  for (int l = 1; l <= 8; ++l) {
    expected = 1;
    for (int i = 0; i < 2 * l; ++i) expected *= 2;
    CHECK(chromatic_power_upper(matching_graph(l)) == expected);  // 4^l
  }
  // Isolated vertices count in the declared form.
  const natural_graph padded = natural_graph::from_edges({{1, 2}}, {3});
  CHECK(chromatic_power_upper(padded) == u128(8));
  CHECK(solver_upper_cap(padded) == 4);  // support-only cap stays tight
}

TEST_CASE("u128 rendering") {
  CHECK(u128_to_string(0) == "0");
  CHECK(u128_to_string(u128(1) << 64) == "18446744073709551616");
  u128 big = 1;
  for (int i = 0; i < 16; ++i) big *= 16;
  CHECK(u128_to_string(big) == "18446744073709551616");  // 16^16
}

TEST_CASE("matching numbers") {
  CHECK(matching_number(matching_graph(4)) == 4);
  CHECK(matching_number(star_graph(5)) == 1);
  CHECK(matching_number(path_graph(5)) == 2);
  CHECK(matching_number(complete_graph(5)) == 2);
  CHECK(matching_number(natural_graph()) == 0);
}

TEST_CASE("star_exact recognizes stars and only stars") {
  CHECK(star_exact(natural_graph::from_edges({{1, 2}})) == 3);
  CHECK(star_exact(star_graph(5)) == 11);
  CHECK(star_exact(path_graph(3)) == 5);  // P_3 is K_{1,2}
  CHECK_FALSE(star_exact(path_graph(4)).has_value());
  CHECK_FALSE(star_exact(matching_graph(2)).has_value());
  CHECK_FALSE(star_exact(complete_graph(3)).has_value());
  // Isolated vertices do not spoil the star shape.
  CHECK(star_exact(natural_graph::from_edges({{1, 2}, {1, 3}}, {9})) == 5);
}

TEST_CASE("decomposition_lower on the named graphs") {
  const auto star5 = decomposition_lower(star_graph(5));
  CHECK(star5.value == 11);
  REQUIRE(star5.stars.size() == 1);
  CHECK(star5.stars[0].center == 1);
  CHECK(star5.stars[0].leaves.size() == 5);

  const auto triple = decomposition_lower(matching_graph(3));
  CHECK(triple.value == 27);
  CHECK(triple.matching_value == 27);

  const auto p4 = decomposition_lower(path_graph(4));
  CHECK(p4.value == 9);
  CHECK(p4.matching == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(p4.product_value == 9);
  CHECK(p4.product_length() == 6);

  const auto empty = decomposition_lower(natural_graph::from_edges({}, {1, 2}));
  CHECK(empty.value == 1);
  CHECK(empty.stars.empty());
}

TEST_CASE("decomposition_lower of lK2 is exactly 3^l") {
  unsigned long long expected = 1;
  for (int l = 1; l <= 8; ++l) {
    expected *= 3;
    const auto d = decomposition_lower(matching_graph(l));
    CHECK(d.value == expected);
    CHECK(d.matching_length() == 3 * l);
    CHECK(d.value_at(3 * l) == expected);
    CHECK(d.value_at(3 * l - 1) == 1);
  }
}

TEST_CASE("decomposition attaches outside vertices per the matching proof") {
  // Path P_5: lex-min maximum matching {1,2},{3,4}; vertex 5 attaches to 4.
  const auto p5 = decomposition_lower(path_graph(5));
  CHECK(p5.matching == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  REQUIRE(p5.stars.size() == 2);
  CHECK(p5.product_value == 3 * 5);
  CHECK(p5.value == 15);
}

TEST_CASE("binomial_upper values") {
  CHECK(binomial_upper(1) == 1);
  CHECK(binomial_upper(5) == 10);
  CHECK(binomial_upper(7) == 35);
  CHECK(binomial_upper(6) == 20);
  CHECK_THROWS_AS(binomial_upper(0), input_error);
}

TEST_CASE("alpha ratio of the bidirected complete line graph") {
  const auto t2 = line_graph_alpha_ratio(2);
  CHECK(t2.vertex_count == 2);
  CHECK(t2.alpha == 1);
  CHECK(t2.ratio_num == 2);
  CHECK(t2.ratio_den == 1);

  const auto t4 = line_graph_alpha_ratio(4);
  CHECK(t4.vertex_count == 12);
  CHECK(t4.alpha >= 4);
  CHECK(t4.ratio_num <= 3 * t4.ratio_den);

  // The bipartite arc construction turns out to be optimal in range.
  const int exact_alpha[] = {1, 2, 4, 6, 9};
  for (int t = 2; t <= 6; ++t) {
    const auto r = line_graph_alpha_ratio(t);
    CHECK(r.vertex_count == t * (t - 1));
    CHECK(r.alpha == exact_alpha[t - 2]);
    CHECK(r.alpha >= (t / 2) * ((t + 1) / 2));
    CHECK(r.ratio_num <= 4 * r.ratio_den);
  }
  CHECK_THROWS_AS(line_graph_alpha_ratio(1), input_error);
  CHECK_THROWS_AS(line_graph_alpha_ratio(7), input_error);
}

TEST_CASE("alpha matches a subset brute force for small t") {
  for (int t = 2; t <= 4; ++t) {
    // Rebuild L(K-hat_t) arcs directly: arc id = position in the (i,j) scan.
    std::vector<std::pair<int, int>> arcs;
    for (int i = 1; i <= t; ++i)
      for (int j = 1; j <= t; ++j)
        if (i != j) arcs.emplace_back(i, j);
    const int m = static_cast<int>(arcs.size());
    int best = 0;
    for (int mask = 0; mask < (1 << m); ++mask) {
      bool independent = true;
      for (int a = 0; a < m && independent; ++a)
        for (int b = a + 1; b < m && independent; ++b)
          if ((mask >> a & 1) && (mask >> b & 1)) {
            const bool adjacent = arcs[a].second == arcs[b].first ||
                                  arcs[a].first == arcs[b].second;
            if (adjacent) independent = false;
          }
      if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    CHECK(line_graph_alpha_ratio(t).alpha == best);
  }
}

TEST_CASE("decomposition never exceeds the chromatic power ceiling") {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> vdist(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::pair<int, int>> edges;
    for (int e = 0; e < 6; ++e) {
      const int a = vdist(rng), b = vdist(rng);
      if (a != b) edges.emplace_back(a, b);
    }
    if (edges.empty()) continue;
    const natural_graph g = natural_graph::from_edges(edges);
    CHECK(u128(decomposition_lower(g).value) <= chromatic_power_upper(g));
  }
}

TEST_CASE("size guards refuse oversized graphs") {
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= 17; ++i) edges.emplace_back(i, i + 17);
  const natural_graph big = natural_graph::from_edges(edges);
  CHECK_THROWS_AS(chromatic_number(big), input_error);
  CHECK_THROWS_AS(matching_number(big), input_error);
}
