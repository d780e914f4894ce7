#include <doctest.h>

#include <algorithm>
#include <set>

#include "kappa/constructions.hpp"
#include "kappa/errors.hpp"
#include "kappa/relations.hpp"

using namespace kappa;

namespace {

pattern_word word(std::initializer_list<int> cells) { return pattern_word(cells); }

bool contains_word(const family& f, const pattern_word& w) {
  return std::find(f.words.begin(), f.words.end(), w) != f.words.end();
}

}  // namespace

TEST_CASE("construct_star r=1 gives the three cyclic words") {
  const family f = construct_star(1);
  REQUIRE(f.words.size() == 3);
  CHECK(contains_word(f, word({1, 2, star})));
  CHECK(contains_word(f, word({star, 1, 2})));
  CHECK(contains_word(f, word({2, star, 1})));
  CHECK(verify_family(f).valid());
}

TEST_CASE("construct_star r=2 starts from 1 2 3 * * and shifts") {
  const family f = construct_star(2);
  REQUIRE(f.words.size() == 5);
  CHECK(f.words.front() == word({1, 2, 3, star, star}));
  for (const auto& w : f.words) CHECK(w.length() == 5);
  CHECK(verify_family(f).valid());
}

TEST_CASE("construct_star is verifier-valid across r") {
  for (int r = 1; r <= 5; ++r) {
    const family f = construct_star(r);
    CHECK(f.words.size() == static_cast<std::size_t>(2 * r + 1));
    CHECK(f.graph == star_graph(r));
    CHECK(verify_family(f).valid());
  }
  CHECK_THROWS_AS(construct_star(0), input_error);
}

TEST_CASE("construct_matching l=1 gives the cyclic block") {
  const family f = construct_matching(1);
  REQUIRE(f.words.size() == 3);
  CHECK(f.words[0] == word({1, 2, star}));
  CHECK(f.words[1] == word({2, star, 1}));
  CHECK(f.words[2] == word({star, 1, 2}));
  CHECK(verify_family(f).valid());
}

TEST_CASE("construct_matching sizes and validity") {
  std::size_t expected = 3;
  for (int l = 1; l <= 4; ++l) {
    const family f = construct_matching(l);
    CHECK(f.words.size() == expected);
    CHECK(f.word_length() == static_cast<std::size_t>(3 * l));
    CHECK(verify_family(f).valid());
    expected *= 3;
  }
  CHECK(contains_word(construct_matching(2), word({1, 2, star, 3, 4, star})));
  CHECK_THROWS_AS(construct_matching(0), input_error);
}

TEST_CASE("construct_complete n=2 is the even permutations of [3]") {
  const family f = construct_complete(2);
  REQUIRE(f.words.size() == 3);
  CHECK(contains_word(f, word({1, 2, 3})));
  CHECK(contains_word(f, word({2, 3, 1})));
  CHECK(contains_word(f, word({3, 1, 2})));
  CHECK(verify_family(f).valid());
}

TEST_CASE("construct_complete sizes follow (n+1)!/2") {
  for (int n = 1; n <= 6; ++n) {
    std::size_t factorial = 1;
    for (int i = 2; i <= n + 1; ++i) factorial *= i;
    const family f = construct_complete(n);
    CHECK(f.words.size() == factorial / 2);
    if (n <= 4) CHECK(verify_family(f).valid());
  }
  CHECK_THROWS_AS(construct_complete(0), input_error);
}

TEST_CASE("construct_p4_ten is the fixed ten-word family") {
  const family f = construct_p4_ten();
  REQUIRE(f.words.size() == 10);
  const std::set<std::string> got = [&] {
    std::set<std::string> s;
    for (const auto& w : f.words) s.insert(w.to_string());
    return s;
  }();
  const std::set<std::string> expected = {
      "1 2 4 3 5", "2 4 3 5 1", "4 3 5 1 2", "3 5 1 2 4", "5 1 2 4 3",
      "4 3 1 2 5", "3 1 2 5 4", "1 2 5 4 3", "2 5 4 3 1", "5 4 3 1 2"};
  CHECK(got == expected);
  CHECK(verify_family(f).valid());

  // All witnesses are consecutive pairs, so the family is also colliding.
  family colliding = f;
  colliding.relation = relation_kind::colliding;
  CHECK(verify_family(colliding).valid());
}

TEST_CASE("product_construction composes disjoint families") {
  const family a = construct_star(1);
  const family b = shift_family(construct_star(1), 2);
  const family prod = product_construction({a, b});
  CHECK(prod.words.size() == 9);
  CHECK(prod.word_length() == 6);
  CHECK(prod.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}, {3, 4}});
  CHECK(verify_family(prod).valid());

  const family c = shift_family(construct_star(1), 3);
  const family mixed = product_construction({construct_star(2), c});
  CHECK(mixed.words.size() == 15);
  CHECK(verify_family(mixed).valid());
}

TEST_CASE("product_construction rejects overlapping supports") {
  const family a = construct_star(1);
  CHECK_THROWS_AS(product_construction({a, a}), input_error);
  CHECK_NOTHROW(product_construction({a}));
  CHECK(product_construction({a}).words == a.words);
}

TEST_CASE("substitute splices y into the stars and tail of x") {
  const pattern_word x = word({star, 1, 2, 4, 3});
  const pattern_word y = word({5, 6, 7, 8, 9});
  CHECK(substitute(x, y) == word({5, 1, 2, 4, 3, 6, 7, 8, 9}));

  const pattern_word plain = word({2, 1, 3});
  CHECK(substitute(plain, pattern_word(std::vector<int>{})) == plain);

  CHECK_THROWS_AS(substitute(word({1, star}), word({1, 2})), input_error);
  CHECK_THROWS_AS(substitute(word({star, star, 1}), word({2})), input_error);
}

TEST_CASE("rho_recursion_build sizes and validity") {
  CHECK_THROWS_AS(rho_recursion_build(4), input_error);
  const std::size_t expected[] = {10, 20, 30, 60, 100, 200, 300, 600, 1000};
  for (int n = 5; n <= 13; ++n) {
    const family f = rho_recursion_build(n);
    CHECK(f.words.size() == expected[n - 5]);
    CHECK(f.relation == relation_kind::colliding);
    for (const auto& w : f.words) {
      CHECK(w.length() == static_cast<std::size_t>(n));
      CHECK(static_cast<int>(w.symbols().size()) == n);  // permutations, no stars
    }
    CHECK(verify_family(f).valid());
  }
}

TEST_CASE("parity_double on a single word") {
  family f;
  f.words = {word({1, 2})};
  f.graph = path_graph(2);
  f.relation = relation_kind::colliding;
  f.refresh_support();
  const family doubled = parity_double(f, 3);
  REQUIRE(doubled.words.size() == 2);
  CHECK(doubled.words[0] == word({1, 2, 3}));
  CHECK(doubled.words[1] == word({1, 3, 2}));
  CHECK(verify_family(doubled).valid());
}

TEST_CASE("parity_double needs witnesses that avoid the top symbol") {
  family f;
  f.words = {word({1, 2}), word({2, 1})};
  f.graph = path_graph(2);
  f.relation = relation_kind::colliding;
  f.refresh_support();
  // {12, 21} collide only through {1,2} = {n-2, n-1}; the doubled family
  // would contain the non-colliding pair 1 3 2 / 3 1 2.
  CHECK_THROWS_AS(parity_double(f, 3), input_error);
}

TEST_CASE("parity_double doubles the ten-word family") {
  const family doubled = parity_double(construct_p4_ten(), 6);
  CHECK(doubled.words.size() == 20);
  CHECK(verify_family(doubled).valid());
}

TEST_CASE("catalan_construction sizes are the Catalan numbers") {
  const long long expected[] = {1, 2, 5, 14, 42, 132};
  for (int n = 1; n <= 6; ++n) {
    CHECK(catalan_number(n) == expected[n - 1]);
    const family f = catalan_construction(n);
    CHECK(static_cast<long long>(f.words.size()) == expected[n - 1]);
    REQUIRE(f.order_constraint.has_value());
    if (n <= 5) CHECK(verify_family(f).valid());
  }
}

TEST_CASE("catalan_construction anchor handling") {
  CHECK(catalan_min_anchor(1) == 1);
  CHECK(catalan_min_anchor(3) == 4);
  CHECK_THROWS_WITH_AS(catalan_construction(3, 2), doctest::Contains("minimum is 4"),
                       input_error);
  const family wide = catalan_construction(3, 10);
  CHECK(wide.words.size() == 5);
  CHECK(wide.word_length() == 13);  // anchor 10 + minimal suffix block 3
  CHECK(verify_family(wide).valid());
}

TEST_CASE("catalan words list 1..n in natural order") {
  const family f = catalan_construction(4);
  for (const auto& w : f.words) {
    long long last = -1;
    for (int s = 1; s <= 4; ++s) {
      auto pos = w.position_of(s);
      REQUIRE(pos.has_value());
      CHECK(static_cast<long long>(*pos) > last);
      last = static_cast<long long>(*pos);
    }
  }
}

TEST_CASE("edge_split_transform moves a family to the split graph") {
  const family f = construct_star(1);  // valid for K_2 on {1,2}
  const family split = edge_split_transform(f, {1, 2}, 3, 4);
  CHECK(split.words.size() == f.words.size());
  CHECK(split.word_length() == 6);
  CHECK(contains_word(split, word({1, 2, star, 3, 4, star})));
  CHECK(split.graph.has_edge(3, 4));
  CHECK_FALSE(split.graph.has_edge(1, 2));
  CHECK(verify_family(split).valid());
}

TEST_CASE("iterated edge splits turn a star family into a matching family") {
  const family f = construct_star(2);  // K_{1,2}: edges {1,2},{1,3}
  const family once = edge_split_transform(f, {1, 2}, 4, 5);
  const family twice = edge_split_transform(once, {1, 3}, 6, 7);
  CHECK(twice.words.size() == 5);
  CHECK(twice.graph.edges() == std::vector<std::pair<int, int>>{{4, 5}, {6, 7}});
  CHECK(verify_family(twice).valid());
}

TEST_CASE("edge_split_transform rejects stale symbols and non-edges") {
  const family f = construct_star(1);
  CHECK_THROWS_AS(edge_split_transform(f, {1, 2}, 2, 4), input_error);
  CHECK_THROWS_AS(edge_split_transform(f, {1, 2}, 4, 4), input_error);
  CHECK_THROWS_AS(edge_split_transform(f, {1, 3}, 4, 5), input_error);
}

TEST_CASE("substituted colliding families stay colliding both ways") {
  // Pairs differing in the x part and pairs differing in the y part.
  const family base = construct_p4_ten();
  std::vector<pattern_word> masked;
  for (const auto& w : base.words) {
    std::vector<int> cells = w.cells();
    for (int& c : cells)
      if (c == 5) c = star;
    masked.emplace_back(cells);
  }
  const family lower = shift_family(construct_p4_ten(), 4);

  family same_y;
  for (const auto& x : masked) same_y.words.push_back(substitute(x, lower.words[0]));
  same_y.relation = relation_kind::colliding;
  same_y.refresh_support();
  CHECK(verify_family(same_y).valid());

  family same_x;
  for (const auto& y : lower.words) same_x.words.push_back(substitute(masked[0], y));
  same_x.relation = relation_kind::colliding;
  same_x.refresh_support();
  CHECK(verify_family(same_x).valid());
}
