#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kappa/graph.hpp"

namespace kappa {

// A cell is a positive symbol or the star placeholder (0). Stars stand for
// "any irrelevant symbol": they never match an edge and never collide.
constexpr int star = 0;

class pattern_word {
 public:
  pattern_word() = default;
  explicit pattern_word(std::vector<int> cells);

  std::size_t length() const { return cells_.size(); }
  int cell(std::size_t i) const { return cells_[i]; }
  bool is_star(std::size_t i) const { return cells_[i] == star; }
  const std::vector<int>& cells() const { return cells_; }

  // Sorted list of the non-star symbols.
  std::vector<int> symbols() const;

  // Position of a symbol (0-based), if present.
  std::optional<std::size_t> position_of(int symbol) const;

  // Throws input_error if a non-star symbol repeats or a cell is negative.
  void check_well_formed() const;

  bool operator==(const pattern_word& other) const { return cells_ == other.cells_; }
  bool operator<(const pattern_word& other) const { return cells_ < other.cells_; }

  // "1 2 * 3" rendering; the inverse of parse_word.
  std::string to_string() const;
  static pattern_word parse(const std::string& line);

 private:
  std::vector<int> cells_;
};

enum class relation_kind { graph_different, colliding };

std::string to_string(relation_kind r);
relation_kind relation_from_string(const std::string& s);

// A set of equal-length pattern words over a common symbol set, together with
// the target graph and the relation the words are supposed to satisfy
// pairwise. The optional order constraint lists symbols that every word must
// contain in increasing order of position.
struct family {
  std::vector<pattern_word> words;
  std::vector<int> support;  // sorted union of word symbols
  natural_graph graph;
  relation_kind relation = relation_kind::graph_different;
  std::optional<std::vector<int>> order_constraint;

  std::size_t size() const { return words.size(); }
  std::size_t word_length() const { return words.empty() ? 0 : words.front().length(); }

  // Recomputes `support` from the words.
  void refresh_support();
};

struct pair_violation {
  std::size_t i = 0;
  std::size_t j = 0;  // i < j
};

struct verification_report {
  std::vector<pair_violation> violations;        // pairs with no witness position
  std::vector<std::size_t> order_violations;     // words breaking the order constraint
  bool valid() const { return violations.empty() && order_violations.empty(); }
  std::string summary() const;
};

}  // namespace kappa
