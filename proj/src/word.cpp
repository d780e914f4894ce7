#include "kappa/word.hpp"

#include <algorithm>
#include <sstream>

#include "kappa/errors.hpp"

namespace kappa {

pattern_word::pattern_word(std::vector<int> cells) : cells_(std::move(cells)) {
  check_well_formed();
}

std::vector<int> pattern_word::symbols() const {
  std::vector<int> out;
  for (int c : cells_)
    if (c != star) out.push_back(c);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> pattern_word::position_of(int symbol) const {
  for (std::size_t i = 0; i < cells_.size(); ++i)
    if (cells_[i] == symbol) return i;
  return std::nullopt;
}

void pattern_word::check_well_formed() const {
  std::vector<int> seen;
  for (int c : cells_) {
    if (c < 0) throw input_error("pattern word cell must be a positive symbol or star");
    if (c != star) seen.push_back(c);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw input_error("pattern word repeats a symbol");
}

std::string pattern_word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (i) os << ' ';
    if (cells_[i] == star)
      os << '*';
    else
      os << cells_[i];
  }
  return os.str();
}

pattern_word pattern_word::parse(const std::string& line) {
  std::istringstream is(line);
  std::vector<int> cells;
  std::string tok;
  while (is >> tok) {
    if (tok == "*") {
      cells.push_back(star);
    } else {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        if (v < 1) throw std::invalid_argument(tok);
        cells.push_back(v);
      } catch (const std::exception&) {
        throw input_error("bad word cell '" + tok + "' (expected positive integer or *)");
      }
    }
  }
  return pattern_word(std::move(cells));
}

std::string to_string(relation_kind r) {
  return r == relation_kind::graph_different ? "different" : "colliding";
}

relation_kind relation_from_string(const std::string& s) {
  if (s == "different" || s == "graph-different") return relation_kind::graph_different;
  if (s == "colliding") return relation_kind::colliding;
  throw input_error("unknown relation '" + s + "' (expected different|colliding)");
}

void family::refresh_support() {
  std::vector<int> s;
  for (const auto& w : words) {
    auto ws = w.symbols();
    s.insert(s.end(), ws.begin(), ws.end());
  }
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  support = std::move(s);
}

std::string verification_report::summary() const {
  if (valid()) return "valid";
  std::ostringstream os;
  os << violations.size() << " violating pair(s)";
  if (!order_violations.empty()) os << ", " << order_violations.size() << " order violation(s)";
  return os.str();
}

}  // namespace kappa
