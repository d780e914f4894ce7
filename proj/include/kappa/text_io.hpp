#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kappa/word.hpp"

namespace kappa {

// Family files: one word per line, cells separated by single spaces, star
// written as `*`, lines starting with `#` ignored. construct writes a JSON
// metadata header as the first comment line, which the reader recovers so
// that family files are self-describing (graph, relation, order constraint).

struct family_metadata {
  std::size_t size = 0;
  std::optional<natural_graph> graph;
  std::optional<relation_kind> relation;
  std::optional<std::vector<int>> order_constraint;
  std::optional<int> anchor;  // catalan only
};

std::string family_metadata_json(const family& f, std::optional<int> anchor = std::nullopt);

void write_family(std::ostream& os, const family& f, std::optional<int> anchor = std::nullopt);
void write_family_file(const std::string& path, const family& f,
                       std::optional<int> anchor = std::nullopt);

// Reads the words; fills graph/relation/order constraint from the metadata
// header when present, leaving defaults otherwise.
family read_family(std::istream& is, family_metadata* meta_out = nullptr);
family read_family_file(const std::string& path, family_metadata* meta_out = nullptr);

// Graph files, DIMACS-like: `v <int>` declares a vertex (required only for
// isolated ones), `e <int> <int>` declares an edge, `#` starts a comment.
void write_graph(std::ostream& os, const natural_graph& g);
void write_graph_file(const std::string& path, const natural_graph& g);
natural_graph read_graph(std::istream& is);
natural_graph read_graph_file(const std::string& path);

}  // namespace kappa
