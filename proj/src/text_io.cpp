#include "kappa/text_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "kappa/errors.hpp"

namespace kappa {

namespace {

using nlohmann::json;

json graph_to_json(const natural_graph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

natural_graph graph_from_json(const json& j) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  std::vector<int> verts = j.value("vertices", std::vector<int>{});
  return natural_graph::from_edges(edges, verts);
}

}  // namespace

std::string family_metadata_json(const family& f, std::optional<int> anchor) {
  json j;
  j["schema_version"] = 1;
  j["size"] = f.words.size();
  j["length"] = f.word_length();
  j["support"] = f.support;
  j["relation"] = to_string(f.relation);
  j["graph"] = graph_to_json(f.graph);
  if (f.order_constraint) j["order_constraint"] = *f.order_constraint;
  if (anchor) j["anchor"] = *anchor;
  return j.dump();
}

void write_family(std::ostream& os, const family& f, std::optional<int> anchor) {
  os << "# " << family_metadata_json(f, anchor) << "\n";
  for (const auto& w : f.words) os << w.to_string() << "\n";
}

void write_family_file(const std::string& path, const family& f, std::optional<int> anchor) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot open '" + path + "' for writing");
  write_family(os, f, anchor);
}

family read_family(std::istream& is, family_metadata* meta_out) {
  family f;
  family_metadata meta;
  bool have_meta = false;
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (!have_meta) {
        // First comment line may carry the JSON metadata header.
        auto brace = line.find('{');
        if (brace != std::string::npos) {
          json j = json::parse(line.substr(brace), nullptr, false);
          if (!j.is_discarded() && j.is_object()) {
            have_meta = true;
            if (j.contains("graph")) meta.graph = graph_from_json(j["graph"]);
            if (j.contains("relation"))
              meta.relation = relation_from_string(j["relation"].get<std::string>());
            if (j.contains("order_constraint"))
              meta.order_constraint = j["order_constraint"].get<std::vector<int>>();
            if (j.contains("anchor")) meta.anchor = j["anchor"].get<int>();
          }
        }
      }
      continue;
    }
    f.words.push_back(pattern_word::parse(line));
  }
  f.refresh_support();
  if (meta.graph) f.graph = *meta.graph;
  if (meta.relation) f.relation = *meta.relation;
  if (meta.order_constraint) f.order_constraint = meta.order_constraint;
  meta.size = f.words.size();
  if (meta_out) *meta_out = meta;
  return f;
}

family read_family_file(const std::string& path, family_metadata* meta_out) {
  std::ifstream is(path);
  if (!is) throw input_error("cannot open family file '" + path + "'");
  return read_family(is, meta_out);
}

void write_graph(std::ostream& os, const natural_graph& g) {
  for (int v : g.vertices()) os << "v " << v << "\n";
  for (const auto& [a, b] : g.edges()) os << "e " << a << " " << b << "\n";
}

void write_graph_file(const std::string& path, const natural_graph& g) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot open '" + path + "' for writing");
  write_graph(os, g);
}

natural_graph read_graph(std::istream& is) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> verts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "v") {
      int v;
      if (!(ls >> v)) throw input_error("graph line " + std::to_string(lineno) + ": bad vertex");
      verts.push_back(v);
    } else if (kind == "e") {
      int a, b;
      if (!(ls >> a >> b))
        throw input_error("graph line " + std::to_string(lineno) + ": bad edge");
      edges.emplace_back(a, b);
    } else if (kind == "c" || kind == "p") {
      continue;  // tolerate DIMACS comment/problem lines
    } else {
      throw input_error("graph line " + std::to_string(lineno) + ": unknown directive '" +
                        kind + "'");
    }
  }
  return natural_graph::from_edges(edges, verts);
}

natural_graph read_graph_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw input_error("cannot open graph file '" + path + "'");
  return read_graph(is);
}

}  // namespace kappa
