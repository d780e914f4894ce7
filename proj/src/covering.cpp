#include "kappa/covering.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kappa/errors.hpp"
#include "kappa/relations.hpp"

namespace kappa {

void digraph::validate() const {
  std::set<int> pos(positions.begin(), positions.end());
  if (pos.size() != positions.size()) throw input_error("digraph repeats a position");
  std::set<int> labels;
  for (const auto& a : arcs) {
    if (a.tail == a.head)
      throw input_error("digraph has a self-loop at position " + std::to_string(a.tail));
    if (!pos.count(a.tail) || !pos.count(a.head))
      throw input_error("digraph arc (" + std::to_string(a.tail) + "," +
                        std::to_string(a.head) + ") uses an undeclared position");
    if (!labels.insert(a.label).second)
      throw input_error("digraph repeats arc label " + std::to_string(a.label));
    if (a.label < 1) throw input_error("digraph arc labels must be positive");
  }
}

natural_graph line_graph(const digraph& d) {
  d.validate();
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < d.arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < d.arcs.size(); ++j) {
      const auto& x = d.arcs[i];
      const auto& y = d.arcs[j];
      // (a,b) ~ (c,d) iff b=c or a=d, in either role.
      if (x.head == y.tail || x.tail == y.head)
        edges.emplace_back(x.label, y.label);
    }
  }
  std::vector<int> labels;
  for (const auto& a : d.arcs) labels.push_back(a.label);
  return natural_graph::from_edges(edges, labels);
}

void cover_certificate::rebuild_coverage() {
  covered_by.assign(m, std::vector<int>(m, -1));
  for (int q = 1; q <= m; ++q)
    for (int r = q + 1; r <= m; ++r)
      for (std::size_t s = 0; s < parts.size(); ++s)
        if (parts[s].graph.has_edge(q, r)) {
          covered_by[q - 1][r - 1] = static_cast<int>(s);
          covered_by[r - 1][q - 1] = static_cast<int>(s);
          break;
        }
}

cover_verification verify_cover(const cover_certificate& c) {
  cover_verification v;
  auto fail = [&v](const std::string& msg) {
    v.ok = false;
    v.failures.push_back(msg);
  };

  if (c.m < 1) {
    fail("certificate must cover at least one word (M >= 1)");
    return v;
  }

  for (std::size_t s = 0; s < c.parts.size(); ++s) {
    const auto& part = c.parts[s];
    try {
      part.realizer.validate();
    } catch (const input_error& e) {
      fail("part " + std::to_string(s + 1) + ": " + e.what());
      continue;
    }
    for (const auto& a : part.realizer.arcs)
      if (a.label > c.m)
        fail("part " + std::to_string(s + 1) + ": arc label " + std::to_string(a.label) +
             " exceeds M");
    // Part graph must be the realizer's line graph padded to vertex set [M].
    natural_graph lg = line_graph(part.realizer);
    if (part.graph.edges() != lg.edges())
      fail("part " + std::to_string(s + 1) + ": graph is not the line graph of its digraph");
    for (int q = 1; q <= c.m; ++q)
      if (!part.graph.has_vertex(q)) {
        fail("part " + std::to_string(s + 1) + ": vertex set does not include " +
             std::to_string(q));
        break;
      }
    for (int q : part.graph.vertices())
      if (q > c.m) {
        fail("part " + std::to_string(s + 1) + ": vertex " + std::to_string(q) +
             " exceeds M");
        break;
      }
  }

  for (int q = 1; q <= c.m; ++q)
    for (int r = q + 1; r <= c.m; ++r) {
      bool covered = false;
      for (const auto& part : c.parts)
        if (part.graph.has_edge(q, r)) {
          covered = true;
          break;
        }
      if (!covered)
        fail("pair {" + std::to_string(q) + "," + std::to_string(r) + "} is uncovered");
    }
  return v;
}

cover_certificate perms_to_covering(const family& f) {
  if (f.words.empty()) throw input_error("perms_to_covering: empty family");
  // The graph must be a perfect matching on consecutive pairs {2s-1, 2s}.
  const auto& edges = f.graph.edges();
  const int l = static_cast<int>(edges.size());
  for (int s = 1; s <= l; ++s)
    if (edges[s - 1] != std::make_pair(2 * s - 1, 2 * s))
      throw input_error("perms_to_covering: graph edges must be {1,2},{3,4},...");
  if (f.relation != relation_kind::graph_different)
    throw input_error("perms_to_covering: family must use the graph-different relation");
  auto report = verify_family(f);
  if (!report.valid())
    throw input_error("perms_to_covering: family is not pairwise different (" +
                      report.summary() + ")");

  const int m = static_cast<int>(f.words.size());
  const auto support = f.graph.support();

  // Words stand for truncated permutations: the truncation must already show
  // every matched symbol, or the realizing digraphs lose arcs.
  for (int r = 1; r <= m; ++r)
    for (int sym : support)
      if (!f.words[r - 1].position_of(sym))
        throw input_error("perms_to_covering: word " + std::to_string(r - 1) +
                          " does not place symbol " + std::to_string(sym));

  // Shared digraph vertex set: every position where some word places a
  // non-isolated vertex of the graph.
  std::set<int> used_positions;
  for (const auto& w : f.words)
    for (std::size_t p = 0; p < w.length(); ++p)
      if (w.cell(p) != star &&
          std::binary_search(support.begin(), support.end(), w.cell(p)))
        used_positions.insert(static_cast<int>(p) + 1);

  cover_certificate cert;
  cert.m = m;
  for (int s = 1; s <= l; ++s) {
    const int a = 2 * s - 1, b = 2 * s;
    cover_part part;
    part.realizer.positions.assign(used_positions.begin(), used_positions.end());
    for (int r = 1; r <= m; ++r) {
      const auto pa = f.words[r - 1].position_of(a);
      const auto pb = f.words[r - 1].position_of(b);
      if (pa && pb)
        part.realizer.arcs.push_back(
            {static_cast<int>(*pa) + 1, static_cast<int>(*pb) + 1, r});
    }
    // The part graph comes straight from the words; verify_cover later
    // compares it against the realizer's line graph.
    std::vector<std::pair<int, int>> pedges;
    for (int q = 1; q <= m; ++q)
      for (int r = q + 1; r <= m; ++r) {
        const auto& wq = f.words[q - 1];
        const auto& wr = f.words[r - 1];
        for (std::size_t p = 0; p < wq.length(); ++p) {
          const int x = wq.cell(p), y = wr.cell(p);
          if ((x == a && y == b) || (x == b && y == a)) {
            pedges.emplace_back(q, r);
            break;
          }
        }
      }
    std::vector<int> all_words(m);
    for (int r = 1; r <= m; ++r) all_words[r - 1] = r;
    part.graph = natural_graph::from_edges(pedges, all_words);
    cert.parts.push_back(std::move(part));
  }
  cert.rebuild_coverage();
  for (int q = 1; q <= m; ++q)
    for (int r = q + 1; r <= m; ++r)
      if (cert.covered_by[q - 1][r - 1] < 0)
        throw input_error("perms_to_covering: internal error, pair {" + std::to_string(q) +
                          "," + std::to_string(r) + "} uncovered");
  return cert;
}

family covering_to_perms(const cover_certificate& c) {
  auto check = verify_cover(c);
  if (!check.ok)
    throw input_error("covering_to_perms: invalid certificate: " + check.failures.front());

  const int l = static_cast<int>(c.parts.size());
  std::size_t total_len = 0;
  std::vector<std::size_t> offset(c.parts.size() + 1, 0);
  for (std::size_t s = 0; s < c.parts.size(); ++s) {
    offset[s] = total_len;
    total_len += c.parts[s].realizer.positions.size();
  }
  offset[c.parts.size()] = total_len;

  std::vector<pattern_word> words;
  words.reserve(c.m);
  for (int r = 1; r <= c.m; ++r) {
    std::vector<int> cells(total_len, star);
    for (std::size_t s = 0; s < c.parts.size(); ++s) {
      const auto& d = c.parts[s].realizer;
      for (const auto& arc : d.arcs) {
        if (arc.label != r) continue;
        const auto rank = [&d](int pos) {
          return static_cast<std::size_t>(
              std::lower_bound(d.positions.begin(), d.positions.end(), pos) -
              d.positions.begin());
        };
        cells[offset[s] + rank(arc.tail)] = 2 * static_cast<int>(s) + 1;
        cells[offset[s] + rank(arc.head)] = 2 * static_cast<int>(s) + 2;
      }
    }
    words.emplace_back(std::move(cells));
  }

  family f;
  f.words = std::move(words);
  f.graph = l >= 1 ? matching_graph(l) : natural_graph();
  f.relation = relation_kind::graph_different;
  f.refresh_support();
  return f;
}

namespace {

using nlohmann::json;

}  // namespace

std::string cover_certificate_to_json(const cover_certificate& c) {
  json j;
  j["schema_version"] = 1;
  j["M"] = c.m;
  json parts = json::array();
  for (const auto& part : c.parts) {
    json p;
    json edges = json::array();
    for (const auto& [a, b] : part.graph.edges()) edges.push_back({a, b});
    p["edges"] = edges;
    json dg;
    dg["positions"] = part.realizer.positions;
    json arcs = json::array();
    for (const auto& arc : part.realizer.arcs)
      arcs.push_back({arc.tail, arc.head, arc.label});
    dg["arcs"] = arcs;
    p["digraph"] = dg;
    parts.push_back(std::move(p));
  }
  j["parts"] = std::move(parts);
  return j.dump(2);
}

cover_certificate cover_certificate_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw input_error("certificate is not valid JSON");
  cover_certificate c;
  c.m = j.at("M").get<int>();
  for (const auto& p : j.at("parts")) {
    cover_part part;
    part.realizer.positions = p.at("digraph").at("positions").get<std::vector<int>>();
    std::sort(part.realizer.positions.begin(), part.realizer.positions.end());
    for (const auto& a : p.at("digraph").at("arcs"))
      part.realizer.arcs.push_back(
          {a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()});
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : p.at("edges"))
      edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    std::vector<int> all_words(c.m);
    for (int r = 1; r <= c.m; ++r) all_words[r - 1] = r;
    part.graph = natural_graph::from_edges(edges, all_words);
    c.parts.push_back(std::move(part));
  }
  c.rebuild_coverage();
  return c;
}

void write_cover_certificate_file(const std::string& path, const cover_certificate& c) {
  std::ofstream os(path);
  if (!os) throw input_error("cannot open '" + path + "' for writing");
  os << cover_certificate_to_json(c) << "\n";
}

cover_certificate read_cover_certificate_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw input_error("cannot open certificate file '" + path + "'");
  std::ostringstream buf;
  buf << is.rdbuf();
  return cover_certificate_from_json(buf.str());
}

}  // namespace kappa
