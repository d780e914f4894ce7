// Command-line front end: construct | verify | solve | bounds | cover | scan
// | reproduce. Exit codes: 0 success/valid, 1 semantic failure, 2 bad input.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kappa/bounds.hpp"
#include "kappa/constructions.hpp"
#include "kappa/covering.hpp"
#include "kappa/errors.hpp"
#include "kappa/relations.hpp"
#include "kappa/solver.hpp"
#include "kappa/text_io.hpp"

namespace {

using nlohmann::json;
using namespace kappa;

constexpr int exit_ok = 0;
constexpr int exit_semantic = 1;
constexpr int exit_input = 2;

json graph_json(const natural_graph& g) {
  json j;
  j["vertices"] = g.vertices();
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  j["edges"] = edges;
  return j;
}

json solve_json(const solve_result& r, int threads) {
  json j;
  j["schema_version"] = 1;
  j["graph"] = graph_json(r.graph);
  j["n"] = r.n;
  j["mode"] = to_string(r.mode);
  j["value"] = r.value;
  json witness = json::array();
  for (const auto& w : r.witness.words) witness.push_back(w.to_string());
  j["witness"] = witness;
  j["nodes"] = r.nodes;
  j["bound_name"] = r.bound_name;
  j["bound_used"] = r.bound_value;
  j["elapsed_ms"] = r.elapsed_ms;
  j["certified_optimal"] = r.certified_optimal;
  j["cap_attained"] = r.cap_attained;
  j["kappa_certified"] = r.kappa_certified;
  j["symmetry_fixed_root"] = r.symmetry_fixed_root;
  j["threads"] = threads;
  return j;
}

void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream os(out_path);
    if (!os) throw input_error("cannot open '" + out_path + "' for writing");
    os << j.dump(2) << "\n";
  }
}

std::vector<int> parse_symbol_list(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> out;
  int v;
  while (is >> v) out.push_back(v);
  if (out.empty()) throw input_error("empty symbol list '" + text + "'");
  return out;
}

int effective_threads(int flag_threads) {
  if (const char* env = std::getenv("KAPPA_THREADS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      throw input_error("KAPPA_THREADS is not an integer");
    }
  }
  return std::max(1, flag_threads);
}

// ---------------------------------------------------------------- construct

struct construct_options {
  std::string name;
  std::vector<long long> params;
  std::string out;
  std::string graph_out;
  int anchor = 0;
  int shift = 0;
  std::vector<std::string> families;
  std::vector<int> edge;
  std::vector<int> to;
};

long long require_param(const construct_options& opt, std::size_t index,
                        const std::string& what) {
  if (opt.params.size() <= index)
    throw input_error("construct " + opt.name + ": missing parameter <" + what + ">");
  return opt.params[index];
}

int run_construct(const construct_options& opt) {
  family f;
  std::optional<int> anchor_used;
  if (opt.name == "star") {
    f = construct_star(static_cast<int>(require_param(opt, 0, "r")));
  } else if (opt.name == "matching") {
    f = construct_matching(static_cast<int>(require_param(opt, 0, "l")));
  } else if (opt.name == "complete") {
    f = construct_complete(static_cast<int>(require_param(opt, 0, "n")));
  } else if (opt.name == "p4ten") {
    f = construct_p4_ten();
  } else if (opt.name == "catalan") {
    const int n = static_cast<int>(require_param(opt, 0, "n"));
    const int anchor = opt.anchor > 0 ? opt.anchor : catalan_min_anchor(n);
    f = catalan_construction(n, anchor);
    anchor_used = anchor;
  } else if (opt.name == "rho-recursion") {
    f = rho_recursion_build(static_cast<int>(require_param(opt, 0, "n")));
  } else if (opt.name == "parity-double") {
    if (opt.families.size() != 1)
      throw input_error("construct parity-double: exactly one --family input required");
    const int n = static_cast<int>(require_param(opt, 0, "n"));
    f = parity_double(read_family_file(opt.families[0]), n);
  } else if (opt.name == "product") {
    if (opt.families.size() < 2)
      throw input_error("construct product: at least two --family inputs required");
    std::vector<family> fs;
    for (const auto& path : opt.families) fs.push_back(read_family_file(path));
    f = product_construction(fs);
  } else if (opt.name == "edge-split") {
    if (opt.families.size() != 1)
      throw input_error("construct edge-split: exactly one --family input required");
    if (opt.edge.size() != 2 || opt.to.size() != 2)
      throw input_error("construct edge-split: --edge A B and --to C D required");
    f = edge_split_transform(read_family_file(opt.families[0]), {opt.edge[0], opt.edge[1]},
                             opt.to[0], opt.to[1]);
  } else {
    throw input_error("unknown construction '" + opt.name + "'");
  }

  if (opt.shift != 0) f = shift_family(f, opt.shift);
  if (opt.out.empty())
    write_family(std::cout, f, anchor_used);
  else
    write_family_file(opt.out, f, anchor_used);
  if (!opt.graph_out.empty()) write_graph_file(opt.graph_out, f.graph);
  return exit_ok;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& family_path, const std::string& graph_path,
               const std::string& mode, const std::string& fixed_order) {
  family f = read_family_file(family_path);
  if (!graph_path.empty()) f.graph = read_graph_file(graph_path);
  if (!mode.empty()) f.relation = relation_from_string(mode);
  if (!fixed_order.empty()) f.order_constraint = parse_symbol_list(fixed_order);
  if (f.relation == relation_kind::graph_different && f.graph.vertices().empty())
    throw input_error("verify: no graph given (use --graph or a family file with metadata)");

  const auto report = verify_family(f);
  for (const auto& viol : report.violations)
    std::cout << "word_" << viol.i << " word_" << viol.j << " no-witness\n";
  for (auto idx : report.order_violations)
    std::cout << "word_" << idx << " order-violation\n";
  if (report.valid()) {
    std::cout << "valid: " << f.words.size() << " words, relation "
              << to_string(f.relation) << "\n";
    return exit_ok;
  }
  return exit_semantic;
}

// -------------------------------------------------------------------- solve

int run_solve(const std::string& graph_path, int n, const std::string& mode,
              const std::string& fixed_order, int n_sweep, int threads,
              const std::string& out, std::size_t max_vertices) {
  const natural_graph g = read_graph_file(graph_path);
  const relation_kind rel = mode.empty() ? relation_kind::graph_different
                                         : relation_from_string(mode);
  std::optional<std::vector<int>> constraint;
  if (!fixed_order.empty()) constraint = parse_symbol_list(fixed_order);

  auto solve_one = [&](int positions) {
    conflict_graph cg = build_conflict_graph(g, positions, rel, constraint, max_vertices);
    std::optional<unsigned long long> cap;
    std::string cap_name = "none";
    bool certifies_kappa = false;
    if (rel == relation_kind::graph_different && !constraint) {
      unsigned long long c = solver_upper_cap(g);
      cap_name = "chi_power";
      if (auto se = star_exact(g); se && static_cast<unsigned long long>(*se) < c) {
        c = static_cast<unsigned long long>(*se);
        cap_name = "star";
      }
      cap = c;
      certifies_kappa = true;
    } else if (rel == relation_kind::colliding && !cg.placed_symbols.empty() &&
               static_cast<int>(cg.placed_symbols.size()) == positions &&
               cg.placed_symbols.back() - cg.placed_symbols.front() + 1 == positions) {
      // Full permutations of a consecutive symbol range: the colliding
      // ceiling binom(n, n/2) applies.
      cap = binomial_upper(positions);
      cap_name = "binomial";
    }
    solve_result r = max_clique_solve(cg, cap, threads);
    if (cap) {
      r.bound_name = cap_name;
      r.bound_value = *cap;
      r.kappa_certified = certifies_kappa && r.cap_attained;
    }
    return r;
  };

  if (n_sweep > 0) {
    json arr = json::array();
    for (int positions = n; positions <= n_sweep; ++positions)
      arr.push_back(solve_json(solve_one(positions), threads));
    json j;
    j["schema_version"] = 1;
    j["sweep"] = arr;
    emit(j, out);
    return exit_ok;
  }
  emit(solve_json(solve_one(n), threads), out);
  return exit_ok;
}

// ------------------------------------------------------------------- bounds

int run_bounds(const std::string& graph_path, int rho_n, int alpha_t,
               const std::string& out) {
  json j;
  j["schema_version"] = 1;
  if (!graph_path.empty()) {
    const natural_graph g = read_graph_file(graph_path);
    const bound_report r = compute_bounds(g, rho_n > 0 ? std::optional<int>(rho_n)
                                                       : std::nullopt);
    j["graph"] = graph_json(g);
    j["chromatic_number"] = r.chromatic;
    j["chromatic_power_upper"] = u128_to_string(r.chromatic_power);
    j["matching_number"] = r.matching;
    json dec;
    dec["value"] = r.decomposition.value;
    dec["product_value"] = r.decomposition.product_value;
    dec["matching_value"] = r.decomposition.matching_value;
    json m = json::array();
    for (const auto& [a, b] : r.decomposition.matching) m.push_back({a, b});
    dec["matching"] = m;
    json stars = json::array();
    for (const auto& s : r.decomposition.stars) {
      json sp;
      sp["center"] = s.center;
      sp["leaves"] = s.leaves;
      stars.push_back(std::move(sp));
    }
    dec["stars"] = stars;
    dec["product_length"] = r.decomposition.product_length();
    dec["matching_length"] = r.decomposition.matching_length();
    j["decomposition_lower"] = dec;
    if (r.star)
      j["star_exact"] = *r.star;
    else
      j["star_exact"] = nullptr;
    if (r.binomial_rho) j["binomial_upper"] = *r.binomial_rho;
  } else if (rho_n > 0) {
    j["binomial_upper"] = binomial_upper(rho_n);
  }
  if (alpha_t > 0) {
    const auto ar = line_graph_alpha_ratio(alpha_t);
    json a;
    a["t"] = ar.t;
    a["vertices"] = ar.vertex_count;
    a["alpha"] = ar.alpha;
    a["ratio"] = {ar.ratio_num, ar.ratio_den};
    j["alpha_ratio"] = a;
  }
  if (graph_path.empty() && rho_n <= 0 && alpha_t <= 0)
    throw input_error("bounds: nothing to compute (give --graph, --rho-n or --alpha-ratio-t)");
  emit(j, out);
  return exit_ok;
}

// -------------------------------------------------------------------- cover

int run_cover_to(const std::string& family_path, const std::string& out) {
  const family f = read_family_file(family_path);
  const cover_certificate cert = perms_to_covering(f);
  if (out.empty())
    std::cout << cover_certificate_to_json(cert) << "\n";
  else
    write_cover_certificate_file(out, cert);
  return exit_ok;
}

int run_cover_from(const std::string& cert_path, const std::string& out) {
  const cover_certificate cert = read_cover_certificate_file(cert_path);
  const family f = covering_to_perms(cert);
  if (out.empty())
    write_family(std::cout, f);
  else
    write_family_file(out, f);
  return exit_ok;
}

int run_cover_verify(const std::string& cert_path) {
  const cover_certificate cert = read_cover_certificate_file(cert_path);
  const auto v = verify_cover(cert);
  for (const auto& msg : v.failures) std::cout << "invalid: " << msg << "\n";
  if (v.ok) {
    std::cout << "valid: M=" << cert.m << ", " << cert.parts.size() << " part(s)\n";
    return exit_ok;
  }
  return exit_semantic;
}

// --------------------------------------------------------------------- scan

int run_scan(int v, int l, int n, int threads, const std::string& out,
             std::size_t max_vertices) {
  const scan_report report = extremal_scan(v, l, n, threads, max_vertices);
  json j;
  j["schema_version"] = 1;
  j["v"] = report.v;
  j["l"] = report.l;
  j["n"] = report.n;
  json entries = json::array();
  for (const auto& e : report.entries) {
    json entry;
    entry["graph"] = graph_json(e.graph);
    entry["value"] = e.result.value;
    entry["bound_name"] = e.result.bound_name;
    entries.push_back(std::move(entry));
  }
  j["entries"] = entries;
  j["max_value"] = report.max_value;
  j["min_value"] = report.min_value;
  j["argmax"] = report.argmax;
  j["argmin"] = report.argmin;
  emit(j, out);
  return exit_ok;
}

// ---------------------------------------------------------------- reproduce

struct reproduce_state {
  int failures = 0;

  void row(const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
    if (!pass) ++failures;
  }
};

int run_reproduce(int threads) {
  reproduce_state st;

  {
    const auto r = kappa::kappa(construct_p4_ten().graph, 5, threads);
    st.row("kappa(P4+K1,5) = 10", r.value == 10, "got " + std::to_string(r.value));
  }
  for (int rr = 1; rr <= 3; ++rr) {
    const auto r = kappa::kappa(star_graph(rr), 2 * rr + 1, threads);
    st.row("kappa(K_{1," + std::to_string(rr) + "}," + std::to_string(2 * rr + 1) +
               ") = " + std::to_string(2 * rr + 1),
           r.value == 2 * rr + 1, "got " + std::to_string(r.value));
  }
  {
    const auto sweep = kappa_sweep(star_graph(2), 7, threads);
    long long worst = 0;
    for (const auto& r : sweep) worst = std::max(worst, r.value);
    st.row("kappa_sweep(K_{1,2},7) <= 5", worst <= 5, "max " + std::to_string(worst));
  }
  {
    const family f = construct_matching(6);
    const bool ok = f.words.size() == 729 && verify_family(f).valid();
    st.row("matching(6): 729 valid words", ok, std::to_string(f.words.size()) + " words");
  }
  {
    const family f = construct_complete(4);
    const bool ok = f.words.size() == 60 && verify_family(f).valid();
    st.row("complete(4): 60 valid words", ok, std::to_string(f.words.size()) + " words");
  }
  {
    const long long expected[] = {1, 2, 5, 14, 42, 132};
    bool ok = true;
    std::string detail;
    for (int n = 1; n <= 6; ++n) {
      const family f = catalan_construction(n);
      const bool good = static_cast<long long>(f.words.size()) == expected[n - 1] &&
                        verify_family(f).valid();
      if (!good) ok = false;
      detail += (n > 1 ? "," : "") + std::to_string(f.words.size());
    }
    st.row("catalan sizes 1..6 = 1,2,5,14,42,132 (order-checked)", ok, detail);
  }
  {
    const long long expected[] = {1, 2, 3, 6, 10, 20};
    for (int n = 1; n <= 6; ++n) {
      const auto r = rho(n, threads);
      const bool ok = r.value == expected[n - 1] &&
                      static_cast<unsigned long long>(r.value) <= binomial_upper(n);
      st.row("rho(" + std::to_string(n) + ") = " + std::to_string(expected[n - 1]), ok,
             "got " + std::to_string(r.value) + ", bound " +
                 std::to_string(binomial_upper(n)));
    }
  }
  {
    const family f = rho_recursion_build(9);
    const bool ok = f.words.size() == 100 && verify_family(f).valid();
    st.row("rho_recursion_build(9): 100 colliding words", ok,
           std::to_string(f.words.size()) + " words");
  }
  {
    const family f = construct_matching(2);
    const auto cert = perms_to_covering(f);
    const auto check = verify_cover(cert);
    const family back = covering_to_perms(cert);
    const bool ok = cert.parts.size() == 2 && check.ok && back.words.size() == 9 &&
                    verify_family(back).valid();
    st.row("cover round-trip on matching(2)", ok,
           std::to_string(cert.parts.size()) + " parts, " +
               std::to_string(back.words.size()) + " words back");
  }
  for (int t = 3; t <= 5; ++t) {
    const auto ar = line_graph_alpha_ratio(t);
    const bool ok = ar.ratio_num <= 4 * ar.ratio_den &&
                    ar.alpha >= (t / 2) * ((t + 1) / 2);
    st.row("alpha-ratio t=" + std::to_string(t) + " <= 4", ok,
           "alpha=" + std::to_string(ar.alpha) + ", ratio=" +
               std::to_string(ar.ratio_num) + "/" + std::to_string(ar.ratio_den));
  }
  {
    const auto report = extremal_scan(4, 2, 6, threads);
    long long matching_value = -1;
    bool matching_is_max = false;
    for (std::size_t i = 0; i < report.entries.size(); ++i) {
      if (matching_number(report.entries[i].graph) == 2) {
        matching_value = report.entries[i].result.value;
        matching_is_max = std::find(report.argmax.begin(), report.argmax.end(), i) !=
                          report.argmax.end();
      }
    }
    const bool ok = matching_is_max && matching_value >= 9 && matching_value <= 16;
    st.row("extremal_scan(4,2,6): 2K2 attains the max, value in [9,16]", ok,
           "kappa(2K2,6)=" + std::to_string(matching_value));
  }

  std::cout << (st.failures == 0 ? "ALL PASS" : std::to_string(st.failures) + " FAILURES")
            << "\n";
  return st.failures == 0 ? exit_ok : exit_semantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact search and constructions for graph-different permutation families"};
  app.require_subcommand(1);

  // construct
  construct_options copt;
  auto* construct = app.add_subcommand("construct", "emit a permutation family");
  construct->add_option("name", copt.name,
                        "star|matching|complete|p4ten|catalan|rho-recursion|"
                        "parity-double|product|edge-split")
      ->required();
  construct->add_option("params", copt.params, "integer parameters");
  construct->add_option("--out", copt.out, "family file (stdout if omitted)");
  construct->add_option("--graph-out", copt.graph_out, "also write the target graph");
  construct->add_option("--anchor", copt.anchor, "catalan anchor position");
  construct->add_option("--shift", copt.shift, "add this offset to every symbol");
  construct->add_option("--family", copt.families, "input family file(s)");
  construct->add_option("--edge", copt.edge, "edge to split: A B")->expected(2);
  construct->add_option("--to", copt.to, "replacement edge: C D")->expected(2);

  // verify
  std::string v_family, v_graph, v_mode, v_fixed;
  auto* verify = app.add_subcommand("verify", "check a family against a graph and relation");
  verify->add_option("--family", v_family)->required();
  verify->add_option("--graph", v_graph, "graph file (defaults to family metadata)");
  verify->add_option("--mode", v_mode, "different|colliding");
  verify->add_option("--fixed-order", v_fixed, "symbols that must appear in natural order");

  // solve
  std::string s_graph, s_mode, s_fixed, s_out;
  int s_n = 0, s_sweep = 0, s_threads = 1;
  std::size_t s_maxv = 20000;
  auto* solve = app.add_subcommand("solve", "exact kappa via maximum clique");
  solve->add_option("--graph", s_graph)->required();
  solve->add_option("--n", s_n, "number of positions")->required();
  solve->add_option("--mode", s_mode, "different|colliding (default different)");
  solve->add_option("--fixed-order", s_fixed, "symbols that must appear in natural order");
  solve->add_option("--n-sweep", s_sweep, "solve for every n up to this bound");
  solve->add_option("--threads", s_threads, "worker count (KAPPA_THREADS overrides)");
  solve->add_option("--out", s_out, "JSON report path (stdout if omitted)");
  solve->add_option("--max-vertices", s_maxv, "conflict graph size limit");

  // bounds
  std::string b_graph, b_out;
  int b_rho = 0, b_alpha = 0;
  auto* bounds = app.add_subcommand("bounds", "closed-form bounds for a graph");
  bounds->add_option("--graph", b_graph);
  bounds->add_option("--rho-n", b_rho, "also report binom(n, n/2)");
  bounds->add_option("--alpha-ratio-t", b_alpha, "independence ratio of L(K-hat_t)");
  bounds->add_option("--out", b_out);

  // cover
  auto* cover = app.add_subcommand("cover", "line-graph covering equivalence");
  cover->require_subcommand(1);
  std::string c_family, c_cert, c_out;
  auto* to_cover = cover->add_subcommand("to-cover", "family -> certificate");
  to_cover->add_option("--family", c_family)->required();
  to_cover->add_option("--out", c_out);
  auto* from_cover = cover->add_subcommand("from-cover", "certificate -> family");
  from_cover->add_option("--cert", c_cert)->required();
  from_cover->add_option("--out", c_out);
  auto* cover_verify = cover->add_subcommand("verify", "check a certificate");
  cover_verify->add_option("--cert", c_cert)->required();

  // scan
  int sc_v = 0, sc_l = 0, sc_n = 0, sc_threads = 1;
  std::string sc_out;
  std::size_t sc_maxv = 20000;
  auto* scan = app.add_subcommand("scan", "kappa over all isomorphism classes");
  scan->add_option("--v", sc_v, "vertex count (<= 7)")->required();
  scan->add_option("--l", sc_l, "edge count")->required();
  scan->add_option("--n", sc_n, "positions for kappa")->required();
  scan->add_option("--threads", sc_threads);
  scan->add_option("--out", sc_out);
  scan->add_option("--max-vertices", sc_maxv);

  // reproduce
  int r_threads = 1;
  auto* reproduce = app.add_subcommand("reproduce", "run the desk-scale value table");
  reproduce->add_option("--threads", r_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (*construct) return run_construct(copt);
    if (*verify) return run_verify(v_family, v_graph, v_mode, v_fixed);
    if (*solve)
      return run_solve(s_graph, s_n, s_mode, s_fixed, s_sweep,
                       effective_threads(s_threads), s_out, s_maxv);
    if (*bounds) return run_bounds(b_graph, b_rho, b_alpha, b_out);
    if (*cover) {
      if (*to_cover) return run_cover_to(c_family, c_out);
      if (*from_cover) return run_cover_from(c_cert, c_out);
      if (*cover_verify) return run_cover_verify(c_cert);
    }
    if (*scan)
      return run_scan(sc_v, sc_l, sc_n, effective_threads(sc_threads), sc_out, sc_maxv);
    if (*reproduce) return run_reproduce(effective_threads(r_threads));
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}
