#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef KAPPA_CLI_PATH
#error "KAPPA_CLI_PATH must point at the built binary"
#endif

namespace {

struct run_result {
  int exit_code = -1;
  std::string output;
};

std::string temp_path(const std::string& name) {
  return std::string("cli_tmp_") + name;
}

run_result run(const std::string& args) {
  const std::string out_file = temp_path("stdout.txt");
  const std::string cmd =
      std::string(KAPPA_CLI_PATH) + " " + args + " > " + out_file + " 2>&1";
  const int raw = std::system(cmd.c_str());
  run_result r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream is(out_file);
  std::ostringstream buf;
  buf << is.rdbuf();
  r.output = buf.str();
  return r;
}

std::size_t count_data_lines(const std::string& path) {
  std::ifstream is(path);
  std::string line;
  std::size_t n = 0;
  while (std::getline(is, line))
    if (!line.empty() && line[0] != '#') ++n;
  return n;
}

}  // namespace

TEST_CASE("construct then verify round-trips through files") {
  const std::string fam = temp_path("p4ten.txt");
  const std::string graph = temp_path("p4ten_graph.txt");
  auto c = run("construct p4ten --out " + fam + " --graph-out " + graph);
  CHECK(c.exit_code == 0);
  CHECK(count_data_lines(fam) == 10);

  auto v = run("verify --family " + fam + " --graph " + graph);
  CHECK(v.exit_code == 0);

  auto vc = run("verify --family " + fam + " --mode colliding");
  CHECK(vc.exit_code == 0);
}

TEST_CASE("construct rejects bad parameters with exit 2") {
  CHECK(run("construct star 0").exit_code == 2);
  CHECK(run("construct star").exit_code == 2);
  CHECK(run("construct nosuch 1").exit_code == 2);
  CHECK(run("construct catalan 3 --anchor 2").exit_code == 2);
}

TEST_CASE("construct matching writes 27 words for l=3") {
  const std::string fam = temp_path("matching3.txt");
  CHECK(run("construct matching 3 --out " + fam).exit_code == 0);
  CHECK(count_data_lines(fam) == 27);
}

TEST_CASE("verify exits 1 on an invalid family") {
  const std::string fam = temp_path("dup.txt");
  {
    std::ofstream os(fam);
    os << "1 2 *\n1 2 *\n";
  }
  const std::string graph = temp_path("k2.txt");
  {
    std::ofstream os(graph);
    os << "e 1 2\n";
  }
  auto v = run("verify --family " + fam + " --graph " + graph);
  CHECK(v.exit_code == 1);
  CHECK(v.output.find("no-witness") != std::string::npos);
}

TEST_CASE("solve reports the ten-word optimum as JSON") {
  const std::string fam = temp_path("p4ten2.txt");
  const std::string graph = temp_path("p4ten_graph2.txt");
  REQUIRE(run("construct p4ten --out " + fam + " --graph-out " + graph).exit_code == 0);
  const std::string report = temp_path("solve.json");
  auto s = run("solve --graph " + graph + " --n 5 --out " + report);
  CHECK(s.exit_code == 0);
  std::ifstream is(report);
  nlohmann::json j = nlohmann::json::parse(is);
  CHECK(j["value"] == 10);
  CHECK(j["witness"].size() == 10);
  CHECK(j["certified_optimal"] == true);
  CHECK(j["schema_version"] == 1);
}

TEST_CASE("solve respects the colliding mode") {
  const std::string graph = temp_path("p3.txt");
  {
    std::ofstream os(graph);
    os << "e 1 2\ne 2 3\n";
  }
  auto s = run("solve --graph " + graph + " --n 3 --mode colliding");
  CHECK(s.exit_code == 0);
  CHECK(s.output.find("\"value\": 3") != std::string::npos);
}

TEST_CASE("colliding solves on full permutations use the binomial ceiling") {
  const std::string graph = temp_path("p6.txt");
  {
    std::ofstream os(graph);
    os << "e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\n";
  }
  auto s = run("solve --graph " + graph + " --n 6 --mode colliding");
  CHECK(s.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(s.output);
  CHECK(j["value"] == 20);
  CHECK(j["bound_name"] == "binomial");
  CHECK(j["cap_attained"] == true);
}

TEST_CASE("bounds subcommand emits the closed forms") {
  const std::string graph = temp_path("p4.txt");
  {
    std::ofstream os(graph);
    os << "e 1 2\ne 2 3\ne 3 4\n";
  }
  auto b = run("bounds --graph " + graph + " --rho-n 5 --alpha-ratio-t 4");
  CHECK(b.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(b.output);
  CHECK(j["chromatic_number"] == 2);
  CHECK(j["chromatic_power_upper"] == "16");
  CHECK(j["matching_number"] == 2);
  CHECK(j["decomposition_lower"]["value"] == 9);
  CHECK(j["binomial_upper"] == 10);
  CHECK(j["alpha_ratio"]["vertices"] == 12);
}

TEST_CASE("cover round-trip through certificate files") {
  const std::string fam = temp_path("m2.txt");
  REQUIRE(run("construct matching 2 --out " + fam).exit_code == 0);
  const std::string cert = temp_path("m2_cert.json");
  CHECK(run("cover to-cover --family " + fam + " --out " + cert).exit_code == 0);
  CHECK(run("cover verify --cert " + cert).exit_code == 0);
  const std::string back = temp_path("m2_back.txt");
  CHECK(run("cover from-cover --cert " + cert + " --out " + back).exit_code == 0);
  CHECK(count_data_lines(back) == 9);
  CHECK(run("verify --family " + back).exit_code == 0);
}

TEST_CASE("scan finds the matching class at the top") {
  auto s = run("scan --v 4 --l 2 --n 6");
  CHECK(s.exit_code == 0);
  nlohmann::json j = nlohmann::json::parse(s.output);
  REQUIRE(j["entries"].size() == 2);
  CHECK(j["max_value"] >= 9);
  CHECK(j["min_value"] == 5);
}

TEST_CASE("construct --shift relabels for product use") {
  const std::string a = temp_path("sa.txt");
  const std::string b = temp_path("sb.txt");
  const std::string prod = temp_path("sprod.txt");
  REQUIRE(run("construct star 1 --out " + a).exit_code == 0);
  REQUIRE(run("construct star 1 --shift 2 --out " + b).exit_code == 0);
  CHECK(run("construct product --family " + a + " --family " + b + " --out " + prod)
            .exit_code == 0);
  CHECK(count_data_lines(prod) == 9);
  CHECK(run("verify --family " + prod).exit_code == 0);
}

TEST_CASE("reproduce prints the full PASS table") {
  auto r = run("reproduce");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("ALL PASS") != std::string::npos);
  CHECK(r.output.find("FAIL") == std::string::npos);
  CHECK(r.output.find("rho(6) = 20") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("").exit_code == 2);
  CHECK(run("solve --graph missing.txt --n 3").exit_code == 2);
  CHECK(run("frobnicate").exit_code == 2);
}
