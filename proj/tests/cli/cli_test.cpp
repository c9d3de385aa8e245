#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <string>

#include "doctest.h"
#include <nlohmann/json.hpp>

#include "acdkit/acd.hpp"
#include "acdkit/conditions_io.hpp"
#include "acdkit/gen.hpp"
#include "acdkit/hoa.hpp"
#include "acdkit/horn.hpp"
#include "acdkit/zielonka.hpp"
#include "acdkit/zielonka_io.hpp"

using namespace acdkit;
using nlohmann::json;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

/// Runs the CLI with `args`, capturing stdout (and stderr when `merge`).
Run cli(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(ACDKIT_CLI) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run r;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(ACDKIT_FIXTURES) + "/" + name; }

Automaton load_fixture(const std::string& stem) {
  return parse_hoa(read_text_file(fixture(stem + ".hoa")),
                   parse_json_text(read_text_file(fixture(stem + ".family.json"))));
}

}  // namespace

TEST_CASE("acd build --dag reports the five-node ACD-DAG of the one-state example") {
  Run r = cli("acd build --dag " + fixture("one_state_example.hoa"));
  REQUIRE(r.status == 0);
  json report = json::parse(r.out);
  CHECK(report["command"] == "acd build --dag");
  CHECK(report["results"]["size"] == 5);
  Automaton a = load_fixture("one_state_example");
  CHECK(report["results"] == acd_dag_to_json(compute_acd_dag(a), a.graph()));
  CHECK(report["input"]["fnv1a64"].get<std::string>().size() == 16);
}

TEST_CASE("acd build defaults to the tree form") {
  Run r = cli("acd build " + fixture("one_state_example.hoa"));
  REQUIRE(r.status == 0);
  Automaton a = load_fixture("one_state_example");
  CHECK(json::parse(r.out)["results"] == acd_to_json(compute_acd(a), a.graph()));
}

TEST_CASE("parity-index of the chromatic automaton of K3 is 2") {
  Run r = cli("parity-index " + fixture("aut_chrom_k3.hoa"));
  REQUIRE(r.status == 0);
  json res = json::parse(r.out)["results"];
  CHECK(res["index"] == 2);
  CHECK(res["index"] == parity_index(load_fixture("aut_chrom_k3")).index);
}

TEST_CASE("zt validate rejects a round child of a round root") {
  Run r = cli("zt validate " + fixture("broken_tree.json"), true);
  CHECK(r.status == 1);
  json err = json::parse(r.out);
  CHECK(err["error"] == "tree-validation");
  CHECK(err["violation"] == "alternation");
  CHECK(err["nodes"] == json::array({0, 1}));
}

TEST_CASE("zt validate accepts a built tree and returns its family") {
  const std::filesystem::path tmp = std::filesystem::temp_directory_path() / "acdkit_cli_tree.json";
  Run built = cli("zt build " + fixture("example_family.json"));
  REQUIRE(built.status == 0);
  {
    FILE* f = std::fopen(tmp.c_str(), "w");
    REQUIRE(f != nullptr);
    const std::string tree = json::parse(built.out)["results"]["tree"].dump();
    std::fwrite(tree.data(), 1, tree.size(), f);
    std::fclose(f);
  }
  Run r = cli("zt validate " + tmp.string());
  std::filesystem::remove(tmp);
  REQUIRE(r.status == 0);
  MullerFamily f = family_from_json(parse_json_text(read_text_file(fixture("example_family.json"))));
  CHECK(family_from_json(json::parse(r.out)["results"]["family"]) == f);
}

TEST_CASE("min-colours and zdag build match the library") {
  MullerFamily f = family_from_json(parse_json_text(read_text_file(fixture("example_family.json"))));
  Run r = cli("min-colours --language " + fixture("example_family.json"));
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["results"]["k"] == minimise_colours(build_zdag(f)).k());
  Run d = cli("zdag build " + fixture("example_family.json"));
  REQUIRE(d.status == 0);
  CHECK(json::parse(d.out)["results"]["dag"] == zdag_to_json(build_zdag(f)));
}

TEST_CASE("gh min matches minimise_gh_clauses") {
  Run r = cli("gh min " + fixture("redundant.gh"));
  REQUIRE(r.status == 0);
  GHFormula phi = parse_gh(read_text_file(fixture("redundant.gh")));
  json res = json::parse(r.out)["results"];
  CHECK(res["formula"] == write_gh(minimise_gh_clauses(phi)));
  CHECK(res["clauses"] == 2);
}

TEST_CASE("generated fixtures match the generators") {
  UndirectedGraph k3 = UndirectedGraph::parse(read_text_file(fixture("k3.graph")));
  Run r = cli("gen aut-chrom " + fixture("k3.graph"));
  REQUIRE(r.status == 0);
  json j = json::parse(r.out);
  Automaton a = aut_chrom(k3);
  CHECK(j["hoa"] == write_hoa(a));
  CHECK(j["hoa"] == read_text_file(fixture("aut_chrom_k3.hoa")));
  CHECK(j["sidecar"] == *hoa_sidecar(a));
  CHECK(load_fixture("aut_chrom_k3") == a);
}

TEST_CASE("check cross-validates the fixtures") {
  for (const char* stem : {"one_state_example", "aut_chrom_k3"}) {
    Run r = cli(std::string("check ") + fixture(std::string(stem) + ".hoa"));
    REQUIRE(r.status == 0);
    CHECK(json::parse(r.out)["results"]["all_agree"] == true);
  }
}

TEST_CASE("exit codes") {
  CHECK(cli("").status == 2);
  CHECK(cli("acd build --dag --tree " + fixture("one_state_example.hoa")).status == 2);
  CHECK(cli("acd build " + fixture("redundant.gh")).status == 2);
  CHECK(cli("gen even-letters 9").status == 1);
  CHECK(cli("min-rabin --language " + fixture("example_family.json")).status == 1);
  CHECK(cli("--help").status == 0);
}
