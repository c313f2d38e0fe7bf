#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "icol/corpus.hpp"
#include "icol/generators.hpp"

using namespace icol;

namespace {

struct CliRun {
  int exit_code;
  std::string out;
};

// runs the installed binary, captures stdout and the exit status
CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(ICOL_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf;
  CliRun result{-1, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    result.out.append(buf.data(), got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp(const std::string& name, const std::string& bytes) {
  std::string path = "/tmp/icol_test_" + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << bytes;
  return path;
}

const char* kC5 = "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n";
const char* kTree = "5 4\n0 1\n1 2\n1 3\n3 4\n";

}  // namespace

TEST_CASE("graph json round trip") {
  Graph g = load_graph_string("4 3\n0 1\n1 2\n2 3\n");
  Json j = graph_to_json(g);
  CHECK(j.dump() == R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})");
  Graph back = graph_from_json(j);
  CHECK(save_graph(back) == save_graph(g));
  CHECK_THROWS_AS(graph_from_json(Json::object()), std::invalid_argument);
}

TEST_CASE("colouring json round trip") {
  EdgeColouring c{{3, 1, 2}};
  Json j = colouring_to_json(c);
  CHECK(j.dump() == R"({"colours":[3,1,2]})");
  CHECK(colouring_from_json(j).colour == c.colour);
  CHECK_THROWS_AS(colouring_from_json(Json::array()), std::invalid_argument);
}

TEST_CASE("certificate json round trip") {
  NonColourabilityCertificate cert;
  cert.U = {2, 5, 7};
  cert.d = 9;
  cert.u = 0;
  cert.paths = {{2, 3, 5}, {2, 0, 7}, {5, 6, 7}};
  Json j = certificate_to_json(cert);
  CHECK(j.dump() ==
        R"({"U":[2,5,7],"d":9,"u":0,"paths":[[2,3,5],[2,0,7],[5,6,7]]})");
  NonColourabilityCertificate back = certificate_from_json(j);
  CHECK(back.U == cert.U);
  CHECK(back.d == cert.d);
  CHECK(back.u == cert.u);
  CHECK(back.paths == cert.paths);
}

TEST_CASE("solve result json") {
  SolveResult r;
  r.status = SolveStatus::colourable_with_witness;
  r.witness = EdgeColouring{{1, 2}};
  r.nodes_explored = 17;
  CHECK(solve_result_to_json(r).dump() ==
        R"({"status":"colourable-with-witness","witness":{"colours":[1,2]},"nodes":17})");
  SolveResult none;
  none.status = SolveStatus::not_colourable;
  none.nodes_explored = 4;
  CHECK(solve_result_to_json(none).dump() ==
        R"({"status":"not-colourable","witness":null,"nodes":4})");
}

TEST_CASE("decomposition and thickness json") {
  Graph c4 = load_graph_string("4 4\n0 1\n1 2\n2 3\n3 0\n");
  Decomposition dec = decompose_pipeline(c4);
  Json j = decomposition_to_json(dec);
  REQUIRE(j.contains("parts"));
  for (const Json& part : j.at("parts")) {
    CHECK(part.contains("edges"));
    CHECK(part.contains("kind"));
    CHECK(part.contains("r"));
    CHECK(part.contains("colours"));
  }
  ThicknessResult th = theta_upper(c4);
  Json tj = thickness_to_json(th);
  CHECK(tj.contains("theta"));
  CHECK(tj.contains("exact"));
  CHECK(tj.at("exact") == false);
}

TEST_CASE("fingerprints are frozen") {
  CHECK(fingerprint_bytes("") == "fnv1a:cbf29ce484222325");
  CHECK(fingerprint_bytes("a") == "fnv1a:af63dc4c8601ec8c");
  CHECK(fingerprint_bytes("3 3\n0 1\n1 2\n2 0\n") ==
        "fnv1a:8ac0758730ed5889");
}

TEST_CASE("cli solve exit codes and report shape") {
  std::string c5 = write_temp("c5.txt", kC5);
  std::string tree = write_temp("tree.txt", kTree);

  CliRun odd = run_cli("solve " + c5);
  CHECK(odd.exit_code == 1);
  Json report = Json::parse(odd.out);  // stdout must be valid JSON
  CHECK(report.at("command") == "solve");
  CHECK(report.at("input") == "fnv1a:7b57c710a7ed865d");
  CHECK(report.at("seed") == 0);
  CHECK(report.at("results").at("status") == "not-colourable");

  CliRun ok = run_cli("solve " + tree);
  CHECK(ok.exit_code == 0);
  Json tree_report = Json::parse(ok.out);
  CHECK(tree_report.at("results").at("status") == "colourable-with-witness");
  CHECK(tree_report.at("results").at("witness").is_object());

  std::string bad = write_temp("bad.txt", "not a graph\n");
  CHECK(run_cli("solve " + bad).exit_code == 3);
  CHECK(run_cli("solve /tmp/icol_no_such_file_42").exit_code == 3);
  CHECK(run_cli("solve").exit_code == 4);
  CHECK(run_cli("nonsense-subcommand").exit_code == 4);
  CHECK(run_cli("solve " + tree + " --alpha 1/2").exit_code == 4);
}

TEST_CASE("cli reports are bit-stable across runs") {
  std::string tree = write_temp("tree.txt", kTree);
  Json a = Json::parse(run_cli("solve " + tree).out);
  Json b = Json::parse(run_cli("solve " + tree).out);
  CHECK(a.at("results") == b.at("results"));
  CHECK(a.at("input") == b.at("input"));

  Json t1 = Json::parse(run_cli("tmax " + tree).out);
  Json t2 = Json::parse(run_cli("tmax " + tree).out);
  CHECK(t1.at("results") == t2.at("results"));
  CHECK(t1.at("results").at("t") == 4);
}

TEST_CASE("cli theta and decompose") {
  std::string c3 = write_temp("c3.txt", "3 3\n0 1\n1 2\n2 0\n");
  CliRun exact = run_cli("theta " + c3 + " --exact --kmax 3");
  CHECK(exact.exit_code == 0);
  Json j = Json::parse(exact.out);
  CHECK(j.at("results").at("thickness").at("theta") == 2);
  CHECK(j.at("results").at("thickness").at("exact") == true);

  std::string k44 = write_temp(
      "k44.txt", save_graph(gen_standard(Family::complete_bipartite,
                                         {0, 4, 4, 0, 0})));
  CliRun dec = run_cli("decompose " + k44);
  CHECK(dec.exit_code == 0);
  Json dj = Json::parse(dec.out);
  REQUIRE(dj.at("results").at("parts").size() == 1);
  CHECK(dj.at("results").at("parts")[0].at("kind") == "regular-bipartite");
  CHECK(dj.at("results").at("parts")[0].at("r") == 4);
}

TEST_CASE("cli certificate search") {
  std::string c5 = write_temp("c5.txt", kC5);
  CliRun none = run_cli("certificate " + c5 + " --effort exhaustive");
  CHECK(none.exit_code == 1);
  CHECK(Json::parse(none.out).at("results").at("found") == false);
  CHECK(run_cli("certificate " + c5 + " --effort bogus").exit_code == 4);
}

TEST_CASE("cli generate writes files that load back") {
  CliRun gen = run_cli(
      "generate --family extremal --s 5 --blue all --out "
      "/tmp/icol_test_gen.txt --colours-out /tmp/icol_test_gen_colours.json");
  CHECK(gen.exit_code == 0);
  Json j = Json::parse(gen.out);
  CHECK(j.at("results").at("n") == 10);
  Graph g = load_graph_file("/tmp/icol_test_gen.txt");
  CHECK(g.vertex_count() == 10);
  // the sidecar colouring must verify against the emitted graph
  CliRun chk = run_cli(
      "check /tmp/icol_test_gen.txt --colouring "
      "/tmp/icol_test_gen_colours.json");
  CHECK(chk.exit_code == 0);
  CHECK(Json::parse(chk.out).at("results").at("valid") == true);

  // an invalid colouring is exit 1, not an error
  std::string bad_colours = write_temp("bad_colours.json",
                                       R"({"colours":[1,1,1,1]})");
  std::string c4 = write_temp("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  CliRun invalid = run_cli("check " + c4 + " --colouring " + bad_colours);
  CHECK(invalid.exit_code == 1);
  CHECK(Json::parse(invalid.out).at("results").at("valid") == false);
}

TEST_CASE("cli bounds") {
  std::string c4 = write_temp("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  CliRun rep = run_cli("bounds " + c4 + " --t 3");
  CHECK(rep.exit_code == 0);
  Json j = Json::parse(rep.out);
  CHECK(j.at("results").at("t") == 3);
  CHECK(j.at("results").at("all_satisfied") == true);
  CHECK(run_cli("bounds " + c4 + " --t 99").exit_code == 1);
  // without --t the tool computes t itself
  Json computed = Json::parse(run_cli("bounds " + c4).out);
  CHECK(computed.at("results").at("t") == 3);
}

TEST_CASE("cli corpus") {
  std::string good = write_temp(
      "manifest_good.json",
      R"({"checks":[{"name":"small-graphs","max_n":4}]})");
  CliRun pass = run_cli("corpus " + good);
  CHECK(pass.exit_code == 0);
  CHECK(Json::parse(pass.out).at("results").at("all_pass") == true);

  std::string bad = write_temp(
      "manifest_bad.json", R"({"checks":[{"name":"no-such-check"}]})");
  CHECK(run_cli("corpus " + bad).exit_code == 1);
}

TEST_CASE("run_corpus handles empty manifests") {
  CorpusReport empty = run_corpus(Json::parse(R"({"checks":[]})"));
  CHECK(empty.all_pass);
  CHECK(empty.checks.empty());
  CorpusReport none = run_corpus(Json::object());
  CHECK(none.all_pass);
}

TEST_CASE("cli pretty output is not json but still succeeds") {
  std::string tree = write_temp("tree.txt", kTree);
  CliRun pretty = run_cli("solve " + tree + " --pretty");
  CHECK(pretty.exit_code == 0);
  CHECK(pretty.out.find("status") != std::string::npos);
  CHECK_THROWS([&] {
    Json parsed = Json::parse(pretty.out);
    (void)parsed;
  }());
}

TEST_CASE("cli out redirects the report") {
  std::string tree = write_temp("tree.txt", kTree);
  CliRun run = run_cli("solve " + tree + " --out /tmp/icol_test_report.json");
  CHECK(run.exit_code == 0);
  CHECK(run.out.empty());  // report went to the file
  std::ifstream in("/tmp/icol_test_report.json");
  Json j = Json::parse(in);
  CHECK(j.at("results").at("status") == "colourable-with-witness");
}
