// End-to-end tests for the hypo command line tool. The binary under test is
// passed as argv[1] (cmake wires in $<TARGET_FILE:hypo>); every test spawns
// it as a subprocess and inspects exit status and stdout. Wall-clock timing
// goes to stderr by design, so stdout comparisons are exact.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;

std::string g_hypo;  // path to the binary under test
fs::path g_workdir;  // scratch directory for input/output files

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cmd(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t k;
  while ((k = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, k);
  const int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

// Runs `hypo <args>`; `prefix` can set environment variables ("FOO=1").
RunResult run(const std::string& args, const std::string& prefix = "") {
  std::string cmd;
  if (!prefix.empty()) cmd += "env " + prefix + " ";
  cmd += "'" + g_hypo + "' " + args;
  return run_cmd(cmd);
}

// Runs `hypo <args>` with `input` piped to stdin (printf-escaped, so \n
// works for line breaks).
RunResult run_stdin(const std::string& input, const std::string& args) {
  return run_cmd("printf '" + input + "' | '" + g_hypo + "' " + args);
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = g_workdir / name;
  std::ofstream out(p, std::ios::binary);
  out << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

const char* kK23EdgeList = "5 6\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n";

}  // namespace

TEST_CASE("--version reports the tool version") {
  auto r = run("--version");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("hypo ", 0) == 0);
}

TEST_CASE("no or unknown subcommand is a usage error") {
  CHECK(run("").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("energy on an edge list") {
  auto p = write_file("k23.txt", kK23EdgeList);
  auto r = run("energy '" + p.string() + "' --format edgelist");
  CHECK(r.status == 0);
  CHECK(r.out.find("n=5 m=6 c=2") != std::string::npos);
  CHECK(r.out.find("E=4.89897948557") != std::string::npos);
  CHECK(r.out.find("verdict=hypoenergetic") != std::string::npos);
  CHECK(r.out.find("precision=standard") != std::string::npos);
}

TEST_CASE("energy reads graph6 from stdin") {
  auto r = run_stdin("C~\\n", "energy -");
  CHECK(r.status == 0);
  CHECK(r.out.find("n=4 m=6 c=3") != std::string::npos);
  CHECK(r.out.find("verdict=non-hypoenergetic") != std::string::npos);
}

TEST_CASE("energy reports an exact tie verdict") {
  auto r = run_stdin("A_\\n", "energy -");
  CHECK(r.status == 0);
  CHECK(r.out.find("E=2.0 margin=0.0") != std::string::npos);
  CHECK(r.out.find("verdict=non-hypoenergetic") != std::string::npos);
  CHECK(r.out.find("precision=exact") != std::string::npos);
}

TEST_CASE("bad inputs exit 2") {
  CHECK(run("energy '" + (g_workdir / "missing.txt").string() + "'").status ==
        2);
  auto garbage = write_file("garbage.g6", "!!not graph6!!\n");
  CHECK(run("energy '" + garbage.string() + "'").status == 2);
  auto two = write_file("two.g6", "A_\nBw\n");
  CHECK(run("energy '" + two.string() + "'").status == 2);
  auto badlist = write_file("bad.txt", "3 1\n0 x\n");
  CHECK(run("energy '" + badlist.string() + "' --format edgelist").status ==
        2);
}

TEST_CASE("enumerate census matches the hand-checked table") {
  auto r = run("enumerate --counts --max-n 7");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "n,count,hypoenergetic_count\n"
        "1,1,1\n"
        "2,1,0\n"
        "3,2,1\n"
        "4,6,1\n"
        "5,10,1\n"
        "6,29,0\n"
        "7,64,1\n");
}

TEST_CASE("enumerate streams one graph6 line per graph") {
  auto r = run("enumerate --max-n 6 --trees");
  CHECK(r.status == 0);
  long lines = std::count(r.out.begin(), r.out.end(), '\n');
  CHECK(lines == 1 + 1 + 1 + 2 + 2 + 4);
  CHECK(r.out.rfind("@\n", 0) == 0);  // the single vertex leads the stream
}

TEST_CASE("enumerate --out writes the file instead of stdout") {
  fs::path out = g_workdir / "census.csv";
  auto r = run("enumerate --counts --max-n 4 --out '" + out.string() + "'");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
  CHECK(slurp(out) ==
        "n,count,hypoenergetic_count\n"
        "1,1,1\n"
        "2,1,0\n"
        "3,2,1\n"
        "4,6,1\n");
}

TEST_CASE("class flags are mutually exclusive") {
  CHECK(run("enumerate --max-n 4 --trees --cyclic-only").status == 2);
  CHECK(run("enumerate --max-n 4 --trees --quadrangle-free").status == 2);
}

TEST_CASE("verify-theorem confirms the scan up to order 7") {
  auto r = run("verify-theorem --max-n 7");
  CHECK(r.status == 0);
  json report = json::parse(r.out);
  CHECK(report["schema"] == "hypo.report.v1");
  CHECK(report["command"] == "verify-theorem");
  CHECK(report["parameters"]["max_n"] == 7);
  CHECK(report["summary"]["confirmed"] == true);
  CHECK(report["summary"]["total"] == 113);
  CHECK(report["summary"]["hypoenergetic"] == 5);
  CHECK(report["summary"]["unexpected"].empty());
  CHECK(report["summary"]["missing"].empty());
  CHECK(report["summary"]["expected_hits"].size() == 5);
}

TEST_CASE("verify-theorem cyclic-only expects a single hit") {
  auto r = run("verify-theorem --max-n 7 --cyclic-only");
  CHECK(r.status == 0);
  json report = json::parse(r.out);
  CHECK(report["summary"]["confirmed"] == true);
  auto hits = report["summary"]["expected_hits"];
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == "K23");
}

TEST_CASE("verify-theorem reports counterexamples honestly") {
  // With the degree bound raised to 4, the 5-vertex star has energy 4 < 5
  // but is not in the catalog, so the scan must refuse to confirm.
  auto r = run("verify-theorem --max-n 5 --delta 4");
  CHECK(r.status == 1);
  json report = json::parse(r.out);
  CHECK(report["summary"]["confirmed"] == false);
  CHECK(report["summary"]["unexpected"].size() >= 1);
}

TEST_CASE("reports are byte-identical across worker counts") {
  auto serial = run("verify-theorem --max-n 6 --jobs 1");
  auto parallel = run("verify-theorem --max-n 6 --jobs 4");
  CHECK(serial.status == 0);
  CHECK(parallel.status == 0);
  CHECK(serial.out == parallel.out);
}

TEST_CASE("certify a single graph from stdin") {
  auto r = run_stdin("C~\\n", "certify -");
  CHECK(r.status == 0);
  json report = json::parse(r.out);
  CHECK(report["summary"]["total"] == 1);
  CHECK(report["summary"]["certified"] == 1);
  auto rec = report["records"][0];
  CHECK(rec["status"] == "certified");
  CHECK(rec["max_cut_size"] == 4);
  CHECK(rec["verification"]["accepted"] == true);
  std::string cert = rec["certificate"];
  CHECK(cert.rfind("CERT 4 6", 0) == 0);
}

TEST_CASE("certify flags catalog members instead of failing") {
  auto k23 = write_file("k23.txt", kK23EdgeList);
  auto r = run("certify '" + k23.string() + "' --format edgelist");
  CHECK(r.status == 0);
  json report = json::parse(r.out);
  CHECK(report["summary"]["exceptional"] == 1);
  CHECK(report["records"][0]["status"] == "exceptional");
  CHECK(report["records"][0]["exceptional"] == "K23");
}

TEST_CASE("certify rejects inputs outside the degree regime") {
  // 5-vertex star: maximum degree 4.
  auto star = write_file("star5.txt", "5 4\n0 1\n0 2\n0 3\n0 4\n");
  auto r = run("certify '" + star.string() + "' --format edgelist");
  CHECK(r.status == 2);
}

TEST_CASE("certify --out writes one certificate per input") {
  auto corpus = write_file("corpus.g6", "C~\nBw\n");
  fs::path dir = g_workdir / "certs";
  auto r = run("certify '" + corpus.string() + "' --out '" + dir.string() +
               "'");
  CHECK(r.status == 0);
  REQUIRE(fs::exists(dir / "cert_0000.txt"));
  REQUIRE(fs::exists(dir / "cert_0001.txt"));
  std::string first = slurp(dir / "cert_0000.txt");
  CHECK(first.rfind("CERT 4 6", 0) == 0);
  // The triangle sits inside the small-cyclomatic base case: a one-leaf
  // certificate.
  CHECK(slurp(dir / "cert_0001.txt") == "CERT 3 3\nLEAF SmallCyclomaticBase Bw\n");
}

TEST_CASE("the order bound is enforced from the environment") {
  auto r = run("enumerate --counts --max-n 7", "HYPO_ORDER_BOUND=5");
  CHECK(r.status == 2);
  auto ok = run("enumerate --counts --max-n 5", "HYPO_ORDER_BOUND=5");
  CHECK(ok.status == 0);
}

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: cli_tests <path-to-hypo> [doctest args]\n");
    return 2;
  }
  g_hypo = argv[1];
  g_workdir =
      fs::temp_directory_path() / ("hypo_cli_" + std::to_string(::getpid()));
  fs::create_directories(g_workdir);
  doctest::Context ctx;
  ctx.applyCommandLine(argc - 1, argv + 1);
  const int rc = ctx.run();
  fs::remove_all(g_workdir);
  return rc;
}
