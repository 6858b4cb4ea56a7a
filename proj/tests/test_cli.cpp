#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "kdeg/graph.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

// Runs the CLI through the shell; stderr is discarded unless redirected by
// the caller's snippet.
RunResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  std::string cmd;
  if (!stdin_data.empty()) {
    const std::string path =
        std::string(KDEG_CLI_PATH) + "_stdin_" + std::to_string(getpid());
    std::ofstream f(path);
    f << stdin_data;
    f.close();
    cmd = std::string(KDEG_CLI_PATH) + " " + args + " < " + path +
          " 2>/dev/null";
  } else {
    cmd = std::string(KDEG_CLI_PATH) + " " + args + " 2>/dev/null";
  }
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const std::string k4 = "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";

}  // namespace

TEST_CASE("triangle count on K4") {
  const auto r = run_cli("triangles --count", k4);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "4\n");
}

TEST_CASE("degeneracy of P10") {
  std::string p10;
  for (int i = 0; i + 1 < 10; ++i)
    p10 += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
  const auto r = run_cli("degeneracy", p10);
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 4) == "k=1\n");
}

TEST_CASE("induced 2,2 biclique in C4") {
  const auto r = run_cli("biclique --r 2 --l 2 --induced",
                         "0 1\n1 2\n2 3\n3 0\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 4) == "YES\n");

  const auto no = run_cli("biclique --r 2 --l 2", "0 1\n1 2\n2 3\n");
  CHECK(no.exit_code == 0);
  CHECK(no.out == "NO\n");
}

TEST_CASE("dimacs input") {
  const auto r = run_cli("--format dimacs maximal-cliques --count",
                         "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1\n");
}

TEST_CASE("exit codes") {
  CHECK(run_cli("no-such-subcommand").exit_code == 2);
  CHECK(run_cli("cliques", k4).exit_code == 2);  // missing required --size
  CHECK(run_cli("maximal-cliques --input /does/not/exist").exit_code == 1);
  CHECK(run_cli("--format dimacs degeneracy", "bogus\n").exit_code == 1);
  CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("remove-triangles round trip") {
  // C5 plus one chord: the triangle 0-1-2 disappears, the rest stays.
  const std::string in = "0 1\n1 2\n2 3\n3 4\n4 0\n0 2\n";
  const auto r = run_cli("remove-triangles", in);
  CHECK(r.exit_code == 0);

  std::istringstream is(r.out);
  const auto reparsed = kdeg::load_graph(is, kdeg::GraphFormat::EdgeList);
  const auto edges = reparsed.graph.edges();
  const std::vector<std::pair<int, int>> expect{{2, 3}, {3, 4}, {0, 4}};
  std::set<std::pair<int, int>> got(edges.begin(), edges.end());
  CHECK(got == std::set<std::pair<int, int>>(expect.begin(), expect.end()));
}

TEST_CASE("generator determinism and degeneracy bound") {
  const auto a = run_cli("generate --family random-k-degenerate --n 100 --k 4 --seed 7");
  const auto b = run_cli("generate --family random-k-degenerate --n 100 --k 4 --seed 7");
  const auto c = run_cli("generate --family random-k-degenerate --n 100 --k 4 --seed 8");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);       // byte-identical under the same seed
  CHECK(a.out != c.out);
  std::istringstream is(a.out);
  const auto g = kdeg::load_graph(is, kdeg::GraphFormat::EdgeList);
  CHECK(g.graph.num_vertices() == 100);

  const auto deg = run_cli("degeneracy", a.out);
  CHECK(deg.out.substr(0, 2) == "k=");
  const int k = std::stoi(deg.out.substr(2));
  CHECK(k <= 4);
}

TEST_CASE("identical clique listings across invocations") {
  const auto gen = run_cli("generate --family random-k-degenerate --n 60 --k 3 --seed 3");
  const auto a = run_cli("maximal-cliques", gen.out);
  const auto b = run_cli("maximal-cliques", gen.out);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("cliques --size and --count agree with listing") {
  const auto listed = run_cli("cliques --size 3", k4);
  const auto counted = run_cli("cliques --size 3 --count", k4);
  CHECK(counted.out == "4\n");
  int lines = 0;
  for (char ch : listed.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 4);
}

TEST_CASE("output file flag") {
  const std::string path =
      std::string(KDEG_CLI_PATH) + "_out_" + std::to_string(getpid());
  const auto r = run_cli("--output " + path + " triangles --count", k4);
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::string contents((std::istreambuf_iterator<char>(f)),
                       std::istreambuf_iterator<char>());
  CHECK(contents == "4\n");
  std::remove(path.c_str());
}

TEST_CASE("oracle flag matches the main path on a small graph") {
  const auto main_path = run_cli("maximal-cliques --count", k4);
  const auto oracle_path = run_cli("maximal-cliques --count --oracle", k4);
  CHECK(main_path.out == oracle_path.out);
}

TEST_CASE("bench emits the CSV header and phase rows") {
  const auto r = run_cli("bench --family cycle --sizes 50,100");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 31) == "family,n,k,op,phase,millis\ncycl");
  int rows = 0;
  for (char ch : r.out)
    if (ch == '\n') ++rows;
  CHECK(rows == 1 + 2 * 4);  // header + 4 phases per size
}
