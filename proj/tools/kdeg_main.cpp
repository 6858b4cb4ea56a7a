// kdeg: algorithms for k-degenerate graphs from the command line.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kdeg/approx.hpp"
#include "kdeg/biclique.hpp"
#include "kdeg/clique_enum.hpp"
#include "kdeg/degeneracy.hpp"
#include "kdeg/fixed_clique.hpp"
#include "kdeg/generators.hpp"
#include "kdeg/graph.hpp"
#include "kdeg/oracle.hpp"

namespace {

struct GlobalOpts {
  std::string input = "-";
  std::string format = "edgelist";
  std::string output;
  bool count = false;
  std::uint64_t seed = 1;
  int threads = 1;
};

kdeg::Graph read_input(const GlobalOpts& opts) {
  const auto format = opts.format == "dimacs" ? kdeg::GraphFormat::Dimacs
                                              : kdeg::GraphFormat::EdgeList;
  kdeg::LoadResult res;
  if (opts.input == "-") {
    res = kdeg::load_graph(std::cin, format);
  } else {
    std::ifstream in(opts.input);
    if (!in) throw std::runtime_error("cannot open input: " + opts.input);
    res = kdeg::load_graph(in, format);
  }
  if (res.dropped_records > 0)
    std::cerr << "warning: dropped " << res.dropped_records
              << " self-loop/duplicate record(s)\n";
  return std::move(res.graph);
}

// Output sink: --output writes a file, otherwise stdout.
class Out {
 public:
  explicit Out(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot open output: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void print_ids(std::ostream& os, std::span<const int> ids) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) os << ' ';
    os << ids[i];
  }
  os << '\n';
}

void print_biclique(std::ostream& os, const kdeg::Biclique& b) {
  for (std::size_t i = 0; i < b.a.size(); ++i) {
    if (i) os << ' ';
    os << b.a[i];
  }
  os << " | ";
  for (std::size_t i = 0; i < b.b.size(); ++i) {
    if (i) os << ' ';
    os << b.b[i];
  }
  os << '\n';
}

kdeg::Graph make_family_graph(const std::string& family, int n, int k,
                              const std::vector<int>& parts,
                              std::uint64_t seed) {
  if (family == "path") return kdeg::path_graph(n);
  if (family == "cycle") return kdeg::cycle_graph(n);
  if (family == "complete") return kdeg::complete_graph(n);
  if (family == "complete-multipartite") {
    if (!parts.empty()) return kdeg::complete_multipartite(parts);
    // split n into three near-equal parts
    const std::vector<int> three{(n + 2) / 3, (n + 1) / 3, n / 3};
    return kdeg::complete_multipartite(three);
  }
  if (family == "random-k-degenerate")
    return kdeg::random_k_degenerate(n, k, seed);
  throw std::runtime_error("unknown family: " + family);
}

std::vector<int> parse_parts(const std::string& spec) {
  std::vector<int> parts;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, 'x')) parts.push_back(std::stoi(tok));
  return parts;
}

int run(int argc, char** argv) {
  CLI::App app{"algorithms for k-degenerate graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--input", g.input, "input path or - for stdin");
  app.add_option("--format", g.format, "edgelist|dimacs")
      ->check(CLI::IsMember({"edgelist", "dimacs"}));
  app.add_option("--output", g.output, "output path (default stdout)");
  app.add_flag("--count", g.count, "print counts only");
  app.add_option("--seed", g.seed, "seed for generators");
  app.add_option("--threads", g.threads,
                 "worker threads for parallel-eligible operations")
      ->check(CLI::PositiveNumber);

  auto* cmd_degeneracy =
      app.add_subcommand("degeneracy", "degeneracy k and the vertex order");

  auto* cmd_maximal = app.add_subcommand(
      "maximal-cliques", "list maximal cliques, one per line");
  bool use_oracle = false;
  cmd_maximal->add_flag("--oracle", use_oracle,
                        "use the brute-force reference (small graphs only)");

  auto* cmd_cliques =
      app.add_subcommand("cliques", "list cliques of a fixed size");
  int clique_size = 3;
  cmd_cliques->add_option("--size", clique_size, "clique size (>= 3)")
      ->required();

  auto* cmd_triangles = app.add_subcommand("triangles", "list triangles");

  auto* cmd_remove = app.add_subcommand(
      "remove-triangles",
      "drop every edge in a triangle; writes the surviving edge list");

  auto* cmd_bicliques =
      app.add_subcommand("maximal-bicliques", "list maximal bicliques");

  auto* cmd_biclique = app.add_subcommand(
      "biclique", "decide whether an (r,l)-biclique exists");
  int opt_r = 1, opt_l = 1;
  bool induced = false;
  cmd_biclique->add_option("--r", opt_r, "first side size")->required();
  cmd_biclique->add_option("--l", opt_l, "second side size")->required();
  cmd_biclique->add_flag("--induced", induced,
                         "require both sides independent");

  auto* cmd_vc =
      app.add_subcommand("vertex-cover", "(2 - 1/k)-approximate vertex cover");

  auto* cmd_maxclique = app.add_subcommand("max-clique", "maximum clique");
  std::string solver_name = "exact";
  cmd_maxclique->add_option("--solver", solver_name, "exact|greedy")
      ->check(CLI::IsMember({"exact", "greedy"}));

  auto* cmd_generate =
      app.add_subcommand("generate", "emit a generated graph as an edge list");
  std::string family;
  int gen_n = 10, gen_k = 2;
  std::string parts_spec;
  cmd_generate
      ->add_option("--family", family,
                   "path|cycle|complete|complete-multipartite|"
                   "random-k-degenerate")
      ->required();
  cmd_generate->add_option("--n", gen_n, "vertex count");
  cmd_generate->add_option("--k", gen_k, "degeneracy bound");
  cmd_generate->add_option("--parts", parts_spec,
                           "part sizes for complete-multipartite, e.g. 3x3x3");

  auto* cmd_bench = app.add_subcommand(
      "bench", "time maximal clique enumeration; CSV per phase");
  std::string bench_family = "random-k-degenerate";
  std::vector<int> bench_sizes;
  int bench_k = 5;
  cmd_bench->add_option("--family", bench_family, "graph family");
  cmd_bench->add_option("--sizes", bench_sizes, "vertex counts to run")
      ->required()
      ->delimiter(',');
  cmd_bench->add_option("--k", bench_k,
                        "degeneracy bound for random-k-degenerate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // exit 2 on usage errors, 0 for --help
  }
  Out out(g.output);
  std::ostream& os = out.stream();

  if (cmd_degeneracy->parsed()) {
    const auto graph = read_input(g);
    const auto ord = kdeg::degeneracy_ordering(graph);
    os << "k=" << ord.k << '\n';
    print_ids(os, ord.order);
    return 0;
  }

  if (cmd_maximal->parsed()) {
    const auto graph = read_input(g);
    if (use_oracle) {
      const auto cliques = kdeg::oracle::maximal_cliques(graph);
      if (g.count) {
        os << cliques.size() << '\n';
      } else {
        for (const auto& c : cliques) print_ids(os, c);
      }
      return 0;
    }
    if (g.count) {
      os << kdeg::count_maximal_cliques(graph) << '\n';
    } else {
      kdeg::for_each_maximal_clique(
          graph, [&os](std::span<const int> w) { print_ids(os, w); });
    }
    return 0;
  }

  if (cmd_cliques->parsed()) {
    const auto graph = read_input(g);
    if (g.count) {
      os << kdeg::count_l_cliques(graph, clique_size, g.threads) << '\n';
    } else {
      kdeg::for_each_l_clique(
          graph, clique_size,
          [&os](std::span<const int> w) { print_ids(os, w); });
    }
    return 0;
  }

  if (cmd_triangles->parsed()) {
    const auto graph = read_input(g);
    if (g.count) {
      os << kdeg::count_triangles(graph, g.threads) << '\n';
    } else {
      kdeg::for_each_triangle(graph, [&os](const std::array<int, 3>& t) {
        os << t[0] << ' ' << t[1] << ' ' << t[2] << '\n';
      });
    }
    return 0;
  }

  if (cmd_remove->parsed()) {
    const auto graph = read_input(g);
    const auto filtered = kdeg::remove_triangles(graph);
    for (auto [u, v] : filtered.edges()) os << u << ' ' << v << '\n';
    return 0;
  }

  if (cmd_bicliques->parsed()) {
    const auto graph = read_input(g);
    const auto bicliques = kdeg::list_maximal_bicliques(graph);
    if (g.count) {
      os << bicliques.size() << '\n';
    } else {
      for (const auto& b : bicliques) print_biclique(os, b);
    }
    return 0;
  }

  if (cmd_biclique->parsed()) {
    const auto graph = read_input(g);
    const auto witness =
        induced ? kdeg::solve_induced_rl_biclique(graph, opt_r, opt_l)
                : kdeg::solve_rl_biclique(graph, opt_r, opt_l);
    if (witness) {
      os << "YES\n";
      print_biclique(os, *witness);
    } else {
      os << "NO\n";
    }
    return 0;
  }

  if (cmd_vc->parsed()) {
    const auto graph = read_input(g);
    const auto r = kdeg::vertex_cover_approx(graph);
    print_ids(os, r.cover);
    os << "size=" << r.cover.size() << '\n';
    os << "lp=" << r.lp_half_units / 2 << (r.lp_half_units % 2 ? ".5" : ".0")
       << '\n';
    return 0;
  }

  if (cmd_maxclique->parsed()) {
    const auto graph = read_input(g);
    const auto solver = solver_name == "greedy" ? kdeg::greedy_clique_solver()
                                                : kdeg::exact_clique_solver();
    const auto clique = kdeg::max_clique_approx(graph, solver, g.threads);
    print_ids(os, clique);
    os << "size=" << clique.size() << '\n';
    return 0;
  }

  if (cmd_generate->parsed()) {
    const auto parts = parts_spec.empty() ? std::vector<int>{}
                                          : parse_parts(parts_spec);
    const auto graph = make_family_graph(family, gen_n, gen_k, parts, g.seed);
    for (auto [u, v] : graph.edges()) os << u << ' ' << v << '\n';
    return 0;
  }

  if (cmd_bench->parsed()) {
    os << "family,n,k,op,phase,millis\n";
    for (int n : bench_sizes) {
      const auto graph =
          make_family_graph(bench_family, n, bench_k, {}, g.seed);
      const auto ord = kdeg::degeneracy_ordering(graph);
      kdeg::PipelineStats stats;
      kdeg::CliqueEnumOptions opts;
      opts.stats = &stats;
      const auto count = kdeg::count_maximal_cliques(graph, opts);
      const auto row = [&](const char* phase, double ms) {
        os << bench_family << ',' << n << ',' << ord.k << ",maximal-cliques,"
           << phase << ',' << ms << '\n';
      };
      row("family", stats.family_ms);
      row("enumerate", stats.bk_ms);
      row("dedup", stats.dedup_ms);
      row("total", stats.total_ms);
      std::cerr << "n=" << n << " cliques=" << count << '\n';
    }
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const kdeg::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
