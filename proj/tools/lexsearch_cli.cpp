// Command-line surface over the library: one subcommand per operation,
// batch-only.  Exit codes are a stable contract: 0 accept, 1 reject or
// domain-negative verdict (not-chordal, a failed verify), 2 usage, parse, or
// contract errors.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexsearch/basic_search.hpp"
#include "lexsearch/chordal.hpp"
#include "lexsearch/error.hpp"
#include "lexsearch/gen.hpp"
#include "lexsearch/graph.hpp"
#include "lexsearch/io.hpp"
#include "lexsearch/lexbfs.hpp"
#include "lexsearch/oracle.hpp"
#include "lexsearch/order.hpp"
#include "lexsearch/ordering.hpp"
#include "lexsearch/tree.hpp"

namespace {

using namespace lexsearch;

int start_id(const Graph& g, const std::string& token) {
  auto id = g.id_of(token);
  if (!id) fail(ErrorKind::StartNotInGraph, "vertex " + token);
  return *id;
}

// Tiebreak for a ⁺-style search: the file's order when given (it must end at
// the start vertex), the canonical id-ascending order otherwise.
VertexOrder resolve_tiebreak(const Graph& g, int start, const std::string& tiebreak_path) {
  if (tiebreak_path.empty()) return canonical_tiebreak_ending_at(g, start);
  VertexOrder rho = read_order_file(tiebreak_path, g);
  if (rho.last() != start)
    fail(ErrorKind::RhoDoesNotEndAtStart, "tiebreak must end at " + g.name(start));
  return rho;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
  if (!out) fail(ErrorKind::ParseError, "cannot write " + path);
}

std::string cycle_text(const Graph& g, const std::vector<int>& cycle) {
  std::string line;
  for (int v : cycle) {
    if (!line.empty()) line += ' ';
    line += g.name(v);
  }
  return line;
}

int report_not_chordal(const Graph& g, const NotChordalError& e) {
  std::cout << "not-chordal\n" << "cycle: " << cycle_text(g, e.cycle()) << "\n";
  return 1;
}

int cmd_lexbfs(const std::string& graph_path, const std::string& start_token,
               const std::string& tiebreak_path) {
  Graph g = read_graph_file(graph_path);
  int s = start_id(g, start_token);
  std::cout << order_to_text(g, lexbfs_plus(g, resolve_tiebreak(g, s, tiebreak_path))) << "\n";
  return 0;
}

int cmd_lexdfs(const std::string& graph_path, const std::string& start_token,
               const std::string& tiebreak_path, const std::string& tree_path,
               bool skip_check) {
  Graph g = read_graph_file(graph_path);
  int s = start_id(g, start_token);
  VertexOrder rho = resolve_tiebreak(g, s, tiebreak_path);
  LexdfsOptions options;
  options.assume_chordal = skip_check;
  RootedSpanningTree tree;
  try {
    VertexOrder sigma = lexdfs_plus_chordal(g, s, rho, options, &tree);
    std::cout << order_to_text(g, sigma) << "\n";
  } catch (const NotChordalError& e) {
    return report_not_chordal(g, e);
  }
  if (!tree_path.empty()) write_text_file(tree_path, tree_to_text(g, tree));
  return 0;
}

int cmd_verify_order(const std::string& graph_path, const std::string& order_path,
                     bool use_oracle) {
  Graph g = read_graph_file(graph_path);
  VertexOrder order = read_order_file(order_path, g);
  bool ok = false;
  try {
    ok = use_oracle ? check_lexdfs_order(g, order) : verify_lexdfs_order(g, order);
  } catch (const NotChordalError& e) {
    return report_not_chordal(g, e);
  }
  std::cout << "lexdfs-order: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify_tree(const std::string& graph_path, const std::string& tree_path) {
  Graph g = read_graph_file(graph_path);
  RootedSpanningTree tree = read_tree_file(tree_path, g);
  bool ok = false;
  try {
    ok = verify_lexdfs_ltree(g, tree);
  } catch (const NotChordalError& e) {
    return report_not_chordal(g, e);
  }
  std::cout << "lexdfs-ltree: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_tree(const std::string& graph_path, const std::string& order_path,
             const std::string& kind) {
  Graph g = read_graph_file(graph_path);
  VertexOrder order = read_order_file(order_path, g);
  RootedSpanningTree tree = kind == "l" ? l_tree(g, order) : f_tree(g, order);
  std::cout << tree_to_text(g, tree);
  return 0;
}

int cmd_gen(int n, int k, std::uint64_t seed) {
  std::cout << graph_to_text(gen_chordal(n, k, seed));
  return 0;
}

int cmd_check_chordal(const std::string& graph_path) {
  Graph g = read_graph_file(graph_path);
  ChordalityResult result = is_chordal(g);
  if (result.chordal) {
    std::cout << "chordal: yes\n" << "peo: " << order_to_text(g, result.peo) << "\n";
    return 0;
  }
  std::cout << "chordal: no\n" << "cycle: " << cycle_text(g, result.chordless_cycle) << "\n";
  return 1;
}

int cmd_oracle_search(const std::string& graph_path, const std::string& start_token,
                      const std::string& tiebreak_path, bool depth_first) {
  Graph g = read_graph_file(graph_path);
  int s = start_id(g, start_token);
  VertexOrder rho = resolve_tiebreak(g, s, tiebreak_path);
  std::cout << order_to_text(g, depth_first ? naive_lexdfs_plus(g, rho)
                                            : naive_lexbfs_plus(g, rho))
            << "\n";
  return 0;
}

int cmd_oracle_check(const std::string& graph_path, const std::string& order_path,
                     const std::string& kind) {
  Graph g = read_graph_file(graph_path);
  VertexOrder order = read_order_file(order_path, g);
  bool ok = kind == "dfs" ? check_dfs_order(g, order) : check_lexdfs_order(g, order);
  std::cout << kind << "-order: " << (ok ? "yes" : "no") << "\n";
  return ok ? 0 : 1;
}

int cmd_oracle_enumerate(const std::string& graph_path, const std::string& start_token,
                         const std::string& kind, int max_n) {
  Graph g = read_graph_file(graph_path);
  int s = start_id(g, start_token);
  auto orders = kind == "lexbfs" ? enumerate_lexbfs_orders(g, s, max_n)
                                 : enumerate_lexdfs_orders(g, s, max_n);
  for (const VertexOrder& order : orders) std::cout << order_to_text(g, order) << "\n";
  return 0;
}

int cmd_bench(int k, const std::vector<int>& sizes, std::uint64_t seed, int repeats,
              int naive_cap) {
  if (sizes.empty()) fail(ErrorKind::InvalidParameters, "need at least one size");
  for (int n : sizes)
    if (n < 1) fail(ErrorKind::InvalidParameters, "sizes must be positive");
  std::vector<BenchRow> rows = run_bench(k, sizes, seed, repeats, naive_cap);

  std::printf("%8s %9s %10s %11s %8s\n", "n", "m", "t_fast", "t_naive", "ratio");
  for (const BenchRow& row : rows) {
    std::printf("%8d %9d %10.3f ", row.n, row.m, row.t_fast_ms);
    if (row.t_naive_ms < 0.0)
      std::printf("%11s %8s\n", "-", "-");
    else
      std::printf("%11.3f %8.2f\n", row.t_naive_ms, row.t_naive_ms / row.t_fast_ms);
  }

  // A run is linear when the per-doubling growth of the fast time stays at or
  // under 2.5: for each consecutive pair of sizes the measured time factor is
  // normalized by how often n+m doubled between them.
  bool linear = true;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double size_growth = double(rows[i].n + rows[i].m) / double(rows[i - 1].n + rows[i - 1].m);
    double time_growth = rows[i].t_fast_ms / rows[i - 1].t_fast_ms;
    double per_doubling = std::pow(time_growth, 1.0 / std::log2(size_growth));
    std::printf("growth %d->%d: size x%.2f fast x%.2f per-doubling x%.2f\n",
                rows[i - 1].n + rows[i - 1].m, rows[i].n + rows[i].m, size_growth, time_growth,
                per_doubling);
    if (per_doubling > 2.5) linear = false;
  }
  std::printf("linear: %s\n", linear ? "yes" : "no");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lexicographic graph search toolkit"};
  app.require_subcommand(1);

  std::string graph_path;
  std::string order_path;
  std::string tree_path;
  std::string start_token;
  std::string tiebreak_path;
  std::string emit_tree_path;
  std::string kind = "l";
  bool use_oracle = false;
  bool skip_check = false;
  int gen_n = 0;
  int gen_k = 3;
  std::uint64_t seed = 1;
  std::vector<int> sizes;
  int repeats = 5;
  int naive_cap = 8192;
  int max_n = 10;

  auto* lexbfs_cmd = app.add_subcommand("lexbfs", "Breadth-first order by partition refinement");
  lexbfs_cmd->add_option("graph", graph_path, "edge-list file")->required();
  lexbfs_cmd->add_option("--start", start_token, "start vertex token")->required();
  lexbfs_cmd->add_option("--tiebreak", tiebreak_path, "order file ending at the start vertex");

  auto* lexdfs_cmd = app.add_subcommand("lexdfs", "Depth-first order of a chordal graph");
  lexdfs_cmd->add_option("graph", graph_path, "edge-list file")->required();
  lexdfs_cmd->add_option("--start", start_token, "start vertex token")->required();
  lexdfs_cmd->add_option("--tiebreak", tiebreak_path, "order file ending at the start vertex");
  lexdfs_cmd->add_option("--emit-tree", emit_tree_path, "write the internal last-neighbor tree");
  lexdfs_cmd->add_flag("--skip-chordality-check", skip_check,
                       "trust the input to be chordal");

  auto* verify_order_cmd = app.add_subcommand("verify-order", "Is the order a LexDFS order?");
  verify_order_cmd->add_option("graph", graph_path, "edge-list file")->required();
  verify_order_cmd->add_option("order", order_path, "order file")->required();
  verify_order_cmd->add_flag("--oracle", use_oracle,
                             "use the four-point checker (works on any graph)");

  auto* verify_tree_cmd =
      app.add_subcommand("verify-tree", "Is the tree a LexDFS last-neighbor tree?");
  verify_tree_cmd->add_option("graph", graph_path, "edge-list file")->required();
  verify_tree_cmd->add_option("tree", tree_path, "tree file")->required();

  auto* tree_cmd = app.add_subcommand("tree", "Search tree of an order");
  tree_cmd->add_option("graph", graph_path, "edge-list file")->required();
  tree_cmd->add_option("order", order_path, "order file")->required();
  tree_cmd->add_option("--kind", kind, "l (last-neighbor) or f (first-neighbor)")
      ->check(CLI::IsMember({"l", "f"}));

  auto* gen_cmd = app.add_subcommand("gen", "Random connected chordal graph");
  gen_cmd->add_option("--n", gen_n, "vertex count")->required();
  gen_cmd->add_option("--k", gen_k, "attachment clique size bound");
  gen_cmd->add_option("--seed", seed, "random seed");

  auto* check_cmd = app.add_subcommand("check-chordal", "Chordality with certificate");
  check_cmd->add_option("graph", graph_path, "edge-list file")->required();

  auto* oracle_cmd = app.add_subcommand("oracle", "Reference label-search implementations");
  oracle_cmd->require_subcommand(1);
  auto* oracle_lexbfs = oracle_cmd->add_subcommand("lexbfs", "Naive breadth-first labels");
  oracle_lexbfs->add_option("graph", graph_path, "edge-list file")->required();
  oracle_lexbfs->add_option("--start", start_token, "start vertex token")->required();
  oracle_lexbfs->add_option("--tiebreak", tiebreak_path, "order file ending at the start vertex");
  auto* oracle_lexdfs = oracle_cmd->add_subcommand("lexdfs", "Naive depth-first labels");
  oracle_lexdfs->add_option("graph", graph_path, "edge-list file")->required();
  oracle_lexdfs->add_option("--start", start_token, "start vertex token")->required();
  oracle_lexdfs->add_option("--tiebreak", tiebreak_path, "order file ending at the start vertex");
  auto* oracle_check = oracle_cmd->add_subcommand("check", "Four-point order check");
  oracle_check->add_option("graph", graph_path, "edge-list file")->required();
  oracle_check->add_option("order", order_path, "order file")->required();
  std::string check_kind = "lexdfs";
  oracle_check->add_option("--kind", check_kind, "dfs or lexdfs")
      ->check(CLI::IsMember({"dfs", "lexdfs"}));
  auto* oracle_enum = oracle_cmd->add_subcommand("enumerate", "All orders from a start vertex");
  oracle_enum->add_option("graph", graph_path, "edge-list file")->required();
  oracle_enum->add_option("--start", start_token, "start vertex token")->required();
  std::string enum_kind = "lexdfs";
  oracle_enum->add_option("--kind", enum_kind, "lexdfs or lexbfs")
      ->check(CLI::IsMember({"lexdfs", "lexbfs"}));
  oracle_enum->add_option("--max-n", max_n, "refuse graphs larger than this");

  auto* bench_cmd = app.add_subcommand("bench", "Timing table with a linearity verdict");
  bench_cmd->add_option("--k", gen_k, "attachment clique size bound")->capture_default_str();
  bench_cmd->add_option("--sizes", sizes, "vertex counts")->required()->delimiter(',');
  bench_cmd->add_option("--seed", seed, "random seed");
  bench_cmd->add_option("--repeats", repeats, "timed runs per size")->capture_default_str();
  bench_cmd->add_option("--naive-cap", naive_cap, "largest n the naive oracle is timed on")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(lexbfs_cmd))
      return cmd_lexbfs(graph_path, start_token, tiebreak_path);
    if (app.got_subcommand(lexdfs_cmd))
      return cmd_lexdfs(graph_path, start_token, tiebreak_path, emit_tree_path, skip_check);
    if (app.got_subcommand(verify_order_cmd))
      return cmd_verify_order(graph_path, order_path, use_oracle);
    if (app.got_subcommand(verify_tree_cmd)) return cmd_verify_tree(graph_path, tree_path);
    if (app.got_subcommand(tree_cmd)) return cmd_tree(graph_path, order_path, kind);
    if (app.got_subcommand(gen_cmd)) return cmd_gen(gen_n, gen_k, seed);
    if (app.got_subcommand(check_cmd)) return cmd_check_chordal(graph_path);
    if (app.got_subcommand(oracle_cmd)) {
      if (oracle_cmd->got_subcommand(oracle_lexbfs))
        return cmd_oracle_search(graph_path, start_token, tiebreak_path, false);
      if (oracle_cmd->got_subcommand(oracle_lexdfs))
        return cmd_oracle_search(graph_path, start_token, tiebreak_path, true);
      if (oracle_cmd->got_subcommand(oracle_check))
        return cmd_oracle_check(graph_path, order_path, check_kind);
      if (oracle_cmd->got_subcommand(oracle_enum))
        return cmd_oracle_enumerate(graph_path, start_token, enum_kind, max_n);
    }
    if (app.got_subcommand(bench_cmd))
      return cmd_bench(gen_k, sizes, seed, repeats, naive_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
