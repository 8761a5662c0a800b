#include "lexsearch/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "lexsearch/error.hpp"

namespace lexsearch {

namespace {

std::vector<std::vector<std::string>> token_lines(const std::string& text) {
  std::vector<std::vector<std::string>> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    std::string token;
    while (fields >> token) tokens.push_back(token);
    if (!tokens.empty()) lines.push_back(std::move(tokens));
  }
  return lines;
}

int require_vertex(const Graph& g, const std::string& token) {
  auto id = g.id_of(token);
  if (!id) fail(ErrorKind::ParseError, "unknown vertex " + token);
  return *id;
}

}  // namespace

std::pair<std::vector<std::pair<std::string, std::string>>, std::vector<std::string>>
parse_edge_list(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> isolated;
  for (const auto& tokens : token_lines(text)) {
    if (tokens.size() == 2)
      edges.emplace_back(tokens[0], tokens[1]);
    else if (tokens.size() == 1)
      isolated.push_back(tokens[0]);
    else
      fail(ErrorKind::ParseError, "expected `u v` but got " + std::to_string(tokens.size()) +
                                      " tokens starting with " + tokens[0]);
  }
  return {std::move(edges), std::move(isolated)};
}

Graph graph_from_text(const std::string& text) {
  auto [edges, isolated] = parse_edge_list(text);
  return Graph::from_edges(edges, isolated);
}

Graph read_graph_file(const std::string& path) { return graph_from_text(read_text_file(path)); }

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  if (g.vertex_count() == 1) {
    out << g.name(0) << "\n";
    return out.str();
  }
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << g.name(u) << " " << g.name(v) << "\n";
  return out.str();
}

VertexOrder order_from_text(const std::string& text, const Graph& g) {
  std::vector<int> seq;
  for (const auto& tokens : token_lines(text))
    for (const auto& token : tokens) seq.push_back(require_vertex(g, token));
  if (static_cast<int>(seq.size()) != g.vertex_count())
    fail(ErrorKind::InvalidOrder, "order lists " + std::to_string(seq.size()) + " of " +
                                      std::to_string(g.vertex_count()) + " vertices");
  return VertexOrder::of_sequence(std::move(seq));
}

VertexOrder read_order_file(const std::string& path, const Graph& g) {
  return order_from_text(read_text_file(path), g);
}

std::string order_to_text(const Graph& g, const VertexOrder& order) {
  std::ostringstream out;
  for (int i = 0; i < order.size(); ++i) {
    if (i) out << " ";
    out << g.name(order.at(i));
  }
  return out.str();
}

RootedSpanningTree tree_from_text(const std::string& text, const Graph& g) {
  auto lines = token_lines(text);
  if (lines.empty()) fail(ErrorKind::ParseError, "empty tree file");
  if (lines[0].size() != 2 || lines[0][0] != "root")
    fail(ErrorKind::ParseError, "tree file must start with a `root r` line");

  RootedSpanningTree tree;
  tree.root = require_vertex(g, lines[0][1]);
  tree.parent.assign(g.vertex_count(), -2);
  tree.parent[tree.root] = -1;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].size() != 2) fail(ErrorKind::ParseError, "expected `child parent` line");
    int child = require_vertex(g, lines[i][0]);
    int parent = require_vertex(g, lines[i][1]);
    if (tree.parent[child] != -2)
      fail(ErrorKind::ParseError, "vertex " + g.name(child) + " listed twice");
    tree.parent[child] = parent;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (tree.parent[v] == -2)
      fail(ErrorKind::NotASpanningTree, "vertex " + g.name(v) + " has no parent line");
  return tree;
}

RootedSpanningTree read_tree_file(const std::string& path, const Graph& g) {
  return tree_from_text(read_text_file(path), g);
}

std::string tree_to_text(const Graph& g, const RootedSpanningTree& tree) {
  std::vector<int> children;
  for (int v = 0; v < tree.size(); ++v)
    if (v != tree.root) children.push_back(v);
  std::sort(children.begin(), children.end(),
            [&](int a, int b) { return g.name(a) < g.name(b); });
  std::ostringstream out;
  out << "root " << g.name(tree.root) << "\n";
  for (int v : children) out << g.name(v) << " " << g.name(tree.parent[v]) << "\n";
  return out.str();
}

std::string partition_to_text(const Graph& g, const std::vector<int>& visited,
                              const std::vector<std::vector<int>>& classes) {
  std::ostringstream out;
  for (int v : visited) out << "(" << g.name(v) << ")";
  for (const auto& cls : classes) {
    out << "(";
    for (std::size_t i = 0; i < cls.size(); ++i) {
      if (i) out << ",";
      out << g.name(cls[i]);
    }
    out << ")";
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace lexsearch
