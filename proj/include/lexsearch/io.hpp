#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lexsearch/graph.hpp"
#include "lexsearch/order.hpp"
#include "lexsearch/tree.hpp"

namespace lexsearch {

/// Text formats.
///
/// Edge list: one `u v` token pair per line; `#` starts a comment, blank lines
/// are skipped.  A line with a single token declares an isolated vertex, which
/// is how the one-vertex graph is written (any larger use is disconnected and
/// rejected at build time).
///
/// Order: all vertex tokens on one line, space separated.
///
/// Tree: a `root r` header line, then one `child parent` pair per line.

std::pair<std::vector<std::pair<std::string, std::string>>, std::vector<std::string>>
parse_edge_list(const std::string& text);

Graph graph_from_text(const std::string& text);
Graph read_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);

VertexOrder order_from_text(const std::string& text, const Graph& g);
VertexOrder read_order_file(const std::string& path, const Graph& g);
std::string order_to_text(const Graph& g, const VertexOrder& order);

RootedSpanningTree tree_from_text(const std::string& text, const Graph& g);
RootedSpanningTree read_tree_file(const std::string& path, const Graph& g);
/// Child/parent lines sorted by child token.
std::string tree_to_text(const Graph& g, const RootedSpanningTree& tree);

/// "(s)(d,c,b,a)(j,i,h,g,f,e)"; `visited` vertices print as leading singletons.
std::string partition_to_text(const Graph& g, const std::vector<int>& visited,
                              const std::vector<std::vector<int>>& classes);

std::string read_text_file(const std::string& path);

}  // namespace lexsearch
