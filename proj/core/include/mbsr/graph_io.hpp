#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mbsr/graph.hpp"

namespace mbsr {

enum class GraphFormat { Auto, EdgeList, Json };

/// Edge-list document:
///
///     # optional comment lines
///     n m
///     u v      (exactly m lines, 0 <= u,v < n, u != v, no duplicates)
///
/// Blank lines are ignored. Errors carry the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Structured document `{"n": 3, "edges": [[0,1],[1,2]]}`; an optional
/// "labels" array of strings is honored.
Graph parse_graph_json(std::string_view text);

/// Dispatches on `format`; Auto picks JSON when the first non-space
/// character is '{'.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// Reads and parses a file. Auto uses the extension (.json) before sniffing.
Graph read_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto);

/// Inverse of parse_edge_list; each comment line is emitted with a "# " prefix.
std::string format_edge_list(const Graph& g, const std::vector<std::string>& comments = {});
std::string format_graph_json(const Graph& g);
/// Undirected DOT; vertex ids are the node names, labels when present.
std::string to_dot(const Graph& g, std::string_view name = "G");

}  // namespace mbsr
