#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gpos/graph.hpp"
#include "gpos/vertex_set.hpp"

namespace gpos {

enum class GraphFormat { edge_list, graph6 };

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Edge list: header "n m", then m lines "u v" with 0-based endpoints.
/// graph6: a single graph, optionally preceded by the ">>graph6<<" header.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Header line plus edges in lexicographic order, LF-terminated.
std::string to_edge_list(const Graph& g);
/// Encoded graph without a trailing newline.
std::string to_graph6(const Graph& g);

/// DOT text; highlighted vertices are drawn as filled dots.
std::string to_dot(const Graph& g, const VertexSet& highlight, std::string_view name = "G");

}  // namespace gpos
