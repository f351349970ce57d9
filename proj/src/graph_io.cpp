#include "gpos/graph_io.hpp"

#include <charconv>
#include <vector>

namespace gpos {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size())
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  while (!lines.empty() && split_tokens(lines.back()).empty()) lines.pop_back();
  return lines;
}

Graph parse_edge_list(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const auto header = split_tokens(lines[0]);
  if (header.size() != 2) throw ParseError(1, "header must be 'n m'");
  const std::size_t n = parse_count(header[0], 1);
  const std::size_t m = parse_count(header[1], 1);
  if (lines.size() - 1 != m)
    throw ParseError(lines.size() - 1 < m ? lines.size() + 1 : m + 2,
                     "header declares " + std::to_string(m) + " edges but " + std::to_string(lines.size() - 1) +
                         " edge lines follow");

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto tok = split_tokens(lines[i]);
    if (tok.size() != 2) throw ParseError(i + 1, "edge line must be 'u v'");
    const std::size_t u = parse_count(tok[0], i + 1);
    const std::size_t v = parse_count(tok[1], i + 1);
    if (u >= n || v >= n)
      throw ParseError(i + 1, "endpoint out of range 0.." + std::to_string(n == 0 ? 0 : n - 1));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::build(n, edges);
  } catch (const GraphError& e) {
    if (e.edge_index()) throw ParseError(*e.edge_index() + 2, e.what());
    throw;
  }
}

constexpr int kG6Bias = 63;

Graph parse_graph6(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t first = 0;
  while (first < lines.size() && split_tokens(lines[first]).empty()) ++first;
  if (first == lines.size()) throw ParseError(1, "empty graph6 input");
  if (lines.size() - first > 1) throw ParseError(first + 2, "graph6 input must contain exactly one graph");
  const std::size_t lineno = first + 1;
  auto toks = split_tokens(lines[first]);
  if (toks.size() != 1) throw ParseError(lineno, "unexpected whitespace inside graph6 string");

  std::string_view s = toks[0];
  if (s.starts_with(">>graph6<<")) s.remove_prefix(10);
  for (char c : s)
    if (c < 63 || c > 126) throw ParseError(lineno, "graph6 byte out of range 63..126");
  if (s.empty()) throw ParseError(lineno, "empty graph6 string");

  std::size_t pos = 0;
  std::size_t n = 0;
  auto take = [&](std::size_t count) {
    if (pos + count > s.size()) throw ParseError(lineno, "truncated graph6 size field");
    std::size_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | static_cast<std::size_t>(s[pos++] - kG6Bias);
    return v;
  };
  if (s[0] != 126) {
    n = take(1);
  } else if (s.size() > 1 && s[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }

  const std::size_t bits = n < 2 ? 0 : n * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (s.size() - pos != need)
    throw ParseError(lineno, "graph6 body has " + std::to_string(s.size() - pos) + " bytes, expected " +
                                 std::to_string(need));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = s[pos + k / 6] - kG6Bias;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (need > 0 && bits % 6 != 0) {
    const int last = s.back() - kG6Bias;
    if ((last & ((1 << (6 - bits % 6)) - 1)) != 0) throw ParseError(lineno, "nonzero graph6 padding bits");
  }
  try {
    return Graph::build(n, edges);
  } catch (const GraphError& e) {
    throw ParseError(lineno, e.what());
  }
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_graph6(text);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  auto put = [&](std::size_t value, int chars) {
    for (int i = chars - 1; i >= 0; --i) out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + kG6Bias));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back(126);
    put(n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    put(n, 6);
  }
  int acc = 0, filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kG6Bias));
        acc = filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kG6Bias));
  return out;
}

std::string to_dot(const Graph& g, const VertexSet& highlight, std::string_view name) {
  std::string out = "graph \"" + std::string(name) + "\" {\n";
  out += "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out += "  " + std::to_string(v);
    if (v < highlight.width() && highlight.contains(v)) out += " [style=filled, fillcolor=black, fontcolor=white]";
    out += ";\n";
  }
  for (const auto& [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace gpos
