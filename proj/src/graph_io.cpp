#include "kcon/graph_io.hpp"

#include <charconv>

#include "kcon/error.hpp"

namespace kcon {

GraphFormat parse_format(std::string_view name) {
  if (name == "edge-list") return GraphFormat::EdgeList;
  if (name == "graph6") return GraphFormat::Graph6;
  fail(ErrorCode::InvalidArgument, "unknown graph format '" + std::string(name) + "'");
}

std::string_view to_string(GraphFormat f) {
  return f == GraphFormat::EdgeList ? "edge-list" : "graph6";
}

namespace {

[[noreturn]] void parse_error(const std::string& where, const std::string& what) {
  fail(ErrorCode::ParseError, where + ": " + what);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long parse_int(std::string_view tok, const std::string& where) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || value < 0)
    parse_error(where, "expected a non-negative integer, got '" + std::string(tok) + "'");
  return value;
}

int checked_order(long n, const ParseOptions& opts, const std::string& where) {
  int limit = std::min(opts.limit_n, kMaxVertices);
  if (n > limit)
    fail(ErrorCode::TooLarge, where + ": order " + std::to_string(n) + " exceeds limit " +
                                  std::to_string(limit));
  return static_cast<int>(n);
}

}  // namespace

Graph parse_edge_list(std::string_view text, ParseOptions opts) {
  int n = -1;
  std::vector<Mask> adj;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    const std::string where = "line " + std::to_string(line_no);
    auto toks = tokens(line);
    if (toks.empty() || toks[0].front() == '#') continue;
    if (n < 0) {
      if (toks.size() != 1) parse_error(where, "header must be the vertex count alone");
      n = checked_order(parse_int(toks[0], where), opts, where);
      adj.assign(n, 0);
      continue;
    }
    if (toks.size() != 2) parse_error(where, "expected 'u v'");
    long u = parse_int(toks[0], where);
    long v = parse_int(toks[1], where);
    if (u >= n || v >= n)
      parse_error(where, "vertex id " + std::to_string(std::max(u, v)) + " >= n=" +
                             std::to_string(n));
    if (u == v) parse_error(where, "self-loop at " + std::to_string(u));
    if ((adj[u] >> v) & 1U)
      parse_error(where, "parallel edge " + std::to_string(u) + " " + std::to_string(v));
    adj[u] |= bit(static_cast<Vertex>(v));
    adj[v] |= bit(static_cast<Vertex>(u));
  }
  if (n < 0) parse_error("line 1", "missing header");
  return Graph::from_adjacency(std::move(adj));
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Graph parse_graph6(std::string_view text, ParseOptions opts) {
  std::size_t offset = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) offset = header.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size())
      parse_error("byte " + std::to_string(i), "unexpected end of graph6 data");
    int c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126)
      parse_error("byte " + std::to_string(i), "character outside graph6 range 63..126");
    return c - 63;
  };

  long n = 0;
  std::size_t i = offset;
  if (i < text.size() && text[i] == 126) {
    if (i + 1 < text.size() && text[i + 1] == 126)
      parse_error("byte " + std::to_string(i), "orders above 258047 are not supported");
    for (int k = 1; k <= 3; ++k) n = (n << 6) | byte_at(i + k);
    i += 4;
  } else {
    n = byte_at(i);
    i += 1;
  }
  const int order = checked_order(n, opts, "byte " + std::to_string(offset));

  const std::size_t bits = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  if (text.size() - i != nbytes)
    parse_error("byte " + std::to_string(std::min(text.size(), i + nbytes)),
                "expected " + std::to_string(nbytes) + " edge bytes, found " +
                    std::to_string(text.size() - i));
  std::vector<Mask> adj(order, 0);
  std::size_t k = 0;
  for (int v = 1; v < order; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      int word = byte_at(i + k / 6);
      if ((word >> (5 - k % 6)) & 1) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
      }
    }
  }
  if (bits % 6 != 0) {
    int word = byte_at(i + nbytes - 1);
    if (word & ((1 << (6 - bits % 6)) - 1))
      parse_error("byte " + std::to_string(i + nbytes - 1), "non-zero padding bits");
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int word = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + 63));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + 63));
  return out;
}

Graph parse_graph(std::string_view text, GraphFormat f, ParseOptions opts) {
  if (f == GraphFormat::EdgeList) return parse_edge_list(text, opts);
  // A graph6 file may hold several lines; single-graph callers take the first.
  std::size_t start = 0;
  while (start < text.size() && (text[start] == '\n' || text[start] == '\r')) ++start;
  std::size_t eol = text.find('\n', start);
  return parse_graph6(text.substr(start, eol == std::string_view::npos ? eol : eol - start), opts);
}

std::string serialize(const Graph& g, GraphFormat f) {
  return f == GraphFormat::EdgeList ? to_edge_list(g) : to_graph6(g);
}

std::vector<Graph> parse_graph6_lines(std::string_view text, ParseOptions opts) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++line_no;
    pos = eol + 1;
    while (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line, opts));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ParseError) throw;
      fail(ErrorCode::ParseError, "line " + std::to_string(line_no) + ", " + e.what());
    }
  }
  return out;
}

}  // namespace kcon
