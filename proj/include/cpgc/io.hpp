#pragma once

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cpgc/bipartite_graph.hpp"
#include "cpgc/compressed_graph.hpp"
#include "cpgc/transform.hpp"

namespace cpgc {

/// File-format violation; what() carries "<name>:<line>: <problem>".
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& name, std::size_t line, const std::string& what)
      : std::runtime_error(name + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

/// Line-oriented tokenizer that tracks line numbers for error messages.
class LineReader {
 public:
  LineReader(std::istream& in, std::string name)
      : in_(in), name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  std::size_t line_no() const { return line_no_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw IoError(name_, line_no_, what);
  }

  /// Next non-blank line split into tokens; false at EOF.
  bool next_line(std::vector<std::string_view>& tokens) {
    while (std::getline(in_, line_)) {
      ++line_no_;
      if (!line_.empty() && line_.back() == '\r') line_.pop_back();
      tokens.clear();
      std::size_t pos = 0;
      while (pos < line_.size()) {
        while (pos < line_.size() && line_[pos] == ' ') ++pos;
        std::size_t end = pos;
        while (end < line_.size() && line_[end] != ' ') ++end;
        if (end > pos)
          tokens.push_back(std::string_view(line_).substr(pos, end - pos));
        pos = end;
      }
      if (!tokens.empty()) return true;
    }
    return false;
  }

  std::uint64_t parse_u64(std::string_view tok) const {
    std::uint64_t value = 0;
    const auto [ptr, ec] =
        std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      fail("expected a non-negative integer, got '" + std::string(tok) + "'");
    return value;
  }

 private:
  std::istream& in_;
  std::string name_;
  std::string line_;
  std::size_t line_no_ = 0;
};

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(path, 0, "cannot open for reading");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError(path, 0, "cannot open for writing");
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Bipartite graph text format.
// Line 1: "n_u n_w m"; then m lines "i j" (0-based). Written in ascending
// (i, j) lexicographic order; read accepts any order but rejects malformed
// headers, out-of-range ids, duplicate edges, and edge-count mismatches.

inline BipartiteGraph read_graph(std::istream& in,
                                 const std::string& name = "<stream>") {
  detail::LineReader r(in, name);
  std::vector<std::string_view> tok;
  if (!r.next_line(tok)) throw IoError(name, 0, "missing header line");
  if (tok.size() != 3) r.fail("header must be 'n_u n_w m'");
  const std::uint64_t n_u = r.parse_u64(tok[0]);
  const std::uint64_t n_w = r.parse_u64(tok[1]);
  const std::uint64_t m = r.parse_u64(tok[2]);
  if (n_u > (1u << 30) || n_w > (1u << 30)) r.fail("vertex count too large");
  BipartiteGraph g(static_cast<vertex_t>(n_u), static_cast<vertex_t>(n_w));
  for (std::uint64_t e = 0; e < m; ++e) {
    if (!r.next_line(tok))
      throw IoError(name, r.line_no(),
                    "edge count mismatch: header says " + std::to_string(m) +
                        " edges, file has " + std::to_string(e));
    if (tok.size() != 2) r.fail("edge line must be 'i j'");
    const std::uint64_t i = r.parse_u64(tok[0]);
    const std::uint64_t j = r.parse_u64(tok[1]);
    if (i >= n_u || j >= n_w) r.fail("edge id out of range");
    if (g.has_edge(static_cast<vertex_t>(i), static_cast<vertex_t>(j)))
      r.fail("duplicate edge (" + std::to_string(i) + ", " +
             std::to_string(j) + ")");
    g.add_edge(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
  }
  if (r.next_line(tok))
    r.fail("edge count mismatch: more than " + std::to_string(m) +
           " edge lines");
  return g;
}

inline void write_graph(std::ostream& out, const BipartiteGraph& g) {
  out << g.n_u() << ' ' << g.n_w() << ' ' << g.m() << '\n';
  g.for_each_edge([&](vertex_t i, vertex_t j) { out << i << ' ' << j << '\n'; });
}

inline BipartiteGraph read_graph_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_graph(in, path);
}

inline void write_graph_file(const std::string& path,
                             const BipartiteGraph& g) {
  auto out = detail::open_output(path);
  write_graph(out, g);
}

// ---------------------------------------------------------------------------
// Compressed graph text format.
// Line 1: "n_u n_w n_z m_star"; then one line per edge:
//   "D i j"  residual edge u_i - w_j,
//   "L i q"  star edge u_i - z_q,
//   "R q j"  star edge z_q - w_j.
// Cliques are serialized in ascending q, L lines before R lines; reads accept
// the lines in any order and re-validate the assembled structure.

inline void write_compressed(std::ostream& out, const CompressedGraph& c) {
  out << c.n_u << ' ' << c.n_w << ' ' << c.n_z() << ' ' << c.m_star << '\n';
  c.residual.for_each_edge(
      [&](vertex_t i, vertex_t j) { out << "D " << i << ' ' << j << '\n'; });
  for (const auto& rec : c.cliques) {
    for (vertex_t i : rec.left_U) out << "L " << i << ' ' << rec.index_q << '\n';
    for (vertex_t j : rec.right_K)
      out << "R " << rec.index_q << ' ' << j << '\n';
  }
}

inline CompressedGraph read_compressed(std::istream& in,
                                       const std::string& name = "<stream>") {
  detail::LineReader r(in, name);
  std::vector<std::string_view> tok;
  if (!r.next_line(tok)) throw IoError(name, 0, "missing header line");
  if (tok.size() != 4) r.fail("header must be 'n_u n_w n_z m_star'");
  const auto n_u = static_cast<vertex_t>(r.parse_u64(tok[0]));
  const auto n_w = static_cast<vertex_t>(r.parse_u64(tok[1]));
  const auto n_z = static_cast<std::uint32_t>(r.parse_u64(tok[2]));
  const std::uint64_t m_star = r.parse_u64(tok[3]);

  BipartiteGraph residual(n_u, n_w);
  std::vector<CliqueRecord> cliques(n_z);
  for (std::uint32_t q = 0; q < n_z; ++q) cliques[q].index_q = q;

  for (std::uint64_t e = 0; e < m_star; ++e) {
    if (!r.next_line(tok))
      throw IoError(name, r.line_no(),
                    "edge count mismatch: header says " +
                        std::to_string(m_star) + " edges, file has " +
                        std::to_string(e));
    if (tok.size() != 3) r.fail("edge line must be 'D|L|R a b'");
    const std::uint64_t a = r.parse_u64(tok[1]);
    const std::uint64_t b = r.parse_u64(tok[2]);
    if (tok[0] == "D") {
      if (a >= n_u || b >= n_w) r.fail("residual edge id out of range");
      if (residual.has_edge(static_cast<vertex_t>(a),
                            static_cast<vertex_t>(b)))
        r.fail("duplicate residual edge");
      residual.add_edge(static_cast<vertex_t>(a), static_cast<vertex_t>(b));
    } else if (tok[0] == "L") {
      if (a >= n_u || b >= n_z) r.fail("star edge id out of range");
      cliques[b].left_U.push_back(static_cast<vertex_t>(a));
    } else if (tok[0] == "R") {
      if (a >= n_z || b >= n_w) r.fail("star edge id out of range");
      cliques[a].right_K.push_back(static_cast<vertex_t>(b));
    } else {
      r.fail("unknown edge kind '" + std::string(tok[0]) + "'");
    }
  }
  if (r.next_line(tok))
    r.fail("edge count mismatch: more than " + std::to_string(m_star) +
           " edge lines");

  CompressedGraph c;
  try {
    c = assemble_compressed(std::move(residual), std::move(cliques));
  } catch (const std::exception& e) {
    throw IoError(name, r.line_no(),
                  std::string("inconsistent compressed graph: ") + e.what());
  }
  if (c.m_star != m_star)
    throw IoError(name, r.line_no(),
                  "m_star mismatch: header says " + std::to_string(m_star) +
                      ", edges sum to " + std::to_string(c.m_star));
  return c;
}

inline CompressedGraph read_compressed_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_compressed(in, path);
}

inline void write_compressed_file(const std::string& path,
                                  const CompressedGraph& c) {
  auto out = detail::open_output(path);
  write_compressed(out, c);
}

// ---------------------------------------------------------------------------
// General graph text format: line 1 "n m d|u" (directed / undirected), then
// m lines "a b". Duplicate edges are allowed and collapse on conversion.

struct GeneralGraphFile {
  GeneralGraph graph;
  bool undirected = false;
};

inline GeneralGraphFile read_general(std::istream& in,
                                     const std::string& name = "<stream>") {
  detail::LineReader r(in, name);
  std::vector<std::string_view> tok;
  if (!r.next_line(tok)) throw IoError(name, 0, "missing header line");
  if (tok.size() != 3) r.fail("header must be 'n m d|u'");
  GeneralGraphFile out;
  out.graph.n = static_cast<std::uint32_t>(r.parse_u64(tok[0]));
  const std::uint64_t m = r.parse_u64(tok[1]);
  if (tok[2] == "d") {
    out.undirected = false;
  } else if (tok[2] == "u") {
    out.undirected = true;
  } else {
    r.fail("direction flag must be 'd' or 'u'");
  }
  for (std::uint64_t e = 0; e < m; ++e) {
    if (!r.next_line(tok))
      throw IoError(name, r.line_no(), "edge count mismatch");
    if (tok.size() != 2) r.fail("edge line must be 'a b'");
    const std::uint64_t a = r.parse_u64(tok[0]);
    const std::uint64_t b = r.parse_u64(tok[1]);
    if (a >= out.graph.n || b >= out.graph.n) r.fail("edge id out of range");
    out.graph.directed_edges.push_back(
        {static_cast<vertex_t>(a), static_cast<vertex_t>(b)});
  }
  if (r.next_line(tok)) r.fail("edge count mismatch: extra edge lines");
  return out;
}

inline void write_general(std::ostream& out, const GeneralGraph& g,
                          bool undirected) {
  out << g.n << ' ' << g.directed_edges.size() << ' '
      << (undirected ? 'u' : 'd') << '\n';
  for (const auto& [a, b] : g.directed_edges) out << a << ' ' << b << '\n';
}

inline GeneralGraphFile read_general_file(const std::string& path) {
  auto in = detail::open_input(path);
  return read_general(in, path);
}

inline void write_general_file(const std::string& path, const GeneralGraph& g,
                               bool undirected) {
  auto out = detail::open_output(path);
  write_general(out, g, undirected);
}

}  // namespace cpgc
