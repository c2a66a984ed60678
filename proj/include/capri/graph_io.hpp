#pragma once

#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "graph.hpp"

namespace capri {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse the plain text graph format:
///
///   # comment lines are skipped
///   n <vertex count>
///   e <u> <v>
///
/// Indices are 0-based and u != v.  Duplicate edges are tolerated and
/// reported through `warnings`; self-loops, out-of-range endpoints and
/// malformed lines raise ParseError.  The empty graph is rejected.
inline Graph parse_graph(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  std::unordered_set<std::uint64_t> seen;

  auto fail = [&](const std::string& msg) {
    throw ParseError("line " + std::to_string(lineno) + ": " + msg);
  };

  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;

    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::string rest;

    if (n < 0) {
      if (tag != "n") fail("expected header 'n <count>'");
      if (!(ls >> n)) fail("expected header 'n <count>'");
      if (ls >> rest) fail("trailing tokens after header");
      if (n < 1) fail("graph needs at least one vertex");
      if (n > 100'000'000) fail("vertex count too large");
    } else if (tag == "e") {
      long long u, v;
      if (!(ls >> u >> v)) fail("expected 'e <u> <v>'");
      if (ls >> rest) fail("trailing tokens after edge");
      if (u < 0 || u >= n || v < 0 || v >= n) fail("vertex index out of range");
      if (u == v) fail("self-loop on vertex " + std::to_string(u));
      const std::uint64_t key =
          (static_cast<std::uint64_t>(std::min(u, v)) << 32) | static_cast<std::uint64_t>(std::max(u, v));
      if (!seen.insert(key).second) {
        if (warnings)
          warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                              std::to_string(u) + " " + std::to_string(v));
        continue;
      }
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      fail("unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError("missing header 'n <count>'");
  return Graph::from_edges(static_cast<int>(n), edges);
}

/// Inverse of parse_graph: header line, then one "e u v" line per edge with
/// u < v in lexicographic order.  Output is bit-exact for a given graph.
inline std::string write_graph(const Graph& g) {
  std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += "e ";
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace capri
