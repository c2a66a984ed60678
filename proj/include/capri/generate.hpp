#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cotree.hpp"
#include "graph.hpp"

namespace capri {

/// splitmix64.  The algorithm is pinned so seeded fixtures reproduce
/// bit-exactly on every platform.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, bound), by rejection so there is no modulo bias.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below needs bound >= 1");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  bool next_bit() { return (next() & 1ull) != 0; }

private:
  std::uint64_t state_;
};

inline Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Parts occupy consecutive vertex ranges in the given order; edges connect
/// different parts.
inline Graph complete_multipartite(const std::vector<int>& parts) {
  if (parts.empty()) throw std::invalid_argument("need at least one part");
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw std::invalid_argument("part sizes must be >= 1");
    n += p;
  }
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    part_of.insert(part_of.end(), static_cast<std::size_t>(parts[i]), static_cast<int>(i));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

/// Rook's graph on an m x n board; cell (i,j) lives at flat index i*n+j and
/// sees every cell in its row and column.
inline Graph rook_graph(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("rook board needs m,n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      for (int j2 = j + 1; j2 < n; ++j2) edges.emplace_back(i * n + j, i * n + j2);
      for (int i2 = i + 1; i2 < m; ++i2) edges.emplace_back(i * n + j, i2 * n + j);
    }
  return Graph::from_edges(m * n, edges);
}

inline Graph rook_complement(int m, int n) { return complement(rook_graph(m, n)); }

/// Triangle 0-1-2 with the pendant 3 attached to 0; equals the realization
/// of (x 0 (+ (x 1 2) 3)).
inline Graph paw_graph() {
  return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}});
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

/// Star K_{1,k}: center 0, leaves 1..k.
inline Graph star_graph(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star needs at least one leaf");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

inline Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs n >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

/// Random cotree over `leaves` labeled leaves: recursive uniform proper
/// bipartition of the leaf set, labels alternating by depth, root label from
/// one stream bit.
inline Cotree random_cotree(int leaves, SplitMix64& rng) {
  if (leaves < 1) throw std::invalid_argument("cotree needs at least one leaf");
  const auto root_label = rng.next_bit() ? Cotree::Label::Union : Cotree::Label::Join;
  struct Builder {
    SplitMix64& rng;
    Cotree build(std::vector<int>& ids, Cotree::Label label) {
      if (ids.size() == 1) return Cotree::leaf(ids[0]);
      std::vector<int> a, b;
      do {
        a.clear();
        b.clear();
        for (int v : ids) (rng.next_bit() ? a : b).push_back(v);
      } while (a.empty() || b.empty());
      const auto other =
          label == Cotree::Label::Union ? Cotree::Label::Join : Cotree::Label::Union;
      return Cotree::compose(label, {build(a, other), build(b, other)});
    }
  };
  std::vector<int> ids(static_cast<std::size_t>(leaves));
  for (int v = 0; v < leaves; ++v) ids[static_cast<std::size_t>(v)] = v;
  if (leaves == 1) return Cotree::leaf(0);
  return Builder{rng}.build(ids, root_label);
}

inline Graph random_cograph(int n, SplitMix64& rng) { return realize(random_cotree(n, rng)); }

/// Random splitgraph: clique size uniform in 0..n on vertices 0..c-1, then
/// each clique/independent cross pair gets an edge with probability 1/2.
inline Graph random_splitgraph(int n, SplitMix64& rng) {
  if (n < 1) throw std::invalid_argument("splitgraph needs n >= 1");
  const int c = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n) + 1));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < c; ++u)
    for (int v = u + 1; v < c; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < c; ++u)
    for (int s = c; s < n; ++s)
      if (rng.next_bit()) edges.emplace_back(u, s);
  return Graph::from_edges(n, edges);
}

/// Parsed form of the generator mini-language
/// `family[:p1,p2,...][:seed=S]`, e.g. "rook:3,4" or
/// "random_cograph:12:seed=7".
struct GeneratorSpec {
  std::string family;
  std::vector<int> params;
  std::optional<std::uint64_t> seed;

  static GeneratorSpec parse(const std::string& text) {
    GeneratorSpec spec;
    std::vector<std::string> segments;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      segments.push_back(text.substr(start, colon - start));
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
    if (segments.empty() || segments[0].empty())
      throw std::invalid_argument("generator spec needs a family name");
    spec.family = segments[0];
    bool saw_params = false;
    for (std::size_t i = 1; i < segments.size(); ++i) {
      const std::string& seg = segments[i];
      if (seg.rfind("seed=", 0) == 0) {
        if (spec.seed) throw std::invalid_argument("generator spec repeats seed");
        try {
          std::size_t used = 0;
          spec.seed = std::stoull(seg.substr(5), &used);
          if (used != seg.size() - 5) throw std::invalid_argument("");
        } catch (const std::exception&) {
          throw std::invalid_argument("bad seed in generator spec: " + seg);
        }
      } else {
        if (saw_params) throw std::invalid_argument("generator spec repeats parameters");
        saw_params = true;
        std::size_t pos = 0;
        while (pos <= seg.size()) {
          const std::size_t comma = seg.find(',', pos);
          const std::string tok = seg.substr(pos, comma - pos);
          try {
            std::size_t used = 0;
            spec.params.push_back(std::stoi(tok, &used));
            if (used != tok.size() || tok.empty()) throw std::invalid_argument("");
          } catch (const std::exception&) {
            throw std::invalid_argument("bad parameter in generator spec: '" + tok + "'");
          }
          if (comma == std::string::npos) break;
          pos = comma + 1;
        }
      }
    }
    return spec;
  }

  std::string str() const {
    std::string out = family;
    if (!params.empty()) {
      out += ':';
      for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(params[i]);
      }
    }
    if (seed) out += ":seed=" + std::to_string(*seed);
    return out;
  }
};

/// Instantiate a generator spec.  Random families consume the spec seed
/// (default 0); identical specs yield identical graphs.
inline Graph generate(const GeneratorSpec& spec) {
  auto want = [&](std::size_t count) {
    if (spec.params.size() != count)
      throw std::invalid_argument("family '" + spec.family + "' needs " + std::to_string(count) +
                                  " parameter(s)");
  };
  const std::string& f = spec.family;
  if (f == "complete") {
    want(1);
    return complete_graph(spec.params[0]);
  }
  if (f == "complete_multipartite") {
    if (spec.params.empty()) throw std::invalid_argument("complete_multipartite needs part sizes");
    return complete_multipartite(spec.params);
  }
  if (f == "rook") {
    want(2);
    return rook_graph(spec.params[0], spec.params[1]);
  }
  if (f == "rook_complement") {
    want(2);
    return rook_complement(spec.params[0], spec.params[1]);
  }
  if (f == "paw") {
    want(0);
    return paw_graph();
  }
  if (f == "cycle") {
    want(1);
    return cycle_graph(spec.params[0]);
  }
  if (f == "star") {
    want(1);
    return star_graph(spec.params[0]);
  }
  if (f == "path") {
    want(1);
    return path_graph(spec.params[0]);
  }
  if (f == "random_cograph") {
    want(1);
    SplitMix64 rng(spec.seed.value_or(0));
    return random_cograph(spec.params[0], rng);
  }
  if (f == "random_splitgraph") {
    want(1);
    SplitMix64 rng(spec.seed.value_or(0));
    return random_splitgraph(spec.params[0], rng);
  }
  throw std::invalid_argument("unknown generator family '" + f + "'");
}

}  // namespace capri
