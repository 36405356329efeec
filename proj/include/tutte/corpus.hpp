#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tutte/graph.hpp"

namespace tutte::corpus {

/// Seeded generator with a portable uniform draw (std distributions are not
/// reproducible across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::size_t uniform(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

inline std::vector<std::string> terminal_labels(std::size_t n) {
  std::vector<std::string> u;
  for (std::size_t i = 1; i <= n; ++i) u.push_back("u" + std::to_string(i));
  return u;
}

/// Random connected part on the given terminals plus internal vertices named
/// prefix1, prefix2, ...: a random spanning tree followed by extra random
/// edges (parallel edges and the occasional loop allowed).
inline Multigraph random_part(Rng& rng, const std::string& prefix, const std::vector<std::string>& terminals,
                              std::size_t max_vertices = 8, std::size_t max_edges = 12) {
  const std::size_t n = terminals.size();
  const std::size_t internal = rng.uniform(n == 1 ? 1 : 0, max_vertices - n);
  std::vector<std::string> vertices = terminals;
  for (std::size_t i = 1; i <= internal; ++i) vertices.push_back(prefix + std::to_string(i));
  const std::size_t v = vertices.size();

  std::vector<std::size_t> order(v);
  for (std::size_t i = 0; i < v; ++i) order[i] = i;
  for (std::size_t i = v; i > 1; --i) std::swap(order[i - 1], order[rng.uniform(0, i - 1)]);

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < v; ++i) edges.emplace_back(vertices[order[i]], vertices[order[rng.uniform(0, i - 1)]]);
  const std::size_t target = rng.uniform(edges.size(), std::max(edges.size(), std::min(max_edges, edges.size() + 6)));
  while (edges.size() < target) {
    const std::size_t a = rng.uniform(0, v - 1);
    std::size_t b = rng.uniform(0, v - 1);
    if (a == b && rng.uniform(0, 9) != 0) b = (a + 1 + rng.uniform(0, v - 2)) % v;
    edges.emplace_back(vertices[a], vertices[b]);
  }
  return Multigraph(std::move(vertices), std::move(edges), terminals);
}

inline SplitInstance random_split(Rng& rng, std::size_t n, std::size_t max_vertices = 8, std::size_t max_edges = 12) {
  const auto u = terminal_labels(n);
  Multigraph k = random_part(rng, "k", u, max_vertices, max_edges);
  Multigraph h = random_part(rng, "h", u, max_vertices, max_edges);
  return {std::move(k), std::move(h), u};
}

/// Seed-deterministic corpus; instance i uses terminal count ns[i % ns.size()].
inline std::vector<SplitInstance> random_corpus(std::uint64_t seed, std::size_t count,
                                                const std::vector<std::size_t>& ns = {2, 3, 4}) {
  Rng rng(seed);
  std::vector<SplitInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_split(rng, ns[i % ns.size()]));
  return out;
}

/// Simple part with exactly `edge_count` distinct non-loop edges on
/// `vertex_count` vertices (terminals first), connected through a path.
inline Multigraph dense_part(Rng& rng, const std::string& prefix, const std::vector<std::string>& terminals,
                             std::size_t vertex_count, std::size_t edge_count) {
  std::vector<std::string> vertices = terminals;
  for (std::size_t i = 1; vertices.size() < vertex_count; ++i) vertices.push_back(prefix + std::to_string(i));
  std::set<std::pair<std::size_t, std::size_t>> chosen;
  for (std::size_t i = 1; i < vertex_count; ++i) chosen.emplace(i - 1, i);
  const std::size_t max_simple = vertex_count * (vertex_count - 1) / 2;
  edge_count = std::min(edge_count, max_simple);
  while (chosen.size() < edge_count) {
    std::size_t a = rng.uniform(0, vertex_count - 1), b = rng.uniform(0, vertex_count - 1);
    if (a == b) continue;
    chosen.emplace(std::min(a, b), std::max(a, b));
  }
  std::vector<Edge> edges;
  for (auto [a, b] : chosen) edges.emplace_back(vertices[a], vertices[b]);
  return Multigraph(std::move(vertices), std::move(edges), terminals);
}

inline SplitInstance dense_split(std::uint64_t seed, std::size_t n, std::size_t vertex_count, std::size_t edge_count) {
  Rng rng(seed);
  const auto u = terminal_labels(n);
  return {dense_part(rng, "k", u, vertex_count, edge_count), dense_part(rng, "h", u, vertex_count, edge_count), u};
}

/// Ladder with k rungs split at its middle rung: both halves share the two
/// middle-rung vertices.
inline SplitInstance ladder_split(std::size_t rungs) {
  const std::size_t mid = rungs / 2;
  auto side = [&](const std::string& prefix, std::size_t from, std::size_t to) {
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    auto top = [&](std::size_t i) { return i == mid ? std::string("u1") : prefix + "a" + std::to_string(i); };
    auto bottom = [&](std::size_t i) { return i == mid ? std::string("u2") : prefix + "b" + std::to_string(i); };
    for (std::size_t i = from; i <= to; ++i) {
      vertices.push_back(top(i));
      vertices.push_back(bottom(i));
      if (i != mid) edges.emplace_back(top(i), bottom(i));
      if (i > from) {
        edges.emplace_back(top(i - 1), top(i));
        edges.emplace_back(bottom(i - 1), bottom(i));
      }
    }
    return Multigraph(std::move(vertices), std::move(edges), {"u1", "u2"});
  };
  Multigraph k = side("k", 0, mid);
  Multigraph h = side("h", mid, rungs - 1);
  // The middle rung belongs to K.
  std::vector<Edge> ke = k.edges();
  ke.emplace_back("u1", "u2");
  k = Multigraph(k.vertices(), std::move(ke), {"u1", "u2"});
  return {std::move(k), std::move(h), {"u1", "u2"}};
}

/// Two paths u1-k1-u2 and u1-h1-u2; glued they form the 4-cycle.
inline SplitInstance four_cycle_split() {
  Multigraph k({"u1", "k1", "u2"}, {{"u1", "k1"}, {"k1", "u2"}}, {"u1", "u2"});
  Multigraph h({"u1", "h1", "u2"}, {{"u1", "h1"}, {"h1", "u2"}}, {"u1", "u2"});
  return {std::move(k), std::move(h), {"u1", "u2"}};
}

inline Multigraph triangle() { return Multigraph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}); }

}  // namespace tutte::corpus
