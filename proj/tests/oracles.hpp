#pragma once

// Test-only reference computations. They deliberately avoid the library's
// algorithms (no union-find, no elimination, no restricted-growth strings) so
// that agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tutte/graph.hpp"
#include "tutte/rational.hpp"

namespace oracle {

using Block = std::set<int>;
using SetPartition = std::set<Block>;

/// Components of the spanning subgraph given by `mask`, by depth-first search.
inline int components(const tutte::Multigraph& g, std::uint64_t mask) {
  const auto& vs = g.vertices();
  std::map<std::string, std::vector<std::string>> adj;
  for (std::size_t e = 0; e < g.edges().size(); ++e)
    if (mask >> e & 1U) {
      adj[g.edges()[e].a].push_back(g.edges()[e].b);
      adj[g.edges()[e].b].push_back(g.edges()[e].a);
    }
  std::set<std::string> seen;
  int count = 0;
  for (const auto& s : vs) {
    if (seen.count(s)) continue;
    ++count;
    std::vector<std::string> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& w : adj[v])
        if (seen.insert(w).second) stack.push_back(w);
    }
  }
  return count;
}

/// T(G; x, y) evaluated at a point straight from the subgraph sum.
inline tutte::Rational tutte_at(const tutte::Multigraph& g, const tutte::Rational& x, const tutte::Rational& y) {
  const int omega_g = components(g, (std::uint64_t{1} << g.edge_count()) - 1);
  const int nv = static_cast<int>(g.vertex_count());
  tutte::Rational sum(0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
    const int w = components(g, mask);
    const int e = __builtin_popcountll(mask);
    tutte::Rational term(1);
    for (int i = 0; i < w - omega_g; ++i) term *= x - tutte::Rational(1);
    for (int i = 0; i < w + e - nv; ++i) term *= y - tutte::Rational(1);
    sum += term;
  }
  return sum;
}

/// S[i]: spanning forests with i trees (a subgraph is a forest iff |E| = |V| - ω).
inline std::vector<long> forest_counts(const tutte::Multigraph& g) {
  std::vector<long> s(g.vertex_count() + 1, 0);
  const int nv = static_cast<int>(g.vertex_count());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
    const int w = components(g, mask);
    if (__builtin_popcountll(mask) == nv - w) ++s[w];
  }
  return s;
}

/// All set partitions of {1..n}, by inserting each element into an existing
/// block or a new one.
inline std::vector<SetPartition> all_partitions(int n) {
  std::vector<std::vector<Block>> acc{{}};
  for (int e = 1; e <= n; ++e) {
    std::vector<std::vector<Block>> next;
    for (const auto& p : acc) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        auto q = p;
        q[b].insert(e);
        next.push_back(q);
      }
      auto q = p;
      q.push_back({e});
      next.push_back(q);
    }
    acc = std::move(next);
  }
  std::vector<SetPartition> out;
  for (const auto& p : acc) out.emplace_back(p.begin(), p.end());
  return out;
}

/// Finest common coarsening by repeatedly merging intersecting blocks.
inline SetPartition meet(const SetPartition& a, const SetPartition& b) {
  std::vector<Block> blocks(a.begin(), a.end());
  blocks.insert(blocks.end(), b.begin(), b.end());
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < blocks.size() && !merged; ++i)
      for (std::size_t j = i + 1; j < blocks.size() && !merged; ++j) {
        std::vector<int> common;
        std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                              std::back_inserter(common));
        if (!common.empty()) {
          blocks[i].insert(blocks[j].begin(), blocks[j].end());
          blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(j));
          merged = true;
        }
      }
  }
  return {blocks.begin(), blocks.end()};
}

/// Determinant by Laplace expansion along the first row (small matrices only).
inline tutte::Rational laplace_det(const std::vector<std::vector<tutte::Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return tutte::Rational(1);
  if (n == 1) return m[0][0];
  tutte::Rational sum(0);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<tutte::Rational>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      minor.emplace_back();
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) minor.back().push_back(m[r][k]);
    }
    const tutte::Rational term = m[0][c] * laplace_det(minor);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

}  // namespace oracle
