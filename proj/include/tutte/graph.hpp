#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/partition.hpp"

namespace tutte {

/// Undirected edge with endpoints stored in lexicographic order. A loop has
/// equal endpoints.
struct Edge {
  std::string a;
  std::string b;

  Edge() = default;
  Edge(std::string u, std::string v) : a(std::move(u)), b(std::move(v)) {
    if (b < a) std::swap(a, b);
  }

  bool is_loop() const { return a == b; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class EdgeClass { Loop, Bridge, Ordinary };

constexpr const char* to_string(EdgeClass c) {
  switch (c) {
    case EdgeClass::Loop: return "loop";
    case EdgeClass::Bridge: return "bridge";
    case EdgeClass::Ordinary: return "ordinary";
  }
  return "?";
}

/// Compact integer view of a multigraph used by the polynomial engines.
struct IndexedGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Labeled multigraph with loops and parallel edges and an ordered list of
/// terminal vertices. Immutable: every operation returns a new graph.
///
/// Vertices are kept sorted and edges are kept as a sorted multiset, so two
/// graphs compare equal exactly when their labeled structure agrees. An edge
/// is addressed by its position in edges().
class Multigraph {
 public:
  Multigraph() : Multigraph({"v"}, {}, {}) {}

  Multigraph(std::vector<std::string> vertices, std::vector<Edge> edges, std::vector<std::string> terminals = {})
      : vertices_(std::move(vertices)), edges_(std::move(edges)), terminals_(std::move(terminals)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.empty()) throw Error(ErrorCode::InvalidGraph, "a graph needs at least one vertex");
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
      throw Error(ErrorCode::InvalidGraph, "duplicate vertex label");
    for (const auto& e : edges_)
      if (!has_vertex(e.a) || !has_vertex(e.b))
        throw Error(ErrorCode::InvalidGraph, "edge endpoint not a vertex: " + e.a + "-" + e.b);
    std::sort(edges_.begin(), edges_.end());
    std::set<std::string> seen;
    for (const auto& t : terminals_) {
      if (!has_vertex(t)) throw Error(ErrorCode::InvalidGraph, "terminal not a vertex: " + t);
      if (!seen.insert(t).second) throw Error(ErrorCode::InvalidGraph, "duplicate terminal: " + t);
    }
  }

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::string>& terminals() const { return terminals_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_vertex(const std::string& v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  std::size_t vertex_index(const std::string& v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) throw Error(ErrorCode::InvalidGraph, "unknown vertex " + v);
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  /// Position of the first copy of edge {u,v}.
  std::size_t find_edge(const std::string& u, const std::string& v) const {
    Edge e(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) throw Error(ErrorCode::NoSuchEdge, "no edge " + u + "-" + v);
    return static_cast<std::size_t>(it - edges_.begin());
  }

  Multigraph with_terminals(std::vector<std::string> terminals) const {
    return Multigraph(vertices_, edges_, std::move(terminals));
  }

  IndexedGraph indexed() const {
    IndexedGraph g{vertices_.size(), {}};
    g.edges.reserve(edges_.size());
    for (const auto& e : edges_) g.edges.emplace_back(vertex_index(e.a), vertex_index(e.b));
    return g;
  }

  /// Component id for each vertex (position in vertices()).
  std::vector<std::size_t> component_labels() const {
    std::vector<std::size_t> parent(vertices_.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& e : edges_) {
      auto ra = root(parent, vertex_index(e.a));
      auto rb = root(parent, vertex_index(e.b));
      if (ra != rb) parent[ra] = rb;
    }
    std::vector<std::size_t> labels(vertices_.size());
    for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = root(parent, i);
    return labels;
  }

  /// Number of connected components; isolated vertices count.
  std::size_t components() const {
    auto labels = component_labels();
    std::sort(labels.begin(), labels.end());
    return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
  }

  Multigraph delete_edge(std::size_t e) const {
    check_edge(e);
    auto edges = edges_;
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
    return Multigraph(vertices_, std::move(edges), terminals_);
  }

  /// Merges the endpoints of a non-loop edge; the merged vertex keeps the
  /// smaller label and remaining parallel copies become loops.
  Multigraph contract_edge(std::size_t e) const {
    check_edge(e);
    if (edges_[e].is_loop()) throw Error(ErrorCode::LoopContraction, "cannot contract loop at " + edges_[e].a);
    const std::string keep = edges_[e].a;  // a < b by construction
    const std::string gone = edges_[e].b;
    std::vector<std::string> vertices;
    for (const auto& v : vertices_)
      if (v != gone) vertices.push_back(v);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (i == e) continue;
      auto rename = [&](const std::string& v) { return v == gone ? keep : v; };
      edges.emplace_back(rename(edges_[i].a), rename(edges_[i].b));
    }
    std::vector<std::string> terminals;
    for (const auto& t : terminals_) {
      const std::string& r = t == gone ? keep : t;
      if (std::find(terminals.begin(), terminals.end(), r) == terminals.end()) terminals.push_back(r);
    }
    return Multigraph(std::move(vertices), std::move(edges), std::move(terminals));
  }

  EdgeClass classify_edge(std::size_t e) const {
    check_edge(e);
    if (edges_[e].is_loop()) return EdgeClass::Loop;
    return delete_edge(e).components() > components() ? EdgeClass::Bridge : EdgeClass::Ordinary;
  }

  /// Collapses every block of a partition of the terminals to one vertex
  /// labeled by the block's smallest member. Terminals of the result are the
  /// block representatives, in block order.
  Multigraph identify(const Partition& p) const {
    if (p.ground() != terminals_) throw Error(ErrorCode::InvalidPartition, "partition is not over the terminals");
    std::map<std::string, std::string> rep;
    std::vector<std::string> terminals;
    for (const auto& block : p.block_labels()) {
      const std::string smallest = *std::min_element(block.begin(), block.end());
      for (const auto& v : block) rep[v] = smallest;
      terminals.push_back(smallest);
    }
    auto rename = [&](const std::string& v) {
      auto it = rep.find(v);
      return it == rep.end() ? v : it->second;
    };
    std::vector<std::string> vertices;
    for (const auto& v : vertices_)
      if (rename(v) == v) vertices.push_back(v);
    std::vector<Edge> edges;
    edges.reserve(edges_.size());
    for (const auto& e : edges_) edges.emplace_back(rename(e.a), rename(e.b));
    return Multigraph(std::move(vertices), std::move(edges), std::move(terminals));
  }

  /// Partition of `u` by connected component.
  Partition induced_partition(const std::vector<std::string>& u) const {
    auto labels = component_labels();
    std::vector<std::size_t> blocks;
    for (const auto& t : u) {
      if (!has_vertex(t)) throw Error(ErrorCode::TerminalMissing, "terminal not in graph: " + t);
      blocks.push_back(labels[vertex_index(t)]);
    }
    return Partition::from_labels(u, blocks);
  }

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  static std::size_t root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }

  void check_edge(std::size_t e) const {
    if (e >= edges_.size()) throw Error(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e) + " out of range");
  }

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::string> terminals_;
};

/// Union of K and H along the shared terminal list U.
inline Multigraph glue(const Multigraph& k, const Multigraph& h, const std::vector<std::string>& u) {
  if (k.terminals() != u || h.terminals() != u)
    throw Error(ErrorCode::TerminalMismatch, "both parts must carry the shared terminal list in the same order");
  std::set<std::string> shared(u.begin(), u.end());
  std::vector<std::string> vertices = k.vertices();
  for (const auto& v : h.vertices()) {
    if (shared.count(v)) continue;
    if (k.has_vertex(v)) throw Error(ErrorCode::SharedNonTerminal, "vertex " + v + " occurs in both parts");
    vertices.push_back(v);
  }
  std::vector<Edge> edges = k.edges();
  edges.insert(edges.end(), h.edges().begin(), h.edges().end());
  return Multigraph(std::move(vertices), std::move(edges), u);
}

/// A glued instance: parts K and H sharing the terminal list.
struct SplitInstance {
  Multigraph k;
  Multigraph h;
  std::vector<std::string> terminals;

  Multigraph glued() const { return glue(k, h, terminals); }
};

}  // namespace tutte
