#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tutte/error.hpp"
#include "tutte/graph.hpp"
#include "tutte/matrix.hpp"
#include "tutte/partition.hpp"
#include "tutte/polynomial.hpp"
#include "tutte/rational.hpp"

namespace tutte {

/// Edge budget for the subset-enumeration routines; TUTTE_MAX_ORACLE_EDGES.
inline std::size_t max_oracle_edges() {
  if (const char* env = std::getenv("TUTTE_MAX_ORACLE_EDGES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 30) return static_cast<std::size_t>(v);
  }
  return 20;
}

/// T(G;x,y) as a polynomial in x and y.
struct TuttePoly {
  MultiPoly poly;

  Rational evaluate(const Rational& x, const Rational& y) const {
    return tutte::evaluate(poly, Assignment{{Var::X, x}, {Var::Y, y}});
  }
  std::string to_string() const { return poly.to_string(); }
  friend bool operator==(const TuttePoly&, const TuttePoly&) = default;
};

/// f(G;t,x,y) as a polynomial in t, x and y.
struct NegamiPoly {
  MultiPoly poly;

  std::string to_string() const { return poly.to_string(); }
  friend bool operator==(const NegamiPoly&, const NegamiPoly&) = default;
};

/// S[i] = number of spanning forests with exactly i trees, for i = 0..|V|.
struct ForestCounts {
  std::vector<mpz_class> S;
};

enum class EdgeOrder { Ascending, Descending };

namespace detail {

inline MultiPoly x_minus_1() { return MultiPoly::variable(Var::X) - MultiPoly(1); }
inline MultiPoly y_minus_1() { return MultiPoly::variable(Var::Y) - MultiPoly(1); }

inline void require_oracle_size(const Multigraph& g) {
  if (g.edge_count() > max_oracle_edges())
    throw Error(ErrorCode::TooLarge, std::to_string(g.edge_count()) + " edges exceeds the enumeration budget of " +
                                         std::to_string(max_oracle_edges()));
}

/// Union-find over a fixed vertex count that tracks the component count.
class Dsu {
 public:
  explicit Dsu(std::size_t n) : parent_(n), components_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  /// Returns false when a and b were already connected.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    --components_;
    return true;
  }
  std::size_t components() const { return components_; }

 private:
  std::vector<std::size_t> parent_;
  std::size_t components_;
};

/// Calls f(subset_mask, dsu, edge_count, acyclic) for every spanning subgraph.
template <typename F>
void for_each_spanning_subgraph(const IndexedGraph& g, F&& f) {
  const std::size_t m = g.edges.size();
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Dsu dsu(g.vertex_count);
    std::size_t count = 0;
    bool acyclic = true;
    for (std::size_t e = 0; e < m; ++e) {
      if (!(mask >> e & 1U)) continue;
      ++count;
      if (!dsu.unite(g.edges[e].first, g.edges[e].second)) acyclic = false;
    }
    f(mask, dsu, count, acyclic);
  }
}

inline MultiPoly expand_shifted(const std::map<std::pair<unsigned, unsigned>, mpz_class>& counts) {
  // sum of c * (x-1)^a (y-1)^b
  MultiPoly out;
  std::vector<MultiPoly> xp{MultiPoly(1)}, yp{MultiPoly(1)};
  for (const auto& [ab, c] : counts) {
    while (xp.size() <= ab.first) xp.push_back(xp.back() * x_minus_1());
    while (yp.size() <= ab.second) yp.push_back(yp.back() * y_minus_1());
    out += Rational(c) * (xp[ab.first] * yp[ab.second]);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Deletion-contraction on a multiplicity matrix.

/// Loopless multigraph as a symmetric multiplicity matrix.
struct MultGraph {
  std::size_t n = 0;
  std::vector<std::uint32_t> mult;  // n*n, zero diagonal

  std::uint32_t& at(std::size_t i, std::size_t j) { return mult[i * n + j]; }
  std::uint32_t at(std::size_t i, std::size_t j) const { return mult[i * n + j]; }

  std::uint64_t degree(std::size_t i) const {
    std::uint64_t d = 0;
    for (std::size_t j = 0; j < n; ++j) d += at(i, j);
    return d;
  }

  std::string key() const {
    std::string k;
    k.reserve(1 + n * (n - 1) / 2 * 2);
    k.push_back(static_cast<char>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        auto m = at(i, j);
        k.push_back(static_cast<char>(m & 0xFF));
        k.push_back(static_cast<char>(m >> 8));
      }
    return k;
  }

  /// Vertex subset induced copy.
  MultGraph induced(const std::vector<std::size_t>& keep) const {
    MultGraph out{keep.size(), std::vector<std::uint32_t>(keep.size() * keep.size(), 0)};
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j) out.at(i, j) = at(keep[i], keep[j]);
    return out;
  }

  /// Removes every u-v edge and merges v into u.
  MultGraph merge(std::size_t u, std::size_t v) const {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (i != v) keep.push_back(i);
    MultGraph out = induced(keep);
    const std::size_t nu = u < v ? u : u - 1;
    for (std::size_t i = 0; i < keep.size(); ++i) {
      if (i == nu) continue;
      out.at(nu, i) += at(v, keep[i]);
      out.at(i, nu) = out.at(nu, i);
    }
    out.at(nu, nu) = 0;
    return out;
  }

  MultGraph without(std::size_t u, std::size_t v) const {
    MultGraph out = *this;
    out.at(u, v) = out.at(v, u) = 0;
    return out;
  }

  /// Connected components, each as a sorted vertex list.
  std::vector<std::vector<std::size_t>> components() const {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::vector<std::size_t> stack{s};
      comp[s] = static_cast<int>(out.size() - 1);
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        out.back().push_back(v);
        for (std::size_t w = 0; w < n; ++w)
          if (at(v, w) && comp[w] < 0) {
            comp[w] = comp[s];
            stack.push_back(w);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  /// Some vertex pair whose edge class is a bridge, if any (Tarjan lowpoint).
  std::optional<std::pair<std::size_t, std::size_t>> find_bridge() const {
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    std::optional<std::pair<std::size_t, std::size_t>> found;
    // Iterative DFS: frame = (vertex, parent, next neighbour)
    struct Frame { std::size_t v; std::size_t parent; std::size_t next; };
    for (std::size_t s = 0; s < n && !found; ++s) {
      if (disc[s] >= 0) continue;
      std::vector<Frame> stack{{s, SIZE_MAX, 0}};
      disc[s] = low[s] = timer++;
      while (!stack.empty() && !found) {
        Frame& f = stack.back();
        if (f.next < n) {
          std::size_t w = f.next++;
          if (!at(f.v, w) || w == f.parent) continue;
          if (disc[w] < 0) {
            disc[w] = low[w] = timer++;
            stack.push_back({w, f.v, 0});
          } else {
            low[f.v] = std::min(low[f.v], disc[w]);
          }
        } else {
          std::size_t v = f.v, p = f.parent;
          stack.pop_back();
          if (p != SIZE_MAX) {
            low[p] = std::min(low[p], low[v]);
            if (low[v] > disc[p]) found = std::make_pair(p, v);
          }
        }
      }
    }
    return found;
  }
};

inline MultGraph to_mult_graph(const IndexedGraph& g, std::size_t& loops) {
  MultGraph m{g.vertex_count, std::vector<std::uint32_t>(g.vertex_count * g.vertex_count, 0)};
  loops = 0;
  for (auto [a, b] : g.edges) {
    if (a == b) {
      ++loops;
      continue;
    }
    ++m.at(a, b);
    ++m.at(b, a);
  }
  return m;
}

/// Dense bivariate polynomial with big-integer coefficients (Tutte values).
class BiPoly {
 public:
  BiPoly() = default;
  static BiPoly one() { BiPoly p; p.c_ = {{mpz_class(1)}}; return p; }

  /// x + y + ... + y^(k-1) when `bridge`, else 1 + y + ... + y^(k-1).
  static BiPoly class_factor(std::uint32_t k, bool bridge) {
    BiPoly p;
    p.c_.assign(2, std::vector<mpz_class>(k, mpz_class(0)));
    p.c_[0][0] = bridge ? 0 : 1;
    for (std::uint32_t j = 1; j < k; ++j) p.c_[0][j] = 1;
    if (bridge) p.c_[1][0] = 1;
    p.trim();
    return p;
  }

  BiPoly& operator+=(const BiPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
      if (c_[i].size() < o.c_[i].size()) c_[i].resize(o.c_[i].size(), mpz_class(0));
      for (std::size_t j = 0; j < o.c_[i].size(); ++j) c_[i][j] += o.c_[i][j];
    }
    return *this;
  }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly out;
    if (a.c_.empty() || b.c_.empty()) return out;
    std::size_t ymax = 0;
    for (const auto& r : a.c_) ymax = std::max(ymax, r.size());
    std::size_t ymaxb = 0;
    for (const auto& r : b.c_) ymaxb = std::max(ymaxb, r.size());
    out.c_.assign(a.c_.size() + b.c_.size() - 1, std::vector<mpz_class>(ymax + ymaxb, mpz_class(0)));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < a.c_[i].size(); ++j) {
        if (a.c_[i][j] == 0) continue;
        for (std::size_t k = 0; k < b.c_.size(); ++k)
          for (std::size_t l = 0; l < b.c_[k].size(); ++l)
            if (b.c_[k][l] != 0) out.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
      }
    out.trim();
    return out;
  }

  /// Multiplies by y^k.
  BiPoly shifted_y(std::size_t k) const {
    BiPoly out = *this;
    for (auto& r : out.c_) r.insert(r.begin(), k, mpz_class(0));
    return out;
  }

  MultiPoly to_multipoly() const {
    MultiPoly p;
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < c_[i].size(); ++j)
        if (c_[i][j] != 0) p.add_term(Monomial{0, static_cast<unsigned>(i), static_cast<unsigned>(j), 0, 0}, Rational(c_[i][j]));
    return p;
  }

 private:
  void trim() {
    for (auto& r : c_)
      while (!r.empty() && r.back() == 0) r.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
  }

  std::vector<std::vector<mpz_class>> c_;  // c_[i][j] = coeff of x^i y^j
};

class TutteDc {
 public:
  BiPoly solve(const MultGraph& g0) {
    // Isolated vertices do not change T; drop them.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g0.n; ++i)
      if (g0.degree(i)) keep.push_back(i);
    if (keep.size() < 2) return BiPoly::one();
    MultGraph g = keep.size() == g0.n ? g0 : g0.induced(keep);

    auto comps = g.components();
    if (comps.size() > 1) {
      BiPoly out = BiPoly::one();
      for (const auto& c : comps) out = out * solve(g.induced(c));
      return out;
    }

    std::string key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    BiPoly result;
    if (auto bridge = g.find_bridge()) {
      auto [u, v] = *bridge;
      result = BiPoly::class_factor(g.at(u, v), true) * solve(g.merge(u, v));
    } else {
      // Branch on a parallel class at a vertex of minimum degree.
      std::size_t u = 0;
      for (std::size_t i = 1; i < g.n; ++i)
        if (g.degree(i) < g.degree(u)) u = i;
      std::size_t v = 0;
      while (v < g.n && !g.at(u, v)) ++v;
      const auto k = g.at(u, v);
      result = solve(g.without(u, v));
      result += BiPoly::class_factor(k, false) * solve(g.merge(u, v));
    }
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::unordered_map<std::string, BiPoly> memo_;
};

class NegamiDc {
 public:
  explicit NegamiDc(EdgeOrder order) : order_(order) {}

  MultiPoly solve(const MultGraph& g0) {
    const MultiPoly t = MultiPoly::variable(Var::T);
    std::vector<std::size_t> keep;
    std::size_t isolated = 0;
    for (std::size_t i = 0; i < g0.n; ++i) {
      if (g0.degree(i)) keep.push_back(i);
      else ++isolated;
    }
    MultiPoly factor = pow(t, static_cast<unsigned>(isolated));
    if (keep.empty()) return factor;
    MultiPoly rest = solve_connected_parts(keep.size() == g0.n ? g0 : g0.induced(keep));
    return factor * rest;
  }

 private:
  MultiPoly solve_connected_parts(const MultGraph& g) {
    auto comps = g.components();
    if (comps.size() > 1) {
      MultiPoly out(1);
      for (const auto& c : comps) out *= solve(g.induced(c));
      return out;
    }
    std::string key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::size_t u = 0, v = 0;
    bool found = false;
    for (std::size_t a = 0; a < g.n && !found; ++a) {
      std::size_t i = order_ == EdgeOrder::Ascending ? a : g.n - 1 - a;
      for (std::size_t b = 0; b < g.n; ++b) {
        std::size_t j = order_ == EdgeOrder::Ascending ? b : g.n - 1 - b;
        if (i != j && g.at(i, j)) {
          u = i;
          v = j;
          found = true;
          break;
        }
      }
    }
    // f(G) = ((x+y)^k - y^k) f(G/uv) + y^k f(G - uv) for a class of k parallel edges.
    const auto k = g.at(u, v);
    const MultiPoly x = MultiPoly::variable(Var::X);
    const MultiPoly y = MultiPoly::variable(Var::Y);
    MultiPoly yk = pow(y, k);
    MultiPoly result = (pow(x + y, k) - yk) * solve(g.merge(u, v)) + yk * solve(g.without(u, v));
    memo_.emplace(std::move(key), result);
    return result;
  }

  EdgeOrder order_;
  std::unordered_map<std::string, MultiPoly> memo_;
};

}  // namespace detail

/// T(G) by direct enumeration of all 2^|E| spanning subgraphs.
inline TuttePoly tutte_oracle(const Multigraph& g) {
  detail::require_oracle_size(g);
  const auto ig = g.indexed();
  const std::size_t omega_g = g.components();
  const std::size_t nv = g.vertex_count();
  std::map<std::pair<unsigned, unsigned>, mpz_class> counts;
  detail::for_each_spanning_subgraph(ig, [&](std::uint64_t, detail::Dsu& dsu, std::size_t edges, bool) {
    const std::size_t omega = dsu.components();
    counts[{static_cast<unsigned>(omega - omega_g), static_cast<unsigned>(omega + edges - nv)}] += 1;
  });
  return {detail::expand_shifted(counts)};
}

/// T(G) by deletion-contraction with loop/bridge peeling and memoization.
inline TuttePoly tutte_dc(const Multigraph& g) {
  std::size_t loops = 0;
  auto mg = detail::to_mult_graph(g.indexed(), loops);
  detail::TutteDc dc;
  return {dc.solve(mg).shifted_y(loops).to_multipoly()};
}

inline Rational tutte_value(const Multigraph& g, const Rational& x, const Rational& y) {
  return tutte_dc(g).evaluate(x, y);
}

/// f(G) by the subgraph expansion sum of t^ω(A) x^|E(A)| y^(|E|-|E(A)|).
inline NegamiPoly negami_expansion(const Multigraph& g) {
  detail::require_oracle_size(g);
  const auto ig = g.indexed();
  const unsigned m = static_cast<unsigned>(g.edge_count());
  std::map<Monomial, mpz_class> counts;
  detail::for_each_spanning_subgraph(ig, [&](std::uint64_t, detail::Dsu& dsu, std::size_t edges, bool) {
    auto e = static_cast<unsigned>(edges);
    counts[Monomial{static_cast<unsigned>(dsu.components()), e, m - e, 0, 0}] += 1;
  });
  MultiPoly p;
  for (const auto& [mono, c] : counts) p.add_term(mono, Rational(c));
  return {p};
}

/// f(G) by the recurrence f(G) = x f(G/e) + y f(G-e), f(n isolated) = t^n.
inline NegamiPoly negami_recurrence(const Multigraph& g, EdgeOrder order = EdgeOrder::Ascending) {
  std::size_t loops = 0;
  auto mg = detail::to_mult_graph(g.indexed(), loops);
  detail::NegamiDc dc(order);
  const MultiPoly loop_factor = pow(MultiPoly::variable(Var::X) + MultiPoly::variable(Var::Y), static_cast<unsigned>(loops));
  return {loop_factor * dc.solve(mg)};
}

enum class NegamiMode { Recurrence, Expansion };

inline NegamiPoly negami(const Multigraph& g, NegamiMode mode = NegamiMode::Recurrence) {
  return mode == NegamiMode::Expansion ? negami_expansion(g) : negami_recurrence(g);
}

/// f(G; (x-1)(y-1), y-1, 1) == (y-1)^|V| (x-1)^ω T(G;x,y), checked symbolically.
inline bool negami_tutte_check(const Multigraph& g) {
  const MultiPoly f = negami_recurrence(g).poly;
  std::array<std::optional<MultiPoly>, kNumVars> images;
  images[static_cast<std::size_t>(Var::T)] = detail::x_minus_1() * detail::y_minus_1();
  images[static_cast<std::size_t>(Var::X)] = detail::y_minus_1();
  images[static_cast<std::size_t>(Var::Y)] = MultiPoly(1);
  const MultiPoly lhs = substitute(f, images);
  const MultiPoly rhs = pow(detail::y_minus_1(), static_cast<unsigned>(g.vertex_count())) *
                        pow(detail::x_minus_1(), static_cast<unsigned>(g.components())) * tutte_dc(g).poly;
  return lhs == rhs;
}

namespace detail {

inline std::size_t partition_index(Dsu& dsu, const std::vector<std::size_t>& terminal_idx,
                                   const std::map<std::vector<std::uint8_t>, std::size_t>& lookup,
                                   std::size_t& blocks) {
  std::vector<std::uint8_t> rgs;
  std::vector<std::size_t> roots;
  for (auto ti : terminal_idx) {
    auto r = dsu.find(ti);
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it == roots.end()) {
      rgs.push_back(static_cast<std::uint8_t>(roots.size()));
      roots.push_back(r);
    } else {
      rgs.push_back(static_cast<std::uint8_t>(it - roots.begin()));
    }
  }
  blocks = roots.size();
  return lookup.at(rgs);
}

inline std::map<std::vector<std::uint8_t>, std::size_t> rgs_lookup(const LatticeIndex& lattice) {
  std::map<std::vector<std::uint8_t>, std::size_t> m;
  for (std::size_t i = 0; i < lattice.size(); ++i) m.emplace(lattice[i].rgs(), i);
  return m;
}

inline std::vector<std::size_t> terminal_positions(const Multigraph& k) {
  if (k.terminals().empty()) throw Error(ErrorCode::TerminalMissing, "graph has no terminals");
  std::vector<std::size_t> idx;
  for (const auto& t : k.terminals()) idx.push_back(k.vertex_index(t));
  return idx;
}

}  // namespace detail

/// f_A(K) for every partition A of K's terminals, in canonical lattice order.
inline std::vector<MultiPoly> aux_f_all(const Multigraph& k) {
  detail::require_oracle_size(k);
  const auto tidx = detail::terminal_positions(k);
  const LatticeIndex lattice(k.terminals());
  const auto lookup = detail::rgs_lookup(lattice);
  const unsigned m = static_cast<unsigned>(k.edge_count());
  std::vector<std::map<Monomial, mpz_class>> counts(lattice.size());
  detail::for_each_spanning_subgraph(k.indexed(), [&](std::uint64_t, detail::Dsu& dsu, std::size_t edges, bool) {
    std::size_t blocks = 0;
    auto idx = detail::partition_index(dsu, tidx, lookup, blocks);
    auto e = static_cast<unsigned>(edges);
    counts[idx][Monomial{static_cast<unsigned>(dsu.components() - blocks), e, m - e, 0, 0}] += 1;
  });
  std::vector<MultiPoly> out(lattice.size());
  for (std::size_t i = 0; i < lattice.size(); ++i)
    for (const auto& [mono, c] : counts[i]) out[i].add_term(mono, Rational(c));
  return out;
}

inline MultiPoly aux_f(const Multigraph& k, const Partition& a) {
  const LatticeIndex lattice(k.terminals());
  if (a.ground() != k.terminals()) throw Error(ErrorCode::InvalidPartition, "partition is not over the terminals");
  return aux_f_all(k)[lattice.index_of(a)];
}

/// T_A(K; x, 1) for every partition A: sum over spanning forests Y with
/// P(Y) = A of (x-1)^(ω(Y)-|A|).
inline std::vector<MultiPoly> aux_T_all(const Multigraph& k) {
  detail::require_oracle_size(k);
  const auto tidx = detail::terminal_positions(k);
  const LatticeIndex lattice(k.terminals());
  const auto lookup = detail::rgs_lookup(lattice);
  std::vector<std::map<std::pair<unsigned, unsigned>, mpz_class>> counts(lattice.size());
  detail::for_each_spanning_subgraph(k.indexed(), [&](std::uint64_t, detail::Dsu& dsu, std::size_t, bool acyclic) {
    if (!acyclic) return;
    std::size_t blocks = 0;
    auto idx = detail::partition_index(dsu, tidx, lookup, blocks);
    counts[idx][{static_cast<unsigned>(dsu.components() - blocks), 0U}] += 1;
  });
  std::vector<MultiPoly> out;
  out.reserve(lattice.size());
  for (const auto& c : counts) out.push_back(detail::expand_shifted(c));
  return out;
}

inline MultiPoly aux_T(const Multigraph& k, const Partition& a) {
  const LatticeIndex lattice(k.terminals());
  if (a.ground() != k.terminals()) throw Error(ErrorCode::InvalidPartition, "partition is not over the terminals");
  return aux_T_all(k)[lattice.index_of(a)];
}

inline ForestCounts forest_counts(const Multigraph& g) {
  detail::require_oracle_size(g);
  ForestCounts fc{std::vector<mpz_class>(g.vertex_count() + 1, mpz_class(0))};
  detail::for_each_spanning_subgraph(g.indexed(), [&](std::uint64_t, detail::Dsu& dsu, std::size_t, bool acyclic) {
    if (acyclic) fc.S[dsu.components()] += 1;
  });
  return fc;
}

/// sum_i S_i s^i in the variable `v`.
inline MultiPoly forest_generating_poly(const ForestCounts& fc, const MultiPoly& base) {
  MultiPoly out;
  MultiPoly p(1);
  for (std::size_t i = 0; i < fc.S.size(); ++i) {
    if (i) p *= base;
    if (fc.S[i] != 0) out += Rational(fc.S[i]) * p;
  }
  return out;
}

/// Spanning-tree count from a cofactor of the Laplacian (loops ignored).
inline mpz_class kirchhoff_count(const Multigraph& g) {
  if (g.components() != 1) throw Error(ErrorCode::Disconnected, "spanning trees need a connected graph");
  const std::size_t n = g.vertex_count();
  if (n == 1) return 1;
  RatMatrix lap(n);
  for (const auto& e : g.edges()) {
    if (e.is_loop()) continue;
    auto a = g.vertex_index(e.a), b = g.vertex_index(e.b);
    lap(a, a) += Rational(1);
    lap(b, b) += Rational(1);
    lap(a, b) -= Rational(1);
    lap(b, a) -= Rational(1);
  }
  RatMatrix minor = RatMatrix::generate(n - 1, n - 1, [&](std::size_t i, std::size_t j) { return lap(i, j); });
  return determinant(minor).numerator();
}

/// Substitutes t := s*zeta, x := zeta, y := 1 in a Negami-type polynomial.
inline MultiPoly to_limit_variables(const MultiPoly& f) {
  std::array<std::optional<MultiPoly>, kNumVars> images;
  const MultiPoly zeta = MultiPoly::variable(Var::Zeta);
  images[static_cast<std::size_t>(Var::T)] = MultiPoly::variable(Var::S) * zeta;
  images[static_cast<std::size_t>(Var::X)] = zeta;
  images[static_cast<std::size_t>(Var::Y)] = MultiPoly(1);
  return substitute(f, images);
}

/// The zeta^|V| coefficient of f(G; s*zeta, zeta, 1) equals sum_i S_i s^i.
inline bool limit_lemma_check(const Multigraph& g) {
  const MultiPoly lifted = to_limit_variables(negami_recurrence(g).poly);
  const MultiPoly leading = coefficient(lifted, Var::Zeta, static_cast<unsigned>(g.vertex_count()));
  return leading == forest_generating_poly(forest_counts(g), MultiPoly::variable(Var::S));
}

/// The zeta^(|V(K)|-|A|) coefficient of f_A(K; s*zeta, zeta, 1) equals
/// T_A(K; s+1, 1).
inline bool limit_lemma_check(const Multigraph& k, const Partition& a) {
  const MultiPoly lifted = to_limit_variables(aux_f(k, a));
  const MultiPoly leading = coefficient(lifted, Var::Zeta, static_cast<unsigned>(k.vertex_count() - a.blocks()));
  const MultiPoly shifted = substitute(aux_T(k, a), Var::X, MultiPoly::variable(Var::S) + MultiPoly(1));
  return leading == shifted;
}

}  // namespace tutte
