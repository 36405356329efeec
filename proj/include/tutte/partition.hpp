#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "tutte/error.hpp"

namespace tutte {

/// Upper bound on the terminal count; overridable through TUTTE_MAX_N.
inline std::size_t max_terminals() {
  if (const char* env = std::getenv("TUTTE_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 8) return static_cast<std::size_t>(v);
  }
  return 6;
}

/// Set partition of an ordered ground set, stored as a restricted-growth
/// string: rgs[0] = 0 and rgs[i] <= 1 + max(rgs[0..i-1]).
class Partition {
 public:
  Partition() = default;

  Partition(std::vector<std::string> ground, std::vector<std::uint8_t> rgs)
      : ground_(std::move(ground)), rgs_(std::move(rgs)) {
    if (ground_.size() != rgs_.size())
      throw Error(ErrorCode::InvalidPartition, "ground and rgs lengths differ");
    std::uint8_t next = 0;
    for (auto b : rgs_) {
      if (b > next) throw Error(ErrorCode::InvalidPartition, "not a restricted-growth string");
      if (b == next) ++next;
    }
    blocks_ = next;
  }

  /// Builds a partition from arbitrary block labels (one per ground element),
  /// renumbering them into restricted-growth form.
  static Partition from_labels(std::vector<std::string> ground, const std::vector<std::size_t>& labels) {
    std::map<std::size_t, std::uint8_t> renumber;
    std::vector<std::uint8_t> rgs;
    rgs.reserve(labels.size());
    for (auto l : labels) {
      auto [it, inserted] = renumber.try_emplace(l, static_cast<std::uint8_t>(renumber.size()));
      rgs.push_back(it->second);
    }
    return Partition(std::move(ground), std::move(rgs));
  }

  /// Builds a partition from explicit blocks of ground labels.
  static Partition from_blocks(std::vector<std::string> ground, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::size_t> labels(ground.size(), SIZE_MAX);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) throw Error(ErrorCode::InvalidPartition, "empty block");
      for (const auto& el : blocks[b]) {
        auto it = std::find(ground.begin(), ground.end(), el);
        if (it == ground.end()) throw Error(ErrorCode::InvalidPartition, "'" + el + "' is not in the ground set");
        auto pos = static_cast<std::size_t>(it - ground.begin());
        if (labels[pos] != SIZE_MAX) throw Error(ErrorCode::InvalidPartition, "'" + el + "' appears twice");
        labels[pos] = b;
      }
    }
    if (std::find(labels.begin(), labels.end(), SIZE_MAX) != labels.end())
      throw Error(ErrorCode::InvalidPartition, "blocks do not cover the ground set");
    return from_labels(std::move(ground), labels);
  }

  static Partition minimal(std::vector<std::string> ground) {
    std::vector<std::uint8_t> rgs(ground.size(), 0);
    return Partition(std::move(ground), std::move(rgs));
  }

  static Partition discrete(std::vector<std::string> ground) {
    std::vector<std::uint8_t> rgs(ground.size());
    std::iota(rgs.begin(), rgs.end(), std::uint8_t{0});
    return Partition(std::move(ground), std::move(rgs));
  }

  const std::vector<std::string>& ground() const { return ground_; }
  const std::vector<std::uint8_t>& rgs() const { return rgs_; }
  std::size_t size() const { return rgs_.size(); }
  std::size_t blocks() const { return blocks_; }
  std::size_t block_of(std::size_t i) const { return rgs_[i]; }

  /// Blocks as lists of ground positions, ordered by smallest member.
  std::vector<std::vector<std::size_t>> block_positions() const {
    std::vector<std::vector<std::size_t>> out(blocks_);
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(i);
    return out;
  }

  std::vector<std::vector<std::string>> block_labels() const {
    std::vector<std::vector<std::string>> out(blocks_);
    for (std::size_t i = 0; i < rgs_.size(); ++i) out[rgs_[i]].push_back(ground_[i]);
    return out;
  }

  /// True when every block of *this lies inside a block of `coarser`.
  bool refines(const Partition& coarser) const {
    std::vector<int> image(blocks_, -1);
    for (std::size_t i = 0; i < rgs_.size(); ++i) {
      int& img = image[rgs_[i]];
      if (img < 0) img = coarser.rgs_[i];
      else if (img != coarser.rgs_[i]) return false;
    }
    return true;
  }

  /// Positional text form, 1-based: "12|3|4".
  std::string to_string() const {
    std::string out;
    auto bl = block_positions();
    for (std::size_t b = 0; b < bl.size(); ++b) {
      if (b) out += "|";
      for (std::size_t i : bl[b]) {
        if (bl[b].size() > 1 && size() > 9 && i != bl[b].front()) out += ",";
        out += std::to_string(i + 1);
      }
    }
    return out;
  }

  /// Label text form: "{u1,u2}|{u3}".
  std::string to_label_string() const {
    std::string out;
    auto bl = block_labels();
    for (std::size_t b = 0; b < bl.size(); ++b) {
      if (b) out += "|";
      out += "{";
      for (std::size_t i = 0; i < bl[b].size(); ++i) out += (i ? "," : "") + bl[b][i];
      out += "}";
    }
    return out;
  }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.ground_ == b.ground_ && a.rgs_ == b.rgs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_label_string(); }

 private:
  std::vector<std::string> ground_;
  std::vector<std::uint8_t> rgs_;
  std::size_t blocks_ = 0;
};

namespace detail {

inline void require_same_ground(const Partition& a, const Partition& b) {
  if (a.ground() != b.ground()) throw Error(ErrorCode::GroundMismatch, "partitions over different ground sets");
}

inline std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}

}  // namespace detail

/// Finest common coarsening: blocks of a and b that intersect are merged.
/// This is the infimum when coarser partitions are the smaller ones.
inline Partition meet(const Partition& a, const Partition& b) {
  detail::require_same_ground(a, b);
  const std::size_t n = a.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  std::vector<std::size_t> first_a(a.blocks(), SIZE_MAX), first_b(b.blocks(), SIZE_MAX);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [first, blk] : {std::pair{&first_a, a.block_of(i)}, std::pair{&first_b, b.block_of(i)}}) {
      auto& f = (*first)[blk];
      if (f == SIZE_MAX) f = i;
      else parent[detail::find_root(parent, i)] = detail::find_root(parent, f);
    }
  }
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = detail::find_root(parent, i);
  return Partition::from_labels(a.ground(), labels);
}

/// Common refinement: the nonempty blockwise intersections.
inline Partition join(const Partition& a, const Partition& b) {
  detail::require_same_ground(a, b);
  std::vector<std::size_t> labels(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) labels[i] = a.block_of(i) * 64 + b.block_of(i);
  return Partition::from_labels(a.ground(), labels);
}

inline std::uint64_t stirling2(std::size_t n, std::size_t k) {
  if (k > n || n > 8) throw Error(ErrorCode::OutOfRange, "stirling2 needs 0 <= k <= n <= 8");
  // S(n,k) = k S(n-1,k) + S(n-1,k-1), with S(0,0) = 1 and S(n,0) = 0 for n >= 1.
  std::array<std::array<std::uint64_t, 9>, 9> s{};
  s[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

inline std::uint64_t bell(std::size_t n) {
  if (n > 8) throw Error(ErrorCode::OutOfRange, "bell needs n <= 8");
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k <= n; ++k) sum += stirling2(n, k);
  return sum;
}

/// All partitions of a ground set in canonical order: ascending block count,
/// ties broken lexicographically by restricted-growth string. Coarser
/// partitions always precede their refinements.
class LatticeIndex {
 public:
  LatticeIndex() = default;

  explicit LatticeIndex(std::vector<std::string> ground, std::size_t cap = max_terminals()) {
    const std::size_t n = ground.size();
    if (n < 1) throw Error(ErrorCode::OutOfRange, "empty terminal set");
    if (n > cap)
      throw Error(ErrorCode::GroundTooLarge,
                  std::to_string(n) + " terminals exceeds the cap of " + std::to_string(cap));
    std::vector<std::vector<std::uint8_t>> all;
    std::vector<std::uint8_t> rgs(n, 0);
    generate(rgs, 1, 1, all);
    std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
      auto blocks = [](const auto& r) { return *std::max_element(r.begin(), r.end()); };
      auto ba = blocks(a), bb = blocks(b);
      return ba != bb ? ba < bb : a < b;
    });
    ordered_.reserve(all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      position_.emplace(all[i], i);
      ordered_.emplace_back(ground, std::move(all[i]));
    }
    const std::size_t m = ordered_.size();
    meet_blocks_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) meet_blocks_[i * m + j] = meet(ordered_[i], ordered_[j]).blocks();
  }

  static LatticeIndex over_positions(std::size_t n, std::size_t cap = max_terminals()) {
    std::vector<std::string> ground;
    for (std::size_t i = 1; i <= n; ++i) ground.push_back(std::to_string(i));
    return LatticeIndex(std::move(ground), cap);
  }

  std::size_t n() const { return ordered_.empty() ? 0 : ordered_.front().size(); }
  std::size_t size() const { return ordered_.size(); }
  const std::vector<Partition>& ordered() const { return ordered_; }
  const Partition& operator[](std::size_t i) const { return ordered_[i]; }

  std::size_t index_of(const Partition& p) const {
    if (p.ground() != ordered_.front().ground()) throw Error(ErrorCode::GroundMismatch, "partition ground differs from lattice");
    return position_.at(p.rgs());
  }

  /// |A ∧ B| for canonical indices i and j.
  std::size_t meet_blocks(std::size_t i, std::size_t j) const { return meet_blocks_[i * size() + j]; }

 private:
  static void generate(std::vector<std::uint8_t>& rgs, std::size_t pos, std::uint8_t used,
                       std::vector<std::vector<std::uint8_t>>& out) {
    if (pos == rgs.size()) {
      out.push_back(rgs);
      return;
    }
    for (std::uint8_t b = 0; b <= used; ++b) {
      rgs[pos] = b;
      generate(rgs, pos + 1, b == used ? static_cast<std::uint8_t>(used + 1) : used, out);
    }
  }

  std::vector<Partition> ordered_;
  std::map<std::vector<std::uint8_t>, std::size_t> position_;
  std::vector<std::size_t> meet_blocks_;
};

inline LatticeIndex enumerate_partitions(std::vector<std::string> ground, std::size_t cap = max_terminals()) {
  return LatticeIndex(std::move(ground), cap);
}

/// The fifteen partitions of {1,2,3,4} in the order used by the n = 4
/// reference matrices. {34|1|2} is the only 2+1+1 partition not listed
/// elsewhere, so it fills the fourteenth slot.
inline const std::vector<std::vector<std::vector<int>>>& reference_listing_n4() {
  static const std::vector<std::vector<std::vector<int>>> listing{
      {{1, 2, 3, 4}},
      {{1, 2, 3}, {4}},
      {{1, 2, 4}, {3}},
      {{1, 3, 4}, {2}},
      {{2, 3, 4}, {1}},
      {{1, 2}, {3, 4}},
      {{1, 4}, {2, 3}},
      {{1, 3}, {2, 4}},
      {{1, 2}, {3}, {4}},
      {{1, 3}, {2}, {4}},
      {{1, 4}, {2}, {3}},
      {{2, 4}, {1}, {3}},
      {{2, 3}, {1}, {4}},
      {{3, 4}, {1}, {2}},
      {{1}, {2}, {3}, {4}},
  };
  return listing;
}

/// perm[i] = canonical index of the i-th partition in the reference listing.
inline std::vector<std::size_t> reference_listing_permutation() {
  const auto lattice = LatticeIndex::over_positions(4, 4);
  std::vector<std::size_t> perm;
  for (const auto& blocks : reference_listing_n4()) {
    std::vector<std::vector<std::string>> labels;
    for (const auto& b : blocks) {
      labels.emplace_back();
      for (int e : b) labels.back().push_back(std::to_string(e));
    }
    perm.push_back(lattice.index_of(Partition::from_blocks(lattice[0].ground(), labels)));
  }
  return perm;
}

}  // namespace tutte
