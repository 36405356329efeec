#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "tutte/error.hpp"
#include "tutte/partition.hpp"

using namespace tutte;

namespace {

oracle::SetPartition as_sets(const Partition& p) {
  oracle::SetPartition out;
  for (const auto& b : p.block_positions()) {
    oracle::Block block;
    for (auto i : b) block.insert(static_cast<int>(i) + 1);
    out.insert(block);
  }
  return out;
}

std::vector<std::string> positions(std::size_t n) {
  std::vector<std::string> g;
  for (std::size_t i = 1; i <= n; ++i) g.push_back(std::to_string(i));
  return g;
}

Partition blocks(std::size_t n, const std::vector<std::vector<std::string>>& b) {
  return Partition::from_blocks(positions(n), b);
}

}  // namespace

TEST(Partition, Construction) {
  const auto p = Partition::from_labels({"a", "b", "c", "d"}, {7, 3, 7, 9});
  EXPECT_EQ(p.rgs(), (std::vector<std::uint8_t>{0, 1, 0, 2}));
  EXPECT_EQ(p.blocks(), 3u);
  EXPECT_EQ(p.to_string(), "13|2|4");
  EXPECT_EQ(p.to_label_string(), "{a,c}|{b}|{d}");
  EXPECT_EQ(Partition::minimal(positions(3)).blocks(), 1u);
  EXPECT_EQ(Partition::discrete(positions(3)).blocks(), 3u);
  EXPECT_THROW(Partition(positions(2), {1, 0}), Error);
  EXPECT_THROW(Partition(positions(2), {0}), Error);
  EXPECT_THROW(blocks(3, {{"1", "2"}}), Error);
  EXPECT_THROW(blocks(3, {{"1", "2"}, {"2", "3"}}), Error);
  EXPECT_THROW(blocks(3, {{"1", "2", "3"}, {}}), Error);
  EXPECT_THROW(blocks(3, {{"1", "2", "9"}}), Error);
}

TEST(Partition, CountsMatchInsertionOracle) {
  const std::vector<std::size_t> bell_numbers{1, 1, 2, 5, 15, 52, 203};
  for (std::size_t n = 1; n <= 6; ++n) {
    const LatticeIndex lattice = LatticeIndex::over_positions(n);
    EXPECT_EQ(lattice.size(), bell_numbers[n]);
    EXPECT_EQ(bell(n), bell_numbers[n]);
    std::set<oracle::SetPartition> ours;
    for (const auto& p : lattice.ordered()) ours.insert(as_sets(p));
    const auto theirs = oracle::all_partitions(static_cast<int>(n));
    EXPECT_EQ(ours, std::set<oracle::SetPartition>(theirs.begin(), theirs.end()));
  }
}

TEST(Partition, Stirling) {
  EXPECT_EQ(stirling2(4, 2), 7u);
  EXPECT_EQ(stirling2(4, 3), 6u);
  EXPECT_EQ(stirling2(5, 0), 0u);
  EXPECT_EQ(stirling2(0, 0), 1u);
  EXPECT_EQ(stirling2(6, 3), 90u);
  EXPECT_EQ(bell(8), 4140u);
  EXPECT_THROW(stirling2(9, 2), Error);
  EXPECT_THROW(bell(9), Error);
}

TEST(Partition, CanonicalOrder) {
  const LatticeIndex lattice = LatticeIndex::over_positions(4);
  std::vector<std::string> listed;
  for (const auto& p : lattice.ordered()) listed.push_back(p.to_string());
  const std::vector<std::string> expected{"1234",   "123|4",  "124|3",  "12|34",  "134|2",
                                          "13|24",  "14|23",  "1|234",  "12|3|4", "13|2|4",
                                          "1|23|4", "14|2|3", "1|24|3", "1|2|34", "1|2|3|4"};
  EXPECT_EQ(listed, expected);
  for (std::size_t i = 0; i < lattice.size(); ++i) EXPECT_EQ(lattice.index_of(lattice[i]), i);
}

TEST(Partition, MeetIsCoarsening) {
  const auto a = blocks(4, {{"1", "2"}, {"3"}, {"4"}});
  const auto b = blocks(4, {{"1", "3"}, {"2"}, {"4"}});
  EXPECT_EQ(meet(a, b).to_string(), "123|4");
  EXPECT_EQ(join(a, b).to_string(), "1|2|3|4");
  EXPECT_EQ(meet(a, b).blocks(), 2u);
}

TEST(Partition, MeetJoinAgainstOracle) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const LatticeIndex lattice = LatticeIndex::over_positions(n);
    for (std::size_t i = 0; i < lattice.size(); ++i)
      for (std::size_t j = 0; j < lattice.size(); ++j) {
        const Partition m = meet(lattice[i], lattice[j]);
        ASSERT_EQ(as_sets(m), oracle::meet(as_sets(lattice[i]), as_sets(lattice[j])));
        ASSERT_EQ(lattice.meet_blocks(i, j), m.blocks());
        const Partition jn = join(lattice[i], lattice[j]);
        ASSERT_TRUE(jn.refines(lattice[i]) && jn.refines(lattice[j]));
        ASSERT_TRUE(lattice[i].refines(m) && lattice[j].refines(m));
      }
  }
}

TEST(Partition, LatticeLaws) {
  const LatticeIndex lattice = LatticeIndex::over_positions(4);
  const auto& all = lattice.ordered();
  const Partition top = Partition::minimal(positions(4));
  const Partition bottom = Partition::discrete(positions(4));
  for (const auto& a : all) {
    EXPECT_EQ(meet(a, a), a);
    EXPECT_EQ(join(a, a), a);
    EXPECT_EQ(meet(a, bottom), a);
    EXPECT_EQ(join(a, top), a);
    for (const auto& b : all) {
      EXPECT_EQ(meet(a, b), meet(b, a));
      EXPECT_EQ(join(a, b), join(b, a));
      EXPECT_EQ(meet(a, join(a, b)), a);
      EXPECT_EQ(join(a, meet(a, b)), a);
      EXPECT_EQ(a.refines(b), meet(a, b) == b);
      for (const auto& c : all) {
        ASSERT_EQ(meet(meet(a, b), c), meet(a, meet(b, c)));
        ASSERT_EQ(join(join(a, b), c), join(a, join(b, c)));
      }
    }
  }
}

TEST(Partition, GroundChecks) {
  const auto a = Partition::minimal({"a", "b"});
  const auto b = Partition::minimal({"a", "c"});
  try {
    meet(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundMismatch);
  }
  EXPECT_THROW(join(a, b), Error);
  try {
    LatticeIndex::over_positions(7);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GroundTooLarge);
  }
  EXPECT_EQ(LatticeIndex::over_positions(7, 7).size(), 877u);
  EXPECT_THROW(LatticeIndex(std::vector<std::string>{}), Error);
}

TEST(Partition, ReferenceListingIsBijection) {
  const auto perm = reference_listing_permutation();
  ASSERT_EQ(perm.size(), 15u);
  EXPECT_EQ(std::set<std::size_t>(perm.begin(), perm.end()).size(), 15u);
  const LatticeIndex lattice = LatticeIndex::over_positions(4);
  EXPECT_EQ(lattice[perm[13]].to_string(), "1|2|34");
  EXPECT_EQ(perm.front(), 0u);
  EXPECT_EQ(perm.back(), 14u);
}
