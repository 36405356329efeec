#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tutte/corpus.hpp"
#include "tutte/polynomials.hpp"
#include "tutte/verify.hpp"

using namespace tutte;

namespace {

const MultiPoly X = MultiPoly::variable(Var::X);
const MultiPoly Y = MultiPoly::variable(Var::Y);
const MultiPoly T = MultiPoly::variable(Var::T);
const MultiPoly ONE(1);

Multigraph cycle(std::size_t n) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(v[i], v[(i + 1) % n]);
  return Multigraph(v, e);
}

Multigraph complete(std::size_t n) {
  std::vector<std::string> v;
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(v[i], v[j]);
  return Multigraph(v, e);
}

std::vector<Multigraph> sample_graphs(std::uint64_t seed, std::size_t count) {
  std::vector<Multigraph> out;
  for (const auto& inst : corpus::random_corpus(seed, count, {1, 2, 3})) {
    out.push_back(inst.k.with_terminals({}));
    if (inst.glued().edge_count() <= 16) out.push_back(inst.glued().with_terminals({}));
  }
  return out;
}

}  // namespace

TEST(Tutte, SmallGraphs) {
  EXPECT_EQ(tutte_dc(Multigraph()).poly, ONE);
  EXPECT_EQ(tutte_dc(Multigraph({"a"}, {{"a", "a"}})).poly, Y);
  EXPECT_EQ(tutte_dc(Multigraph({"a", "b"}, {{"a", "b"}})).poly, X);
  EXPECT_EQ(tutte_dc(Multigraph({"a", "b"}, {{"a", "b"}, {"a", "b"}})).poly, X + Y);
  EXPECT_EQ(tutte_dc(Multigraph({"a", "b"}, {})).poly, ONE);
  EXPECT_EQ(tutte_dc(corpus::triangle()).to_string(), "x^2 + x + y");
  EXPECT_EQ(tutte_dc(cycle(4)).poly, pow(X, 3) + X * X + X + Y);
  const MultiPoly k4 = pow(X, 3) + Rational(3) * X * X + Rational(2) * X + Rational(4) * X * Y + Rational(2) * Y +
                       Rational(3) * Y * Y + pow(Y, 3);
  EXPECT_EQ(tutte_dc(complete(4)).poly, k4);
  EXPECT_EQ(tutte_value(complete(4), 1, 1), Rational(16));
  EXPECT_EQ(tutte_value(complete(4), 2, 2), Rational(64));
  EXPECT_EQ(tutte_value(complete(5), 1, 1), Rational(125));
}

TEST(Tutte, DeletionContractionMatchesSubsetSum) {
  std::mt19937_64 rng(17);
  for (const auto& g : sample_graphs(21, 24)) {
    const TuttePoly dc = tutte_dc(g);
    ASSERT_EQ(dc, tutte_oracle(g));
    for (int k = 0; k < 2; ++k) {
      const Rational x(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      const Rational y(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
      ASSERT_EQ(dc.evaluate(x, y), oracle::tutte_at(g, x, y));
    }
  }
}

TEST(Tutte, MultiplicativeOverComponents) {
  const Multigraph a({"a", "b", "c", "d", "e"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"d", "e"}, {"d", "e"}});
  EXPECT_EQ(tutte_dc(a).poly, (X * X + X + Y) * (X + Y));
}

TEST(Tutte, OracleBudget) {
  const Multigraph big = complete(7);
  try {
    tutte_oracle(big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  EXPECT_EQ(tutte_value(big, 1, 1), Rational(16807));
}

TEST(Negami, TriangleExpansion) {
  const NegamiPoly f = negami_expansion(corpus::triangle());
  EXPECT_EQ(f.to_string(), "t*x^3 + 3*t*x^2*y + 3*t^2*x*y^2 + t^3*y^3");
  EXPECT_EQ(negami_recurrence(corpus::triangle()), f);
  EXPECT_EQ(negami(Multigraph({"a", "b"}, {})).poly, T * T);
  EXPECT_EQ(negami(Multigraph({"a"}, {{"a", "a"}})).poly, T * (X + Y));
}

TEST(Negami, RecurrenceMatchesExpansion) {
  for (const auto& g : sample_graphs(5, 18)) {
    const NegamiPoly e = negami_expansion(g);
    ASSERT_EQ(negami_recurrence(g, EdgeOrder::Ascending), e);
    ASSERT_EQ(negami_recurrence(g, EdgeOrder::Descending), e);
    ASSERT_EQ(negami(g, NegamiMode::Expansion), e);
  }
}

TEST(Negami, TutteRelation) {
  EXPECT_TRUE(negami_tutte_check(corpus::triangle()));
  EXPECT_TRUE(negami_tutte_check(Multigraph({"a", "b", "c"}, {{"a", "a"}, {"b", "c"}})));
  for (const auto& g : sample_graphs(9, 12)) ASSERT_TRUE(negami_tutte_check(g));
}

TEST(Forests, CountsMatchOracle) {
  const ForestCounts tri = forest_counts(corpus::triangle());
  EXPECT_EQ(tri.S, (std::vector<mpz_class>{0, 3, 3, 1}));
  for (const auto& g : sample_graphs(13, 12)) {
    const auto ours = forest_counts(g);
    const auto theirs = oracle::forest_counts(g);
    ASSERT_EQ(ours.S.size(), theirs.size());
    for (std::size_t i = 0; i < theirs.size(); ++i) ASSERT_EQ(ours.S[i], theirs[i]);
    if (g.components() == 1) {
      ASSERT_EQ(ours.S[1], kirchhoff_count(g));
    }
  }
}

TEST(Forests, GeneratingIdentity) {
  for (const auto& g : sample_graphs(31, 10)) {
    const auto checks = verify::graph_checks(g, "g");
    for (const auto& c : checks) EXPECT_TRUE(c.ok) << c.name;
  }
}

TEST(Forests, Kirchhoff) {
  EXPECT_EQ(kirchhoff_count(corpus::triangle()), 3);
  EXPECT_EQ(kirchhoff_count(cycle(4)), 4);
  EXPECT_EQ(kirchhoff_count(complete(4)), 16);
  EXPECT_EQ(kirchhoff_count(Multigraph({"a", "b"}, {{"a", "b"}, {"a", "b"}, {"a", "a"}})), 2);
  EXPECT_EQ(kirchhoff_count(Multigraph()), 1);
  try {
    kirchhoff_count(Multigraph({"a", "b"}, {}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Disconnected);
  }
}

TEST(Limit, TriangleLeadingCoefficient) {
  const MultiPoly lifted = to_limit_variables(negami_recurrence(corpus::triangle()).poly);
  const MultiPoly s = MultiPoly::variable(Var::S);
  EXPECT_EQ(coefficient(lifted, Var::Zeta, 3), pow(s, 3) + Rational(3) * s * s + Rational(3) * s);
  EXPECT_TRUE(limit_lemma_check(corpus::triangle()));
}

TEST(Auxiliary, SumsOverPartitions) {
  const auto inst = corpus::four_cycle_split();
  const auto f = aux_f_all(inst.k);
  ASSERT_EQ(f.size(), 2u);
  // Path u1-k1-u2: both edges join the terminals, otherwise they stay apart.
  EXPECT_EQ(f[0], X * X);
  EXPECT_EQ(f[1], Rational(2) * X * Y + T * Y * Y);
  const auto t = aux_T_all(inst.k);
  EXPECT_EQ(t[0], ONE);
  EXPECT_EQ(t[1], X + ONE);
  EXPECT_EQ(aux_f(inst.k, Partition::minimal(inst.terminals)), X * X);
  EXPECT_THROW(aux_f(inst.k, Partition::minimal({"a", "b"})), Error);
}

TEST(Auxiliary, IdentitiesOnCorpus) {
  for (const auto& inst : corpus::random_corpus(77, 9, {1, 2, 3})) {
    for (const auto& c : verify::aux_identity_checks(inst.k, inst.h, inst.terminals, "inst"))
      EXPECT_TRUE(c.ok) << c.name;
    for (const auto& c : verify::aux_identity_checks(inst.h, inst.k, inst.terminals, "swapped"))
      EXPECT_TRUE(c.ok) << c.name;
  }
}

TEST(Auxiliary, DisconnectedPart) {
  const Multigraph k({"u1", "u2", "k1"}, {{"u1", "k1"}}, {"u1", "u2"});
  const Multigraph h({"u1", "u2", "h1"}, {{"u1", "h1"}, {"h1", "u2"}}, {"u1", "u2"});
  for (const auto& c : verify::aux_identity_checks(k, h, {"u1", "u2"}, "d")) EXPECT_TRUE(c.ok) << c.name;
}

TEST(Tutte, OnePointJoins) {
  const Multigraph bowtie({"a", "b", "c", "d", "e"},
                          {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}, {"d", "e"}, {"c", "e"}});
  EXPECT_EQ(tutte_dc(bowtie).poly, pow(tutte_dc(corpus::triangle()).poly, 2));
  for (const auto& inst : corpus::random_corpus(19, 6, {1})) {
    ASSERT_EQ(inst.terminals.size(), 1u);
    EXPECT_EQ(tutte_dc(inst.glued()).poly, tutte_dc(inst.k).poly * tutte_dc(inst.h).poly);
  }
}
