#include <gtest/gtest.h>

#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/permgroup.hpp"
#include "dchroma/rng.hpp"
#include "oracles.hpp"

using namespace dchroma;

namespace {

oracle::Perm images(const Permutation& p) { return {p.images().begin(), p.images().end()}; }

std::vector<oracle::Perm> images(const std::vector<Permutation>& ps) {
  std::vector<oracle::Perm> out;
  for (const auto& p : ps) out.push_back(images(p));
  return out;
}

}  // namespace

TEST(Permutation, ProductReadsLeftToRight) {
  const auto a = Permutation::from_cycles(3, {{0, 1}});
  const auto b = Permutation::from_cycles(3, {{1, 2}});
  const auto ab = a * b;
  EXPECT_EQ(ab(0), b(a(0)));
  EXPECT_EQ(ab(0), 2u);
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_THROW(Permutation({0, 0, 1}), Error);
}

TEST(Closure, SmallGroups) {
  EXPECT_EQ(closure({Permutation::from_cycles(2, {{0, 1}})}).size(), 2u);
  const std::vector<Permutation> s4{Permutation::from_cycles(4, {{0, 1}}), Permutation::from_cycles(4, {{0, 1, 2, 3}})};
  EXPECT_EQ(closure(s4).size(), 24u);
  EXPECT_EQ(group_order(4, s4), 24);
  EXPECT_EQ(group_order(5, {}), 1);
}

TEST(Closure, MatchesSaturationOracleAndSchreierSims) {
  for (int q : {2, 3}) {
    auto G = pgl3_action(q);
    const auto table = closure(G.generators);
    const auto ref = oracle::generated(images(G.generators), G.degree);
    ASSERT_EQ(table.size(), ref.size());
    for (std::size_t i = 0; i < table.size(); ++i)
      EXPECT_TRUE(ref.count(images(table.at(i))));
    EXPECT_EQ(StabilizerChain(G.degree, G.generators).order(), table.size());
  }
}

TEST(Closure, ClosedUnderProductsAndInverses) {
  auto G = pgl3_action(2);
  const auto& table = G.ensure_elements();
  EXPECT_EQ(table.size(), 168u);
  EXPECT_TRUE(table.at(0).is_identity());
  const StabilizerChain chain(G.degree, G.generators);
  SplitMix64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto a = table.at(uniform_below(rng, table.size()));
    const auto b = table.at(uniform_below(rng, table.size()));
    EXPECT_TRUE(chain.contains(a * b));
    EXPECT_TRUE(chain.contains(a.inverse()));
  }
}

TEST(Closure, SubgroupOrderDividesSupergroup) {
  auto full = pgammal3_action(4);
  auto sub = pgl3_action(4);
  EXPECT_EQ(group_order(full) % group_order(sub), 0);
  const auto sym = symmetric_group(5);
  const GroupSpec alt{5, {Permutation::from_cycles(5, {{0, 1, 2}}), Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})}};
  EXPECT_EQ(group_order(alt), 60);
  EXPECT_EQ(group_order(sym) % group_order(alt), 0);
}

TEST(Closure, CapExceeded) {
  try {
    closure(symmetric_group(8).generators, 1000);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::CapExceeded);
  }
}

TEST(OrbitCount, Examples) {
  std::vector<Point> subset(31);
  std::iota(subset.begin(), subset.end(), 0u);
  auto oc = orbit_count_on(Permutation::identity(40), subset);
  EXPECT_EQ(oc.theta, 31u);
  EXPECT_EQ(oc.fixed, 31u);

  const std::vector<Point> five{0, 1, 2, 3, 4};
  oc = orbit_count_on(Permutation::from_cycles(6, {{0, 1}}), five);
  EXPECT_EQ(oc.theta, 4u);
  EXPECT_EQ(oc.fixed, 3u);

  const std::vector<Point> seven{0, 1, 2, 3, 4, 5, 6};
  oc = orbit_count_on(Permutation::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}), seven);
  EXPECT_EQ(oc.theta, 1u);
  EXPECT_EQ(oc.fixed, 0u);

  try {
    orbit_count_on(Permutation::from_cycles(6, {{4, 5}}), five);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSetwiseStable);
  }
}

TEST(OrbitCount, CycleLengthsSumToSubsetSize) {
  auto G = pgl3_action(3);
  const auto& table = G.ensure_elements();
  std::vector<Point> points(13);
  std::iota(points.begin(), points.end(), 0u);
  for (std::size_t i = 0; i < table.size(); i += 7) {
    const auto p = table.at(i);
    const auto oc = orbit_count_on(p, points);
    std::size_t nontrivial = 0, covered = 0;
    for (const auto& cyc : p.cycles())
      if (cyc.front() < 13) ++nontrivial, covered += cyc.size();
    EXPECT_EQ(oc.theta, oc.fixed + nontrivial);
    EXPECT_EQ(covered + oc.fixed, points.size());
    EXPECT_LE(oc.fixed, points.size());
    EXPECT_LE(2 * oc.theta, points.size() + oc.fixed);
  }
}

TEST(InducedAction, KSubsets) {
  EXPECT_EQ(group_order(induced_action_on_ksets(6, 2)), 720);
  EXPECT_EQ(induced_action_on_ksets(6, 2).degree, 15u);
  EXPECT_EQ(group_order(induced_action_on_ksets(4, 2)), 24);
  const auto two = induced_action_on_ksets(2, 1);
  EXPECT_EQ(two.degree, 2u);
  EXPECT_EQ(group_order(two), 2);
  auto g62 = induced_action_on_ksets(6, 2);
  EXPECT_EQ(g62.ensure_elements().size(), 720u);
}

TEST(Wreath, Orders) {
  const auto w = wreath_action(symmetric_group(3), 4);
  EXPECT_EQ(w.degree, 81u);
  EXPECT_EQ(group_order(w), 31104);
  EXPECT_EQ(group_order(wreath_action(GroupSpec{2, {}}, 2)), 2);
  EXPECT_EQ(group_order(wreath_action(symmetric_group(2), 2)), 8);
  for (unsigned m : {2u, 3u})
    for (unsigned n : {2u, 3u})
      EXPECT_EQ(group_order(wreath_action(symmetric_group(m), n)), ipow(factorial(m), n) * factorial(n));
}
