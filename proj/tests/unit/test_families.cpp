#include <gtest/gtest.h>

#include "dchroma/automorphism.hpp"
#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/motion.hpp"
#include "dchroma/rng.hpp"

using namespace dchroma;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidInput;
}

BigInt pgl_order(int q) {
  const BigInt Q = q;
  return ipow(Q, 8) - ipow(Q, 6) - ipow(Q, 5) + ipow(Q, 3);
}

}  // namespace

class PlaneAxioms : public ::testing::TestWithParam<int> {};

TEST_P(PlaneAxioms, IncidenceCounts) {
  const int q = GetParam();
  const auto plane = pg2(q);
  const std::size_t P = static_cast<std::size_t>(q * q + q + 1);
  ASSERT_EQ(plane.size(), P);
  ASSERT_EQ(plane.lines.size(), P);
  for (std::uint32_t l = 0; l < P; ++l) EXPECT_EQ(plane.points_on_line[l].size(), static_cast<std::size_t>(q + 1));
  for (std::uint32_t p = 0; p < P; ++p) EXPECT_EQ(plane.lines_through_point[p].size(), static_cast<std::size_t>(q + 1));
  for (std::uint32_t a = 0; a < P; ++a)
    for (std::uint32_t b = a + 1; b < P; ++b) {
      int common = 0;
      for (std::uint32_t l = 0; l < P; ++l) common += plane.incident(a, l) && plane.incident(b, l);
      EXPECT_EQ(common, 1);
      EXPECT_TRUE(plane.incident(a, plane.line_through(a, b)));
      EXPECT_TRUE(plane.incident(b, plane.line_through(a, b)));
    }
}

TEST_P(PlaneAxioms, PglGeneratorsPreserveSidesAndOrder) {
  const int q = GetParam();
  const auto g = levi_graph(q);
  const auto G = pgl3_action(q);
  for (const auto& p : G.generators) {
    EXPECT_TRUE(g.is_automorphism(p));
    for (Vertex v = 0; v < g.order(); ++v) EXPECT_EQ((*g.sides())[p(v)], (*g.sides())[v]);
  }
  EXPECT_EQ(group_order(G), pgl_order(q));
  const auto full = pgammal3_action(q);
  EXPECT_EQ(group_order(full), pgl_order(q) * prime_power(q)->second);
  for (const auto& p : full.generators) EXPECT_TRUE(g.is_automorphism(p));
}

INSTANTIATE_TEST_SUITE_P(AllSupported, PlaneAxioms, ::testing::Values(2, 3, 4, 5, 7, 8, 9));

TEST(Levi, Examples) {
  const auto lg2 = levi_graph(2);
  EXPECT_EQ(lg2.order(), 14u);
  EXPECT_EQ(lg2.edge_count(), 21u);
  for (Vertex v = 0; v < 14; ++v) EXPECT_EQ(lg2.degree(v), 3u);
  const auto lg5 = levi_graph(5);
  EXPECT_EQ(lg5.order(), 62u);
  for (Vertex v = 0; v < 62; ++v) EXPECT_EQ(lg5.degree(v), 6u);
  EXPECT_EQ(code_of([] { pg2(6); }), ErrorCode::UnsupportedOrder);
}

TEST(Levi, AppendixAdjacencyOfPoint100) {
  const auto plane = pg2(3);
  const auto g = levi_graph(plane);
  const auto P = static_cast<Vertex>(plane.size());
  const Vertex p = plane.index_of({1, 0, 0});
  std::set<std::string> got;
  for (Vertex l : g.neighbors(p)) got.insert(plane.line_label(l - P));
  EXPECT_EQ(got, (std::set<std::string>{"L(0,0,1)", "L(0,1,1)", "L(0,1,2)", "L(0,1,0)"}));
  EXPECT_EQ(plane.point_label(0), "P(1,0,0)");
  EXPECT_EQ(plane.point_label(P - 1), "P(0,0,1)");
}

TEST(Levi, OrderOne) {
  const auto g = levi_order1(2, 6);
  EXPECT_EQ(g.order(), 21u);
  for (Vertex v = 0; v < 6; ++v) EXPECT_EQ(g.degree(v), 5u);
  for (Vertex v = 6; v < 21; ++v) EXPECT_EQ(g.degree(v), 2u);
  EXPECT_EQ(levi_order1(4, 9).order(), 210u);
  EXPECT_EQ(code_of([] { levi_order1(3, 5); }), ErrorCode::InvalidParameters);
  const auto G = levi_order1_action(2, 6);
  EXPECT_EQ(group_order(G), 720);
  for (const auto& p : G.generators) EXPECT_TRUE(g.is_automorphism(p));
}

TEST(Kneser, Complement) {
  const auto a = kneser_complement(6, 3);
  EXPECT_EQ(a.order(), 20u);
  for (Vertex v = 0; v < 20; ++v) EXPECT_EQ(a.degree(v), 18u);
  const auto b = kneser_complement(7, 3);
  EXPECT_EQ(b.order(), 35u);
  for (Vertex v = 0; v < 35; ++v) EXPECT_EQ(b.degree(v), 30u);
  EXPECT_EQ(code_of([] { kneser_complement(5, 3); }), ErrorCode::InvalidParameters);
}

TEST(WeakProduct, Examples) {
  const auto k2 = weak_product(complete_graph(2), complete_graph(2));
  EXPECT_EQ(k2.order(), 4u);
  EXPECT_EQ(k2.edge_count(), 2u);
  EXPECT_FALSE(is_connected(k2));
  const auto k33 = weak_product(complete_graph(3), complete_graph(3));
  for (Vertex v = 0; v < 9; ++v) EXPECT_EQ(k33.degree(v), 4u);
  const auto p = weak_power(complete_graph(3), 4);
  EXPECT_EQ(p.order(), 81u);
  for (Vertex v = 0; v < 81; ++v) EXPECT_EQ(p.degree(v), 16u);
  const auto w = wreath_action(symmetric_group(3), 4);
  for (const auto& g : w.generators) EXPECT_TRUE(p.is_automorphism(g));
}

TEST(SlopeGraph, Examples) {
  const auto [g, meta] = slope_graph(5, {1, 2});
  EXPECT_EQ(g.order(), 25u);
  for (Vertex v = 0; v < 25; ++v) EXPECT_EQ(g.degree(v), 8u);
  EXPECT_EQ(slope(5, 0, 1 * 5 + 2), 2);
  EXPECT_EQ(slope(5, 0, 1), kInfiniteSlope);
  EXPECT_EQ(code_of([] { slope_graph(5, {1}); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { slope_graph(9, {1, 2, 3, 4}); }), ErrorCode::InvalidParameters);
}

TEST(SlopeGraph, LinePartitions) {
  constexpr int q = 5;
  const std::vector<int> S{1, 2};
  const auto g = slope_graph(q, S).first;
  for (Slope a : {kInfiniteSlope, 0, 1, 2, 3, 4}) {
    const auto lines = affine_line_partition(q, a);
    ASSERT_EQ(lines.size(), 5u);
    std::vector<int> hit(25, 0);
    const bool in_s = std::find(S.begin(), S.end(), a) != S.end();
    for (const auto& l : lines) {
      ASSERT_EQ(l.size(), 5u);
      for (Vertex u : l) {
        ++hit[u];
        for (Vertex v : l)
          if (u != v) EXPECT_EQ(g.adjacent(u, v), in_s);
      }
    }
    EXPECT_EQ(std::count(hit.begin(), hit.end(), 1), 25);
  }
  const auto h = affine_line_partition(q, 0);
  for (std::size_t c = 0; c < 5; ++c)
    for (Vertex v : h[c]) EXPECT_EQ(v % q, c);
}

TEST(SlopeGraph, ScalarTranslationsAreAutomorphisms) {
  for (int q : {3, 5, 7}) {
    const auto G = scalar_translation_action(q);
    EXPECT_EQ(group_order(G), q * q * (q - 1));
    for (auto mask : ksubsets_colex(q, static_cast<unsigned>((q - 1) / 2))) {
      std::vector<int> S;
      for (int b = 0; b < q; ++b)
        if (mask & (1u << b)) S.push_back(b);
      const auto g = slope_graph(q, S).first;
      for (const auto& p : G.generators) EXPECT_TRUE(g.is_automorphism(p));
    }
  }
}

TEST(SlopeGraph, TranslationAlongSlope) {
  const auto p = slope_translation(5, 2);
  EXPECT_FALSE(p.is_identity());
  for (const auto& l : affine_line_partition(5, 2))
    for (Vertex v : l) EXPECT_NE(std::find(l.begin(), l.end(), p(v)), l.end());
}

TEST(Tensor, FibersAndSwaps) {
  const auto [g, meta] = levi_tensor_krs(5, 2, 2);
  EXPECT_EQ(g.order(), 124u);
  for (Vertex v = 0; v < 124; ++v) EXPECT_EQ(g.degree(v), 12u);
  EXPECT_FALSE(is_r_thin(g));
  for (std::uint32_t p = 0; p < 31; ++p) {
    const auto f = meta.point_fiber(p);
    ASSERT_EQ(f.size(), 2u);
    EXPECT_FALSE(g.adjacent(f[0], f[1]));
    EXPECT_TRUE(std::equal(g.neighbors(f[0]).begin(), g.neighbors(f[0]).end(), g.neighbors(f[1]).begin(),
                           g.neighbors(f[1]).end()));
    const auto sw = fiber_swap(meta, false, p, 0, 1);
    EXPECT_EQ(sw.moved_count(), 2u);
    EXPECT_TRUE(g.is_automorphism(sw));
    EXPECT_TRUE(g.is_automorphism(fiber_swap(meta, true, p, 0, 1)));
  }
  EXPECT_EQ(code_of([&] { fiber_swap(meta, false, 0, 1, 1); }), ErrorCode::InvalidParameters);
  EXPECT_EQ(code_of([] { levi_tensor_krs(5, 1, 2); }), ErrorCode::InvalidParameters);
}

TEST(Tensor, DegreesFollowIncidence) {
  const auto [g, meta] = levi_tensor_krs(5, 2, 3);
  // A point copy meets q+1 lines, each with s copies.
  EXPECT_EQ(g.degree(meta.point_copy(0, 0)), 6u * 3u);
  EXPECT_EQ(g.degree(meta.line_copy(0, 0)), 6u * 2u);
}
