#include <gtest/gtest.h>

#include "dchroma/coloring.hpp"
#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/rng.hpp"
#include "oracles.hpp"

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

Coloring sides_coloring(const Graph& g) {
  std::vector<std::uint32_t> c(g.order());
  for (Vertex v = 0; v < g.order(); ++v) c[v] = (*g.sides())[v] + 1u;
  return Coloring(c);
}

bool brute_proper(const Graph& g, const std::vector<std::uint32_t>& c) {
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

// All assignments over k colors using every color, by counting in base k.
template <class F>
void each_assignment(std::size_t n, unsigned k, F f) {
  std::vector<std::uint32_t> c(n, 1);
  while (true) {
    std::vector<char> used(k + 1, 0);
    for (auto x : c) used[x] = 1;
    if (std::count(used.begin() + 1, used.end(), 1) == static_cast<long>(k)) f(c);
    std::size_t i = 0;
    while (i < n && c[i] == k) c[i++] = 1;
    if (i == n) return;
    ++c[i];
  }
}

unsigned brute_chromatic(const Graph& g) {
  for (unsigned k = 1;; ++k) {
    bool found = false;
    each_assignment(g.order(), k, [&](const auto& c) { found = found || brute_proper(g, c); });
    if (found) return k;
  }
}

std::vector<Graph> small_graphs() {
  std::vector<Graph> out{complete_graph(4), cycle_graph(5), cycle_graph(6), path_graph(4), complete_bipartite(2, 3), cycle_graph(7)};
  SplitMix64 rng(5);
  for (int i = 0; i < 6; ++i) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < 7; ++u)
      for (Vertex v = u + 1; v < 7; ++v)
        if (uniform_below(rng, 2)) e.emplace_back(u, v);
    out.emplace_back(7, e);
  }
  return out;
}

}  // namespace

TEST(ColoringType, Validation) {
  EXPECT_THROW(Coloring({0, 1}), Error);
  EXPECT_THROW(Coloring({1, 3}), Error);
  const Coloring c = Coloring::compact({5, 2, 5, 9});
  EXPECT_EQ(c.colors(), (std::vector<std::uint32_t>{2, 1, 2, 3}));
  EXPECT_EQ(c.k(), 3u);
  EXPECT_EQ(c.color_class(2), (std::vector<Vertex>{0, 2}));
}

TEST(ColoringType, TextAndJsonRoundTrip) {
  const Coloring c({1, 2, 3, 1});
  EXPECT_EQ(coloring_from_text(coloring_to_text(c), 4), c);
  EXPECT_EQ(coloring_from_json(coloring_to_json(c)), c);
  EXPECT_EQ(code_of([] { coloring_from_text("0 1\n1 x\n", 2); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { coloring_from_text("0 1\n", 2); }), ErrorCode::ParseError);
}

TEST(Proper, Examples) {
  EXPECT_TRUE(is_proper(levi_graph(3), sides_coloring(levi_graph(3))));
  EXPECT_FALSE(is_proper(complete_graph(3), Coloring({1, 2, 1})));
  std::vector<std::uint32_t> distinct(20);
  std::iota(distinct.begin(), distinct.end(), 1u);
  EXPECT_TRUE(is_proper(kneser_complement(6, 3), Coloring(distinct)));
}

TEST(Distinguishing, Examples) {
  const auto lg2 = levi_graph(2);
  const Coloring sides = sides_coloring(lg2);
  const auto d = is_distinguishing(lg2, sides);
  EXPECT_FALSE(d.distinguishing);
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(lg2.is_automorphism(*d.witness));
  EXPECT_FALSE(d.witness->is_identity());
  for (Vertex v = 0; v < 14; ++v) EXPECT_EQ(sides[(*d.witness)(v)], sides[v]);

  std::vector<std::uint32_t> distinct(14);
  std::iota(distinct.begin(), distinct.end(), 1u);
  EXPECT_TRUE(is_distinguishing(lg2, Coloring(distinct)).distinguishing);
  EXPECT_TRUE(is_distinguishing(levi_order1(2, 6), lg1_explicit_coloring(2, 6)).distinguishing);
}

TEST(Distinguishing, AgreesWithColorPreservingOrder) {
  const auto g = levi_graph(3);
  SplitMix64 rng(9);
  for (int i = 0; i < 40; ++i) {
    std::vector<std::uint32_t> c(g.order());
    for (auto& x : c) x = static_cast<std::uint32_t>(uniform_below(rng, 4));
    const Coloring col = Coloring::compact(c);
    EXPECT_EQ(is_distinguishing(g, col).distinguishing, color_preserving_automorphisms(g, col).order == 1);
  }
}

TEST(Distinguishing, AgreesWithBacktrackingOracle) {
  for (const auto& g : small_graphs())
    each_assignment(g.order(), 3, [&](const auto& c) {
      if (!brute_proper(g, c)) return;
      const bool oracle_dist = oracle::all_automorphisms(g, c).size() == 1;
      EXPECT_EQ(is_distinguishing(g, Coloring(c)).distinguishing, oracle_dist);
    });
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(complete_graph(5)), 5u);
  EXPECT_EQ(chromatic_number(slope_graph(5, {1, 2}).first), 5u);
  EXPECT_EQ(chromatic_number(weak_power(complete_graph(3), 4)), 3u);
  EXPECT_EQ(chromatic_number(kneser_complement(6, 3)), 10u);
  for (const auto& g : small_graphs()) EXPECT_EQ(chromatic_number(g), brute_chromatic(g));
}

TEST(Enumerate, Examples) {
  int n = 0;
  enumerate_proper_colorings(complete_graph(3), 3, EnumerationMode::UpToColorPermutation, [&](const Coloring&) {
    ++n;
    return true;
  });
  EXPECT_EQ(n, 1);
  EXPECT_EQ(enumerate_proper_colorings(path_graph(3), 2, EnumerationMode::All, [](const Coloring&) { return true; }),
            2u);
  const auto g = slope_graph(5, {1, 2}).first;
  enumerate_proper_colorings(g, 5, EnumerationMode::UpToColorPermutation, [&](const Coloring& c) {
    for (auto s : c.class_sizes()) EXPECT_EQ(s, 5u);
    return true;
  });
}

TEST(Enumerate, CountsMatchBruteForce) {
  for (const auto& g : small_graphs())
    for (unsigned k = 1; k <= 4; ++k) {
      std::uint64_t brute = 0;
      each_assignment(g.order(), k, [&](const auto& c) { brute += brute_proper(g, c); });
      std::set<std::vector<std::uint32_t>> seen;
      const auto all = enumerate_proper_colorings(g, k, EnumerationMode::All, [&](const Coloring& c) {
        EXPECT_TRUE(is_proper(g, c));
        EXPECT_EQ(c.k(), k);
        seen.insert(c.colors());
        return true;
      });
      EXPECT_EQ(all, brute);
      EXPECT_EQ(seen.size(), brute);
      const auto reduced =
          enumerate_proper_colorings(g, k, EnumerationMode::UpToColorPermutation, [](const Coloring&) { return true; });
      EXPECT_EQ(reduced * static_cast<std::uint64_t>(factorial(k)), brute);
    }
}

TEST(Enumerate, CapExceeded) {
  EXPECT_EQ(code_of([] {
              enumerate_proper_colorings(levi_graph(3), 3, EnumerationMode::All, [](const Coloring&) { return true; },
                                         10);
            }),
            ErrorCode::CapExceeded);
}

TEST(ChiD, Examples) {
  EXPECT_EQ(distinguishing_chromatic_number(complete_bipartite(2, 2), 6).value, 4u);
  const auto lg2 = distinguishing_chromatic_number(levi_graph(2), 6);
  EXPECT_EQ(lg2.value, 4u);
  EXPECT_EQ(lg2.chromatic, 2u);
  const auto c6 = distinguishing_chromatic_number(cycle_graph(6), 6);
  EXPECT_EQ(c6.value, 4u);
}

TEST(ChiD, MatchesBruteForce) {
  for (const auto& g : small_graphs()) {
    unsigned brute = 0;
    for (unsigned k = 1; !brute; ++k)
      each_assignment(g.order(), k, [&](const auto& c) {
        if (!brute && brute_proper(g, c) && oracle::all_automorphisms(g, c).size() == 1) brute = k;
      });
    const auto res = distinguishing_chromatic_number(g, static_cast<unsigned>(g.order()));
    EXPECT_EQ(res.value, brute);
    EXPECT_GE(*res.value, res.chromatic);
  }
}

TEST(RandomColoring, Contract) {
  std::set<std::vector<std::uint32_t>> labelings;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto c = random_proper_coloring(complete_graph(3), 3, s);
    EXPECT_TRUE(is_proper(complete_graph(3), c));
    labelings.insert(c.colors());
  }
  EXPECT_EQ(labelings.size(), 6u);
  const auto g = kneser_complement(7, 3);
  const unsigned chi = chromatic_number(g);
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto c = random_proper_coloring(g, chi, s);
    EXPECT_TRUE(is_proper(g, c));
    EXPECT_EQ(c.k(), chi);
  }
  EXPECT_EQ(random_proper_coloring(g, chi, 3), random_proper_coloring(g, chi, 3));
  EXPECT_EQ(code_of([] { random_proper_coloring(complete_graph(3), 2, 1); }), ErrorCode::Infeasible);
}

TEST(RandomColoring, KneserComplementSevenThreeIsAlwaysDistinguishing) {
  const auto g = kneser_complement(7, 3);
  const unsigned chi = chromatic_number(g);
  for (std::uint64_t s = 0; s < 50; ++s) EXPECT_TRUE(is_distinguishing(g, random_proper_coloring(g, chi, s)).distinguishing);
}

TEST(Split, Contract) {
  const auto g = levi_graph(5);
  const Coloring base = sides_coloring(g);
  const auto s = split_color_class(base, 1, 2, 42);
  EXPECT_EQ(s.k(), 3u);
  std::size_t points = 0;
  for (Vertex v = 0; v < 31; ++v) {
    EXPECT_NE(s[v], s[31]);
    points += 1;
  }
  EXPECT_EQ(s.color_class(s[31]).size(), 31u);
  EXPECT_EQ(s.color_class(1).size() + s.color_class(3).size() + s.color_class(2).size(), 62u);
  EXPECT_EQ(points, 31u);
  EXPECT_EQ(split_color_class(base, 1, 1, 42), base);
  EXPECT_EQ(split_color_class(base, 1, 2, 42), s);
  EXPECT_TRUE(is_proper(g, s));
}

TEST(Constructions, Lg1Explicit) {
  const auto c = lg1_explicit_coloring(2, 6);
  auto sizes = c.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{6, 6, 9}));
  EXPECT_TRUE(is_proper(levi_order1(2, 6), c));
  EXPECT_TRUE(is_distinguishing(levi_order1(3, 7), lg1_explicit_coloring(3, 7)).distinguishing);
  EXPECT_EQ(code_of([] { lg1_explicit_coloring(4, 9); }), ErrorCode::InvalidParameters);
}

TEST(Constructions, GsPlusOne) {
  const auto c = gs_plus_one_coloring(5, {1, 2}, 3);
  EXPECT_EQ(c.k(), 6u);
  auto sizes = c.class_sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4, 5, 5, 5, 5}));
  EXPECT_TRUE(is_proper(slope_graph(5, {1, 2}).first, c));
  EXPECT_EQ(code_of([] { gs_plus_one_coloring(5, {2, 3}, 1); }), ErrorCode::InvalidParameters);
}

TEST(Constructions, KrsPlusOne) {
  const auto plane = pg2(5);
  std::vector<std::uint32_t> base(62, 3);
  for (Vertex p = 0; p < 31; ++p) base[p] = 1 + (p % 2);
  const auto c = krs_plus_one_coloring(5, 2, 2, Coloring(base));
  EXPECT_EQ(c.k(), 5u);
  EXPECT_EQ(c.size(), 124u);
  EXPECT_TRUE(is_proper(levi_tensor_krs(5, 2, 2).first, c));
  base[31] = 1;
  EXPECT_EQ(code_of([&] { krs_plus_one_coloring(5, 2, 2, Coloring::compact(base)); }), ErrorCode::InvalidBaseColoring);
}

TEST(Constructions, FactorInducedNeverDistinguishing) {
  for (unsigned n : {2u, 3u}) {
    const auto g = weak_power(complete_graph(3), n);
    for (unsigned coord = 0; coord < n; ++coord) {
      const auto c = factor_induced_coloring(Coloring({1, 2, 3}), n, coord);
      EXPECT_TRUE(is_proper(g, c));
      EXPECT_FALSE(is_distinguishing(g, c).distinguishing);
    }
  }
}

TEST(Constructions, Lg3Structured) {
  const auto g = levi_graph(3);
  const auto c = lg3_structured_coloring();
  EXPECT_EQ(c.k(), 5u);
  EXPECT_TRUE(is_proper(g, c));
  EXPECT_TRUE(is_distinguishing(g, c).distinguishing);
}

// At q = 5 the slope graph is a rook's graph and some Latin-square colorings
// are distinguishing; confirm one against the backtracking oracle.
TEST(SlopeGraphColorings, DistinguishingFiveColoringConfirmedByOracle) {
  const auto g = slope_graph(5, {1, 2}).first;
  std::optional<Coloring> hit;
  enumerate_proper_colorings(g, 5, EnumerationMode::UpToColorPermutation, [&](const Coloring& c) {
    if (is_distinguishing(g, c).distinguishing) {
      hit = c;
      return false;
    }
    return true;
  });
  ASSERT_TRUE(hit);
  EXPECT_EQ(oracle::all_automorphisms(g, hit->colors()).size(), 1u);
}
