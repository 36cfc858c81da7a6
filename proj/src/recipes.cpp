#include "dchroma/recipes.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "dchroma/coloring.hpp"
#include "dchroma/error.hpp"
#include "dchroma/families.hpp"
#include "dchroma/motion.hpp"
#include "dchroma/rng.hpp"

namespace dchroma {

namespace {

using json = nlohmann::json;

json rational_json(const BigRational& r) {
  return {{"num", numerator(r).str()}, {"den", denominator(r).str()}, {"approx", to_decimal(r)}};
}

json perm_json(const Permutation& p) { return std::vector<Point>(p.images().begin(), p.images().end()); }

// A witness is valid when it is a nontrivial automorphism preserving every class.
bool valid_witness(const Graph& g, const Coloring& c, const Permutation& w) {
  if (w.is_identity() || !g.is_automorphism(w)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (c[w(v)] != c[v]) return false;
  return true;
}

struct Verdict {
  bool proper = false;
  bool distinguishing = false;
};

Verdict verify(const Graph& g, const Coloring& c, const SearchOptions& opts) {
  return {is_proper(g, c), is_distinguishing(g, c, opts).distinguishing};
}

Coloring two_sided(const Graph& g) {
  std::vector<std::uint32_t> colors(g.order());
  for (Vertex v = 0; v < g.order(); ++v) colors[v] = (*g.sides())[v] + 1u;
  return Coloring(std::move(colors));
}

std::vector<Vertex> side_vertices(const Graph& g, std::uint8_t side) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if ((*g.sides())[v] == side) out.push_back(v);
  return out;
}

const PermutationTable& elements_of(GroupSpec& spec) {
  spec.ensure_elements();
  return *spec.elements;
}

// Exact E(N) for one class of a base coloring, then a seeded split search
// whenever the certificate holds.
struct LemmaRun {
  std::string instance;
  MotionReport report;
  std::optional<SplitResult> split;
  Verdict verdict;
};

LemmaRun lemma_run(std::string instance, const Graph& g, const PermutationTable& group, const Coloring& base,
                   std::uint32_t class_id, unsigned t, std::uint64_t seed, const RecipeConfig& cfg) {
  LemmaRun run{std::move(instance), exact_expected_fixers(group, base.color_class(class_id), t, cfg.threads), {}, {}};
  run.report.motion = group.size() > 1 ? std::optional<std::size_t>(motion(group)) : std::nullopt;
  if (run.report.lemma_satisfied) {
    try {
      run.split = randomized_split_search(g, base, class_id, t, run.report, seed, 1000, cfg.search);
      run.verdict = verify(g, run.split->coloring, cfg.search);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ExhaustedTries) throw;
    }
  }
  return run;
}

json lemma_json(const LemmaRun& run) {
  json j = motion_report_to_json(run.report);
  j["instance"] = run.instance;
  if (run.split) {
    j["split_tries"] = run.split->tries;
    j["split_colors"] = run.split->coloring.k();
    j["split_proper"] = run.verdict.proper;
    j["split_distinguishing"] = run.verdict.distinguishing;
  }
  return j;
}

bool split_ok(const LemmaRun& run, unsigned colors) {
  return run.split && run.verdict.proper && run.verdict.distinguishing && run.split->coloring.k() == colors;
}

// Shared instances ------------------------------------------------------------

LemmaRun levi5_run(const RecipeConfig& cfg) {
  const Graph g = levi_graph(5);
  auto G = pgl3_action(5);
  return lemma_run("LG_5, PGL(3,5), t=2", g, elements_of(G), two_sided(g), 1, 2, derive_seed(cfg.seed, 105), cfg);
}

LemmaRun levi4_run(const RecipeConfig& cfg) {
  const Graph g = levi_graph(4);
  auto G = pgammal3_action(4);
  return lemma_run("LG_4, PGammaL(3,4), t=3", g, elements_of(G), two_sided(g), 1, 3, derive_seed(cfg.seed, 104),
                   cfg);
}

LemmaRun lg1_run(const RecipeConfig& cfg) {
  const Graph g = levi_order1(4, 9);
  auto G = levi_order1_action(4, 9);
  // Side 1 holds the 4-subsets.
  return lemma_run("LG_1(4,9), S_9, t=2", g, elements_of(G), two_sided(g), 2, 2, derive_seed(cfg.seed, 500), cfg);
}

LemmaRun weak_run(const RecipeConfig& cfg) {
  const Graph g = weak_power(complete_graph(3), 4);
  const Coloring base = factor_induced_coloring(Coloring({1, 2, 3}), 4, 0);
  GroupSpec G{g.order(), color_preserving_automorphisms(g, base, cfg.search).generators};
  return lemma_run("K_3^4, coordinate-0 coloring group, t=2", g, elements_of(G), base, 1, 2,
                   derive_seed(cfg.seed, 600), cfg);
}

// Criteria --------------------------------------------------------------------

std::vector<Check> c1_levi_certificates(const RecipeConfig& cfg) {
  std::vector<Check> out;
  const BigRational lo(11, 10), hi(13, 10);
  for (auto [run, colors] : {std::pair{levi5_run(cfg), 3u}, std::pair{levi4_run(cfg), 4u}}) {
    const bool in_range = run.report.exact_EN >= lo && run.report.exact_EN <= hi;
    out.push_back({1, run.instance + ": E(N) in [1.1, 1.3]", in_range, lemma_json(run)});
    out.push_back({1, run.instance + ": split gives proper distinguishing " + std::to_string(colors) + "-coloring",
                   split_ok(run, colors), lemma_json(run)});
  }
  return out;
}

bool bound_below(const HalfPowerBound& b, const BigRational& r) {
  const BigRational slack = r - 1;
  if (slack <= 0) return false;
  const BigInt& n = numerator(slack);
  const BigInt& d = denominator(slack);
  return b.numer * b.numer * d * d < n * n * ipow(b.base, static_cast<unsigned>(b.twice_exponent));
}

std::vector<Check> c2_levi_bound(const RecipeConfig&) {
  std::vector<Check> out;
  const auto b7 = levi_bound(7, 2);
  const auto exact = b7.rational();
  const BigRational expected = BigRational(5630688, 33554432) + 1;
  json v = bound_to_json(b7);
  v["expected"] = rational_json(expected);
  v["log2_form"] = levi_bound_log2_form(7, 2);
  v["reported_approximation"] = "1.3";
  out.push_back({2, "levi_bound(7,2) exact value", exact && *exact == expected, v});
  out.push_back({2, "levi_bound(7,2) < 2", b7.less_than(2), bound_to_json(b7)});

  json series = json::array();
  bool decreasing = true;
  std::optional<HalfPowerBound> prev;
  for (int q : {7, 8, 11, 13}) {
    const auto b = levi_bound(q, 2);
    series.push_back({{"q", q}, {"bound", bound_to_json(b)}});
    if (prev && !(b < *prev)) decreasing = false;
    prev = b;
  }
  out.push_back({2, "levi_bound strictly decreasing over q = 7, 8, 11, 13", decreasing, {{"series", series}}});
  const auto b8 = levi_bound(8, 2);
  out.push_back({2, "levi_bound(8,2) < 1.05", bound_below(b8, BigRational(105, 100)), bound_to_json(b8)});
  return out;
}

std::vector<Check> c3_lg2(const RecipeConfig& cfg) {
  std::vector<Check> out;
  const auto plane = pg2(2);
  const Graph g = levi_graph(plane);
  ChiDOptions opts;
  opts.search = cfg.search;
  const auto res = distinguishing_chromatic_number(g, 5, opts);

  json certs = json::array();
  bool certs_ok = true;
  for (const auto& cert : res.certificates) {
    bool witnesses_ok = cert.witnesses.size() == cert.colorings;
    for (const auto& [c, w] : cert.witnesses) witnesses_ok = witnesses_ok && valid_witness(g, c, w);
    certs_ok = certs_ok && cert.exhaustive && witnesses_ok;
    certs.push_back({{"k", cert.k},
                     {"exhaustive", cert.exhaustive},
                     {"colorings", cert.colorings},
                     {"witnesses_verified", witnesses_ok}});
  }
  bool lower_covers = res.value && res.certificates.size() == *res.value - res.chromatic;
  json v{{"chi", res.chromatic}, {"certificates", certs}};
  if (res.value) v["chi_D"] = *res.value;
  out.push_back({3, "no proper 3-coloring of LG_2 is distinguishing (exhaustive)",
                 certs_ok && lower_covers && res.value && *res.value == 4, v});

  json w;
  bool witness_ok = false;
  if (res.witness) {
    const auto verdict = verify(g, *res.witness, cfg.search);
    witness_ok = verdict.proper && verdict.distinguishing && res.witness->k() == 4;
    w = coloring_to_json(*res.witness);
  }
  out.push_back({3, "chi_D(LG_2) = 4 with a verified 4-coloring", witness_ok && res.value && *res.value == 4,
                 {{"coloring", w}}});

  const auto P = static_cast<Vertex>(plane.size());
  std::uint64_t mono = 0, mono_distinguishing = 0;
  enumerate_proper_colorings(g, 3, EnumerationMode::All, [&](const Coloring& c) {
    for (Vertex l = P + 1; l < 2 * P; ++l)
      if (c[l] != c[P]) return true;
    ++mono;
    const auto d = is_distinguishing(g, c, cfg.search);
    if (d.distinguishing || !valid_witness(g, c, *d.witness)) ++mono_distinguishing;
    return true;
  });
  out.push_back({3, "no monochromatic-line proper 3-coloring of LG_2 is distinguishing",
                 mono > 0 && mono_distinguishing == 0, {{"colorings", mono}, {"failures", mono_distinguishing}}});
  return out;
}

std::vector<Check> c4_lg3(const RecipeConfig& cfg) {
  std::vector<Check> out;
  const auto plane = pg2(3);
  const Graph g = levi_graph(plane);
  const auto aut = automorphism_group(g, {}, cfg.search);
  out.push_back({4, "|Aut(LG_3)| = 11232", aut.complete && aut.order == 11232, {{"order", aut.order.str()}}});

  const Coloring c = lg3_structured_coloring(cfg.search);
  const auto verdict = verify(g, c, cfg.search);
  const auto P = static_cast<Vertex>(plane.size());
  const std::uint32_t special = plane.index_of({0, 0, 1});
  const auto& on_special = plane.points_on_line[special];
  bool structure = c.color_class(c[P + special]).size() == 1;
  std::set<std::uint32_t> point_colors;
  for (auto p : on_special) {
    point_colors.insert(c[p]);
    std::set<std::uint32_t> pencil;
    for (auto l : plane.lines_through_point[p])
      if (l != special) pencil.insert(c[P + l]);
    structure = structure && pencil.size() == 3;
  }
  structure = structure && point_colors.size() == 4;
  out.push_back({4, "structured 5-coloring of LG_3 is proper and distinguishing",
                 verdict.proper && verdict.distinguishing && structure && c.k() == 5,
                 {{"proper", verdict.proper},
                  {"distinguishing", verdict.distinguishing},
                  {"structure", structure},
                  {"coloring", coloring_to_json(c)}}});
  return out;
}

std::vector<Check> c5_lg1(const RecipeConfig& cfg) {
  std::vector<Check> out;
  for (auto [k, n] : {std::pair{2u, 6u}, std::pair{3u, 7u}}) {
    const Graph g = levi_order1(k, n);
    const Coloring c = lg1_explicit_coloring(k, n);
    const auto verdict = verify(g, c, cfg.search);
    out.push_back({5,
                   "lg1_explicit_coloring(" + std::to_string(k) + "," + std::to_string(n) +
                       ") is proper and distinguishing",
                   verdict.proper && verdict.distinguishing && c.k() == 3,
                   {{"proper", verdict.proper}, {"distinguishing", verdict.distinguishing}, {"colors", c.k()}}});
  }
  const auto aut = automorphism_group(levi_order1(2, 6), {}, cfg.search);
  out.push_back({5, "|Aut(LG_1(2,6))| = 720", aut.complete && aut.order == 720, {{"order", aut.order.str()}}});

  // Brute force over S_6 against the cycle-type computation.
  const auto fixed = max_fixed_ksets(6, 2);
  std::vector<unsigned> sigma(6);
  std::iota(sigma.begin(), sigma.end(), 0u);
  std::uint64_t best = 0, perms = 0;
  std::vector<std::vector<unsigned>> best_perms;
  while (std::next_permutation(sigma.begin(), sigma.end())) {  // skips the identity
    ++perms;
    std::uint64_t f = 0;
    for (unsigned a = 0; a < 6; ++a)
      for (unsigned b = a + 1; b < 6; ++b) {
        const unsigned x = std::min(sigma[a], sigma[b]), y = std::max(sigma[a], sigma[b]);
        f += x == a && y == b;
      }
    if (f > best) best = f, best_perms.clear();
    if (f == best) best_perms.push_back(sigma);
  }
  bool all_transpositions = true;
  for (const auto& s : best_perms) {
    unsigned moved = 0;
    for (unsigned i = 0; i < 6; ++i) moved += s[i] != i;
    all_transpositions = all_transpositions && moved == 2;
  }
  out.push_back({5, "max fixed 2-subsets over nontrivial S_6 is 7, only transpositions",
                 fixed.F == 7 && fixed.only_transpositions && best == 7 && all_transpositions &&
                     best_perms.size() == 15 && fixed.F == fixed_ksets_formula(6, 2),
                 {{"F", fixed.F.str()}, {"brute_force_F", best}, {"permutations", perms},
                  {"argmax_count", best_perms.size()}}});

  const auto b = lg1_bound(9, 4);
  out.push_back({5, "lg1_bound(9,4) < 2", b.less_than(2), bound_to_json(b)});

  const auto run = lg1_run(cfg);
  out.push_back({5, run.instance + ": E(N) < 2", run.report.exact_EN < 2, lemma_json(run)});
  out.push_back({5, run.instance + ": split gives proper distinguishing 3-coloring", split_ok(run, 3),
                 lemma_json(run)});
  return out;
}

std::vector<Check> c6_weak(const RecipeConfig& cfg) {
  std::vector<Check> out;
  const Graph k3 = complete_graph(3);
  const Graph g = weak_power(k3, 4);
  const auto aut = automorphism_group(g, {}, cfg.search);
  const BigInt wreath = group_order(wreath_action(symmetric_group(3), 4));
  out.push_back({6, "|Aut(K_3^4)| = |S_3 wr S_4| = 31104", aut.complete && aut.order == wreath && wreath == 31104,
                 {{"order", aut.order.str()}, {"wreath", wreath.str()}}});
  out.push_back({6, "K_3^4 is R-thin", is_r_thin(g), json::object()});
  const unsigned chi = chromatic_number(g, cfg.search);
  out.push_back({6, "chi(K_3^4) = 3", chi == 3, {{"chi", chi}}});

  std::vector<std::uint32_t> base{1, 2, 3};
  std::uint64_t checked = 0, bad = 0;
  do {
    for (unsigned coord = 0; coord < 4; ++coord) {
      const Coloring c = factor_induced_coloring(Coloring(base), 4, coord);
      const auto d = is_distinguishing(g, c, cfg.search);
      ++checked;
      if (!is_proper(g, c) || d.distinguishing || !valid_witness(g, c, *d.witness)) ++bad;
    }
  } while (std::next_permutation(base.begin(), base.end()));
  out.push_back({6, "every factor-induced proper 3-coloring has a color-preserving automorphism", bad == 0,
                 {{"colorings", checked}, {"failures", bad}}});

  const auto wb = weak_bound(3, 6, 4, 1);
  out.push_back({6, "weak_bound(3, 6, 4, 1) < 2", wb.less_than(2), bound_to_json(wb)});

  const auto run = weak_run(cfg);
  out.push_back({6, run.instance + ": split gives proper distinguishing 4-coloring", split_ok(run, 4),
                 lemma_json(run)});
  return out;
}

bool is_affine_line(int q, const std::vector<Vertex>& cls, Slope& dir) {
  if (cls.size() != static_cast<std::size_t>(q)) return false;
  dir = slope(q, cls[0], cls[1]);
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (slope(q, cls[i], cls[j]) != dir) return false;
  return true;
}

std::vector<Check> c7_gs5(const RecipeConfig& cfg) {
  std::vector<Check> out;
  constexpr int q = 5;
  std::vector<std::vector<int>> sets{{1, 2}};
  SplitMix64 rng(derive_seed(cfg.seed, 700));
  while (sets.size() < 3) {
    std::vector<int> S{static_cast<int>(uniform_below(rng, q)), static_cast<int>(uniform_below(rng, q))};
    if (S[0] == S[1]) continue;
    std::sort(S.begin(), S.end());
    if (std::find(sets.begin(), sets.end(), S) == sets.end()) sets.push_back(S);
  }

  for (const auto& S : sets) {
    const Graph g = slope_graph(q, S).first;
    const std::string tag = "S = {" + std::to_string(S[0]) + "," + std::to_string(S[1]) + "}";
    const unsigned chi = chromatic_number(g, cfg.search);
    out.push_back({7, tag + ": chi(G_S) = 5", chi == 5, {{"chi", chi}}});
    std::uint64_t count = 0, non_line = 0, unfixed = 0;
    enumerate_proper_colorings(g, q, EnumerationMode::UpToColorPermutation, [&](const Coloring& c) {
      ++count;
      std::optional<Slope> common;
      bool lines = true;
      for (std::uint32_t col = 1; col <= c.k() && lines; ++col) {
        Slope dir;
        if (!is_affine_line(q, c.color_class(col), dir) || (common && *common != dir)) lines = false;
        common = dir;
      }
      if (lines) {
        if (!valid_witness(g, c, slope_translation(q, *common))) ++unfixed;
      } else {
        ++non_line;
        const auto d = is_distinguishing(g, c, cfg.search);
        if (d.distinguishing || !valid_witness(g, c, *d.witness)) ++unfixed;
      }
      return true;
    });
    const json v{{"colorings", count}, {"non_line_colorings", non_line}, {"without_witness", unfixed}};
    out.push_back({7, tag + ": every proper 5-coloring is a parallel class of affine lines", count > 0 && non_line == 0,
                   v});
    out.push_back({7, tag + ": every proper 5-coloring has a verified color-preserving automorphism (chi_D > 5)",
                   count > 0 && unfixed == 0, v});
  }

  const auto dirs = check_line_directions(q, 0, 0);
  out.push_back({7, "every non-line 5-subset of F_5^2 determines >= 4 directions (exhaustive)",
                 dirs.exhaustive && dirs.violations == 0 && dirs.lines_seen == 30,
                 {{"checked", dirs.checked},
                  {"lines", dirs.lines_seen},
                  {"violations", dirs.violations},
                  {"min_directions_nonline", dirs.min_directions_nonline}}});

  // Every admissible S at q = 5, looking for |Aut(G_S)| = q^2 (q-1).
  const auto all = favorable_fraction(q, 0, 0, FavorableMode::ExactSmall, cfg.search, cfg.threads);
  json plus_one = json::array();
  bool generic_found = false;
  for (auto mask : ksubsets_colex(q, 2)) {
    std::vector<int> S;
    for (int b = 0; b < q; ++b)
      if (mask & (1u << b)) S.push_back(b);
    const Graph g = slope_graph(q, S).first;
    const auto order = automorphism_group(g, {}, cfg.search).order;
    Slope gamma = 0;
    while (gamma == 1 || std::find(S.begin(), S.end(), gamma) != S.end()) ++gamma;
    const Coloring c = gs_plus_one_coloring(q, S, gamma);
    const auto verdict = verify(g, c, cfg.search);
    if (order == 100 && verdict.proper && verdict.distinguishing) generic_found = true;
    plus_one.push_back({{"S", S},
                        {"order", order.str()},
                        {"gamma", gamma},
                        {"proper", verdict.proper},
                        {"distinguishing", verdict.distinguishing}});
  }
  out.push_back({7, "some S has |Aut(G_S)| = 100 and a proper distinguishing 6-coloring", generic_found,
                 {{"order_histogram", all.order_histogram}, {"plus_one", plus_one}}});
  return out;
}

std::vector<Check> c8_gs_aut(const RecipeConfig& cfg) {
  std::vector<Check> out;
  for (int q : {11, 13}) {
    const auto r = favorable_fraction(q, 50, derive_seed(cfg.seed, 800 + q), FavorableMode::MonteCarlo, cfg.search,
                                      cfg.threads);
    const json v = favorable_to_json(r);
    out.push_back({8, "q = " + std::to_string(q) + ": q^2 (q-1) divides |Aut(G_S)| for every sample",
                   r.timeouts == 0 && r.divisible == r.trials, v});
    if (q == 13)
      out.push_back({8, "q = 13: fraction with |Aut(G_S)| = q^2 (q-1) is at least 0.9",
                     r.fraction >= BigRational(9, 10), v});
  }
  const auto pb = favorable_probability_bound(13);
  out.push_back({8, "favorable probability bound at q = 13 equals 336", pb == 336, rational_json(pb)});
  return out;
}

std::vector<Check> c9_kneser(const RecipeConfig& cfg) {
  std::vector<Check> out;
  for (auto [n, r] : {std::pair{6u, 3u}, std::pair{7u, 3u}}) {
    const Graph g = kneser_complement(n, r);
    const std::string tag = "complement of K(" + std::to_string(n) + "," + std::to_string(r) + ")";
    const auto aut = automorphism_group(g, {}, cfg.search);
    out.push_back({9, tag + ": |Aut| = n!", aut.complete && aut.order == factorial(n),
                   {{"order", aut.order.str()}, {"n_factorial", factorial(n).str()}}});
    const unsigned chi = chromatic_number(g, cfg.search);
    std::uint64_t failures = 0;
    json first_failure;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const Coloring c = random_proper_coloring(g, chi, derive_seed(cfg.seed, 900'000 + n * 10'000 + i));
      const auto d = is_distinguishing(g, c, cfg.search);
      if (!d.distinguishing) {
        if (failures++ == 0) first_failure = {{"coloring", coloring_to_json(c)}, {"witness", perm_json(*d.witness)}};
      }
    }
    json v{{"chi", chi}, {"colorings", 1000}, {"failures", failures}};
    if (failures) v["first_failure"] = first_failure;
    out.push_back({9, tag + ": 1000 random proper chi-colorings are distinguishing", failures == 0, v});
  }
  return out;
}

std::vector<Check> c10_krs(const RecipeConfig& cfg) {
  std::vector<Check> out;
  const auto [g, meta] = levi_tensor_krs(5, 2, 2);
  const auto base = levi5_run(cfg);
  if (!base.split) {
    out.push_back({10, "base 3-coloring of LG_5 available", false, lemma_json(base)});
    return out;
  }
  const Coloring c = krs_plus_one_coloring(5, 2, 2, base.split->coloring);
  const auto verdict = verify(g, c, cfg.search);
  out.push_back({10, "krs_plus_one_coloring(5,2,2) is a proper distinguishing 5-coloring",
                 verdict.proper && verdict.distinguishing && c.k() == 5,
                 {{"proper", verdict.proper}, {"distinguishing", verdict.distinguishing}, {"colors", c.k()}}});

  std::uint64_t bad = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Coloring r = random_proper_coloring(g, 4, derive_seed(cfg.seed, 1'000'000 + i));
    const auto d = is_distinguishing(g, r, cfg.search);
    if (!is_proper(g, r) || d.distinguishing || !valid_witness(g, r, *d.witness)) ++bad;
  }
  out.push_back({10, "100 random proper 4-colorings each have a verified nontrivial witness", bad == 0,
                 {{"colorings", 100}, {"failures", bad}}});
  return out;
}

std::vector<Check> c11_lemma_suite(const RecipeConfig& cfg) {
  std::vector<Check> out;
  std::vector<LemmaRun> runs{levi5_run(cfg), levi4_run(cfg), lg1_run(cfg), weak_run(cfg)};
  for (int q : {2, 3}) {
    const Graph g = levi_graph(q);
    auto G = pgl3_action(q);
    runs.push_back(lemma_run("LG_" + std::to_string(q) + ", PGL(3," + std::to_string(q) + "), t=2", g,
                             elements_of(G), two_sided(g), 1, 2, derive_seed(cfg.seed, 1100 + q), cfg));
  }
  {
    const Graph g = levi_order1(2, 6);
    auto G = levi_order1_action(2, 6);
    runs.push_back(lemma_run("LG_1(2,6), S_6, t=2", g, elements_of(G), two_sided(g), 2, 2,
                             derive_seed(cfg.seed, 1106), cfg));
  }

  json all = json::array();
  std::uint64_t violations = 0;
  bool counting = true, splits = true;
  for (const auto& run : runs) {
    all.push_back(lemma_json(run));
    violations += run.report.theta_bound_violations;
    counting = counting && run.report.counting_bound_holds;
    if (run.report.lemma_satisfied) splits = splits && run.split && run.verdict.proper && run.verdict.distinguishing;
  }
  out.push_back({11, "split search succeeds wherever the certificate holds", splits, {{"instances", all}}});
  out.push_back({11, "2 theta <= |C1| + F on every element of every enumerated group", violations == 0,
                 {{"violations", violations}}});
  out.push_back({11, "(E(N) - 1)^2 <= (|G| - 1)^2 t^(F - |C1|) on every instance", counting, json::object()});

  // The color-preserving group of a distinguishing coloring is trivial.
  json trivial = json::array();
  bool trivial_ok = true;
  for (const auto& run : runs) {
    if (!run.split || !run.verdict.distinguishing) continue;
    const Graph g = run.instance.starts_with("LG_5") ? levi_graph(5) : Graph();
    if (g.order() == 0) continue;
    GroupSpec G{g.order(), color_preserving_automorphisms(g, run.split->coloring, cfg.search).generators};
    for (std::uint32_t cls = 1; cls <= run.split->coloring.k(); ++cls) {
      const auto r = exact_expected_fixers(elements_of(G), run.split->coloring.color_class(cls), 2);
      trivial_ok = trivial_ok && G.elements->size() == 1 && r.exact_EN == 1 && r.lemma_satisfied;
      trivial.push_back({{"class", cls}, {"exact_EN", rational_json(r.exact_EN)}});
    }
  }
  PermutationTable identity(5);
  identity.push_back(Permutation::identity(5));
  for (unsigned t : {2u, 3u, 7u}) {
    const auto r = exact_expected_fixers(identity, {0, 2, 4}, t);
    trivial_ok = trivial_ok && r.exact_EN == 1;
    trivial.push_back({{"identity_only_t", t}, {"exact_EN", rational_json(r.exact_EN)}});
  }
  out.push_back({11, "E(N) = 1 exactly for trivial groups", trivial_ok && trivial.size() > 3, {{"cases", trivial}}});
  return out;
}

}  // namespace

std::vector<Check> criterion_checks(int criterion, const RecipeConfig& cfg) {
  switch (criterion) {
    case 1: return c1_levi_certificates(cfg);
    case 2: return c2_levi_bound(cfg);
    case 3: return c3_lg2(cfg);
    case 4: return c4_lg3(cfg);
    case 5: return c5_lg1(cfg);
    case 6: return c6_weak(cfg);
    case 7: return c7_gs5(cfg);
    case 8: return c8_gs_aut(cfg);
    case 9: return c9_kneser(cfg);
    case 10: return c10_krs(cfg);
    case 11: return c11_lemma_suite(cfg);
  }
  throw Error(ErrorCode::InvalidParameters, "criterion must be in 1..11");
}

const std::vector<std::string>& recipe_names() {
  static const std::vector<std::string> names{"levi", "lg1", "weak", "gs", "kneser", "krs", "appendix", "all"};
  return names;
}

std::vector<int> recipe_criteria(std::string_view recipe) {
  if (recipe == "levi") return {1, 2};
  if (recipe == "appendix") return {3, 4};
  if (recipe == "lg1") return {5};
  if (recipe == "weak") return {6};
  if (recipe == "gs") return {7, 8};
  if (recipe == "kneser") return {9};
  if (recipe == "krs") return {10};
  if (recipe == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11};
  throw Error(ErrorCode::InvalidParameters, "unknown recipe: " + std::string(recipe));
}

json check_to_json(const Check& c) {
  return {{"criterion", c.criterion}, {"name", c.name}, {"pass", c.pass}, {"values", c.values}};
}

json run_recipe(std::string_view recipe, const RecipeConfig& cfg) {
  json checks = json::array();
  bool pass = true;
  for (int criterion : recipe_criteria(recipe))
    for (const auto& c : criterion_checks(criterion, cfg)) {
      pass = pass && c.pass;
      checks.push_back(check_to_json(c));
    }
  return {{"schema", kReportSchema}, {"recipe", recipe}, {"seed", cfg.seed}, {"pass", pass}, {"checks", checks}};
}

}  // namespace dchroma
