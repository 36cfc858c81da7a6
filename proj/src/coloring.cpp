#include "dchroma/coloring.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "dchroma/error.hpp"
#include "dchroma/rng.hpp"

namespace dchroma {

// --- Coloring ---------------------------------------------------------------

Coloring::Coloring(std::vector<std::uint32_t> colors) : colors_(std::move(colors)) {
  std::uint32_t k = 0;
  for (auto c : colors_) {
    if (c == 0) throw Error(ErrorCode::InvalidInput, "colors are 1-based");
    k = std::max(k, c);
  }
  std::vector<char> used(k + 1, 0);
  for (auto c : colors_) used[c] = 1;
  for (std::uint32_t c = 1; c <= k; ++c)
    if (!used[c]) throw Error(ErrorCode::InvalidInput, "color " + std::to_string(c) + " is unused");
  k_ = k;
}

Coloring Coloring::compact(std::vector<std::uint32_t> colors) {
  std::vector<std::uint32_t> distinct = colors;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (auto& c : colors)
    c = static_cast<std::uint32_t>(std::lower_bound(distinct.begin(), distinct.end(), c) - distinct.begin()) + 1;
  return Coloring(std::move(colors));
}

std::vector<Vertex> Coloring::color_class(std::uint32_t c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < colors_.size(); ++v)
    if (colors_[v] == c) out.push_back(v);
  return out;
}

std::vector<std::size_t> Coloring::class_sizes() const {
  std::vector<std::size_t> s(k_, 0);
  for (auto c : colors_) ++s[c - 1];
  return s;
}

std::string coloring_to_text(const Coloring& c) {
  std::ostringstream out;
  for (Vertex v = 0; v < c.size(); ++v) out << v << ' ' << c[v] << '\n';
  return out.str();
}

Coloring coloring_from_text(const std::string& text, std::size_t n) {
  std::istringstream in(text);
  std::vector<std::uint32_t> colors(n, 0);
  std::vector<char> seen(n, 0);
  std::string line;
  std::size_t lineno = 0, count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long v, c;
    std::string rest;
    if (!(ls >> v >> c) || (ls >> rest) || v < 0 || static_cast<std::size_t>(v) >= n || c < 1 || seen[v])
      throw Error(ErrorCode::ParseError, "coloring line " + std::to_string(lineno) + " is malformed");
    seen[v] = 1;
    colors[v] = static_cast<std::uint32_t>(c);
    ++count;
  }
  if (count != n) throw Error(ErrorCode::ParseError, "coloring does not cover every vertex");
  try {
    return Coloring(std::move(colors));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

nlohmann::json coloring_to_json(const Coloring& c) {
  return {{"k", c.k()}, {"colors", c.colors()}};
}

Coloring coloring_from_json(const nlohmann::json& j) {
  try {
    return Coloring(j.at("colors").get<std::vector<std::uint32_t>>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

bool is_proper(const Graph& g, const Coloring& c) {
  if (c.size() != g.order()) throw Error(ErrorCode::InvalidInput, "coloring size differs from vertex count");
  for (auto [u, v] : g.edges())
    if (c[u] == c[v]) return false;
  return true;
}

AutResult color_preserving_automorphisms(const Graph& g, const Coloring& c, const SearchOptions& opts) {
  if (c.size() != g.order()) throw Error(ErrorCode::InvalidInput, "coloring size differs from vertex count");
  return automorphism_group(g, c.colors(), opts);
}

DistinguishResult is_distinguishing(const Graph& g, const Coloring& c, const SearchOptions& opts) {
  SearchOptions o = opts;
  o.stop_at_first = true;
  AutResult r = color_preserving_automorphisms(g, c, o);
  DistinguishResult out;
  out.distinguishing = r.generators.empty();
  if (!r.generators.empty()) out.witness = std::move(r.generators.front());
  return out;
}

// --- chromatic number -------------------------------------------------------

namespace {

using Bits = std::vector<std::uint64_t>;

struct BitGraph {
  std::size_t n = 0;
  std::size_t words = 0;
  std::vector<Bits> rows;

  static BitGraph of(const Graph& g, bool complement) {
    BitGraph b;
    b.n = g.order();
    b.words = (b.n + 63) / 64;
    b.rows.assign(b.n, Bits(b.words, 0));
    for (Vertex u = 0; u < b.n; ++u)
      for (Vertex v = 0; v < b.n; ++v)
        if (u != v && g.adjacent(u, v) != complement) b.rows[u][v >> 6] |= std::uint64_t{1} << (v & 63);
    return b;
  }
};

// Maximum clique by branch and bound with a greedy coloring bound. Returns
// nullopt when the step budget runs out.
class MaxClique {
 public:
  MaxClique(const BitGraph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

  std::optional<std::size_t> run() {
    Bits all(g_.words, 0);
    for (std::size_t v = 0; v < g_.n; ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
    try {
      expand(all, 0);
    } catch (const Stop&) {
      return std::nullopt;
    }
    return best_;
  }

 private:
  struct Stop {};

  static std::size_t popcount(const Bits& b) {
    std::size_t c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
  }

  void expand(Bits cand, std::size_t size) {
    if (++steps_ > budget_) throw Stop{};
    // Greedy color classes give an upper bound per vertex.
    std::vector<std::pair<std::size_t, std::size_t>> order;  // (vertex, bound)
    Bits uncolored = cand;
    std::size_t color = 0;
    while (popcount(uncolored)) {
      ++color;
      Bits q = uncolored;
      while (true) {
        std::size_t w = 0;
        while (w < q.size() && q[w] == 0) ++w;
        if (w == q.size()) break;
        const std::size_t v = w * 64 + std::countr_zero(q[w]);
        q[w] &= q[w] - 1;
        uncolored[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        for (std::size_t i = 0; i < q.size(); ++i) q[i] &= ~g_.rows[v][i];
        order.emplace_back(v, color);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      const auto [v, bound] = order[i];
      if (size + bound <= best_) return;
      Bits next(g_.words);
      for (std::size_t w = 0; w < g_.words; ++w) next[w] = cand[w] & g_.rows[v][w];
      if (popcount(next) == 0) {
        best_ = std::max(best_, size + 1);
      } else {
        expand(next, size + 1);
      }
      cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
  }

  const BitGraph& g_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::size_t best_ = 0;
};

class Dsatur {
 public:
  Dsatur(const Graph& g, unsigned k, std::uint64_t budget)
      : g_(g), n_(g.order()), k_(k), budget_(budget), color_(n_, 0), seen_(n_ * (k + 1), 0), sat_(n_, 0) {}

  std::optional<std::vector<std::uint32_t>> run() {
    if (search(0, 0)) return color_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t colored, unsigned used) {
    if (++steps_ > budget_) throw Error(ErrorCode::Timeout, "chromatic number search exceeded budget");
    if (colored == n_) return true;
    Vertex best = 0;
    int best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v]) continue;
      int deg = 0;
      for (Vertex u : g_.neighbors(v)) deg += color_[u] == 0;
      if (static_cast<int>(sat_[v]) > best_sat || (static_cast<int>(sat_[v]) == best_sat && deg > best_deg)) {
        best = v;
        best_sat = static_cast<int>(sat_[v]);
        best_deg = deg;
      }
    }
    const unsigned limit = std::min(k_, used + 1);
    for (unsigned c = 1; c <= limit; ++c) {
      if (seen_[best * (k_ + 1) + c]) continue;
      assign(best, c, +1);
      if (search(colored + 1, std::max(used, c))) return true;
      assign(best, c, -1);
    }
    return false;
  }

  void assign(Vertex v, unsigned c, int delta) {
    color_[v] = delta > 0 ? c : 0;
    for (Vertex u : g_.neighbors(v)) {
      auto& s = seen_[u * (k_ + 1) + c];
      if (delta > 0) {
        if (s++ == 0) ++sat_[u];
      } else {
        if (--s == 0) --sat_[u];
      }
    }
  }

  const Graph& g_;
  std::size_t n_;
  unsigned k_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<std::uint32_t> color_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::uint32_t> sat_;
};

unsigned greedy_dsatur_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> color(n, 0);
  std::vector<std::vector<char>> seen(n);
  unsigned used = 0;
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    long best_sat = -1, best_deg = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (color[v]) continue;
      long sat = 0;
      for (char x : seen[v]) sat += x;
      const long deg = static_cast<long>(g.degree(v));
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    unsigned c = 1;
    while (c < seen[best].size() && seen[best][c]) ++c;
    color[best] = c;
    used = std::max(used, c);
    for (Vertex u : g.neighbors(best)) {
      if (seen[u].size() <= c) seen[u].resize(c + 1, 0);
      seen[u][c] = 1;
    }
  }
  return used;
}

}  // namespace

unsigned chromatic_number(const Graph& g, const SearchOptions& opts) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  if (g.edge_count() == 0) return 1;
  const unsigned ub = greedy_dsatur_colors(g);
  const std::uint64_t aux_budget = std::min<std::uint64_t>(opts.node_budget, 2'000'000);

  const BitGraph bg = BitGraph::of(g, false);
  unsigned lb = static_cast<unsigned>(MaxClique(bg, aux_budget).run().value_or(2));
  if (lb < ub) {
    const BitGraph co = BitGraph::of(g, true);
    if (auto alpha = MaxClique(co, aux_budget).run())
      lb = std::max(lb, static_cast<unsigned>((n + *alpha - 1) / *alpha));
  }
  for (unsigned k = lb; k < ub; ++k)
    if (Dsatur(g, k, opts.node_budget).run()) return k;
  return ub;
}

// --- enumeration ------------------------------------------------------------

namespace {

// Static order: each next vertex has the most already-ordered neighbors
// (ties: lowest id), starting from vertex 0.
std::vector<Vertex> enumeration_order(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order;
  std::vector<char> placed(n, 0);
  std::vector<std::size_t> score(n, 0);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      if (!found || score[v] > score[best]) {
        best = v;
        found = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex u : g.neighbors(best)) ++score[u];
  }
  return order;
}

}  // namespace

std::uint64_t enumerate_proper_colorings(const Graph& g, unsigned k, EnumerationMode mode,
                                         const std::function<bool(const Coloring&)>& emit,
                                         std::uint64_t cap) {
  const std::size_t n = g.order();
  if (k == 0 || k > n) return 0;
  const auto order = enumeration_order(g);
  std::vector<std::uint32_t> color(n, 0);
  std::vector<std::size_t> usage(k + 1, 0);
  unsigned distinct = 0;
  std::uint64_t emitted = 0;
  bool stop = false;

  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned max_used) {
    if (stop) return;
    if (k - distinct > n - i) return;
    if (i == n) {
      if (++emitted > cap) throw Error(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " colorings");
      if (!emit(Coloring(color))) stop = true;
      return;
    }
    const Vertex v = order[i];
    const unsigned limit = mode == EnumerationMode::All ? k : std::min(k, max_used + 1);
    for (unsigned c = 1; c <= limit && !stop; ++c) {
      bool ok = true;
      for (Vertex u : g.neighbors(v))
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      color[v] = c;
      if (usage[c]++ == 0) ++distinct;
      rec(i + 1, std::max(max_used, c));
      if (--usage[c] == 0) --distinct;
      color[v] = 0;
    }
  };
  rec(0, 0);
  return emitted;
}

ChiDResult distinguishing_chromatic_number(const Graph& g, unsigned max_k, const ChiDOptions& opts) {
  ChiDResult res;
  res.chromatic = chromatic_number(g, opts.search);
  for (unsigned k = std::max(res.chromatic, 1u); k <= max_k; ++k) {
    LowerBoundCertificate cert;
    cert.k = k;
    std::optional<Coloring> hit;
    try {
      cert.colorings = enumerate_proper_colorings(
          g, k, EnumerationMode::UpToColorPermutation,
          [&](const Coloring& c) {
            auto d = is_distinguishing(g, c, opts.search);
            if (d.distinguishing) {
              hit = c;
              return false;
            }
            if (cert.witnesses.size() < opts.stored_witnesses) cert.witnesses.emplace_back(c, *d.witness);
            return true;
          },
          opts.coloring_cap);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::CapExceeded && e.code() != ErrorCode::Timeout) throw;
      res.certificates.push_back(std::move(cert));
      return res;
    }
    if (hit) {
      res.value = k;
      res.witness = std::move(hit);
      return res;
    }
    cert.exhaustive = true;
    res.certificates.push_back(std::move(cert));
  }
  return res;
}

// --- random colorings -------------------------------------------------------

Coloring random_proper_coloring(const Graph& g, unsigned k, std::uint64_t seed) {
  const std::size_t n = g.order();
  if (k == 0 || k > n) throw Error(ErrorCode::Infeasible, "k must be in 1..n");
  SplitMix64 rng(seed);
  const std::uint64_t node_limit = 100 * n + 1000;

  for (int attempt = 0; attempt < 10'000; ++attempt) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
    std::vector<std::uint32_t> color(n, 0);
    std::vector<std::size_t> usage(k + 1, 0);
    unsigned distinct = 0;
    std::uint64_t nodes = 0;

    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
      if (++nodes > node_limit) return false;
      if (k - distinct > n - i) return false;
      if (i == n) return true;
      const Vertex v = order[i];
      std::vector<std::uint32_t> palette(k);
      std::iota(palette.begin(), palette.end(), 1u);
      for (std::size_t j = k; j > 1; --j) std::swap(palette[j - 1], palette[uniform_below(rng, j)]);
      for (auto c : palette) {
        bool ok = true;
        for (Vertex u : g.neighbors(v))
          if (color[u] == c) {
            ok = false;
            break;
          }
        if (!ok) continue;
        color[v] = c;
        if (usage[c]++ == 0) ++distinct;
        if (rec(i + 1)) return true;
        if (--usage[c] == 0) --distinct;
        color[v] = 0;
        if (nodes > node_limit) return false;
      }
      return false;
    };
    if (rec(0)) return Coloring(std::move(color));
  }
  throw Error(ErrorCode::Infeasible, "no proper " + std::to_string(k) + "-coloring found");
}

Coloring split_color_class(const Coloring& c, std::uint32_t class_id, unsigned t, std::uint64_t seed) {
  if (class_id < 1 || class_id > c.k()) throw Error(ErrorCode::InvalidParameters, "no such color class");
  if (t == 0) throw Error(ErrorCode::InvalidParameters, "t must be positive");
  SplitMix64 rng(seed);
  std::vector<std::uint32_t> colors = c.colors();
  for (auto& x : colors) {
    if (x != class_id) continue;
    const auto u = static_cast<std::uint32_t>(uniform_below(rng, t));
    x = u == 0 ? class_id : c.k() + u;
  }
  return Coloring::compact(std::move(colors));
}

// --- explicit colorings -----------------------------------------------------

Coloring lg1_explicit_coloring(unsigned k, unsigned n) {
  if (k != 2 && k != 3) throw Error(ErrorCode::InvalidParameters, "explicit colorings exist for k = 2, 3");
  const unsigned n0 = k == 2 ? 6 : 2 * k + 1;
  if (n < n0 || n > 32) throw Error(ErrorCode::InvalidParameters, "n below n_0(k)");
  const auto L = static_cast<std::size_t>(binomial(n, k - 1));
  const auto R = static_cast<std::size_t>(binomial(n, k));

  std::vector<std::uint32_t> a_masks{0b11u, 0b110u, 0b1010u, 0b1100u};
  for (unsigned i = 3; i + 1 < n; ++i) a_masks.push_back((1u << i) | (1u << (i + 1)));

  std::vector<std::uint32_t> colors(L + R);
  if (k == 2) {
    std::fill(colors.begin(), colors.begin() + L, 1);
    std::fill(colors.begin() + L, colors.end(), 3);
    for (auto m : a_masks) colors[L + colex_rank(m)] = 2;
  } else {
    std::fill(colors.begin(), colors.begin() + L, 3);
    std::fill(colors.begin() + L, colors.end(), 1);
    for (auto m : a_masks) colors[colex_rank(m)] = 2;
  }
  return Coloring(std::move(colors));
}

Coloring gs_plus_one_coloring(int q, const std::vector<int>& S, Slope gamma) {
  if (gamma == 1 || std::find(S.begin(), S.end(), gamma) != S.end())
    throw Error(ErrorCode::InvalidParameters, "gamma must differ from 1 and lie outside S");
  slope_graph(q, S);  // validates q and S
  const auto lines = affine_line_partition(q, gamma);
  std::vector<std::uint32_t> colors(static_cast<std::size_t>(q) * q);
  for (std::size_t c = 0; c < lines.size(); ++c)
    for (Vertex v : lines[c]) colors[v] = static_cast<std::uint32_t>(c + 1);
  colors[0] = static_cast<std::uint32_t>(q + 1);
  return Coloring(std::move(colors));
}

Coloring krs_plus_one_coloring(int q, unsigned r, unsigned s, const Coloring& base3) {
  if (r < 2 || s < 2) throw Error(ErrorCode::InvalidParameters, "r, s >= 2 required");
  const auto plane = pg2(q);
  const std::size_t P = plane.size();
  if (base3.size() != 2 * P || base3.k() != 3)
    throw Error(ErrorCode::InvalidBaseColoring, "base coloring must be a 3-coloring of LG_q");
  const std::uint32_t line_color = base3[static_cast<Vertex>(P)];
  for (std::size_t l = 0; l < P; ++l)
    if (base3[static_cast<Vertex>(P + l)] != line_color)
      throw Error(ErrorCode::InvalidBaseColoring, "lines are not monochromatic");
  std::uint32_t first_point_color = 4;
  for (std::size_t p = 0; p < P; ++p) {
    if (base3[static_cast<Vertex>(p)] == line_color)
      throw Error(ErrorCode::InvalidBaseColoring, "a point shares the line color");
    first_point_color = std::min(first_point_color, base3[static_cast<Vertex>(p)]);
  }
  const FiberMeta meta{q, r, s, P};
  std::vector<std::uint32_t> colors(P * (r + s));
  for (std::uint32_t p = 0; p < P; ++p) {
    for (unsigned i = 0; i + 1 < r; ++i) colors[meta.point_copy(p, i)] = i + 1;
    colors[meta.point_copy(p, r - 1)] = base3[p] == first_point_color ? r : r + s + 1;
  }
  for (std::uint32_t l = 0; l < P; ++l)
    for (unsigned j = 0; j < s; ++j) colors[meta.line_copy(l, j)] = r + 1 + j;
  return Coloring(std::move(colors));
}

Coloring factor_induced_coloring(const Coloring& base, unsigned n, unsigned coord) {
  if (coord >= n) throw Error(ErrorCode::InvalidParameters, "coordinate out of range");
  const std::size_t m = base.size();
  std::size_t total = 1, stride = 1;
  for (unsigned i = 0; i < n; ++i) total *= m;
  for (unsigned i = coord + 1; i < n; ++i) stride *= m;
  if (total > 2000) throw Error(ErrorCode::TooLarge, "weak power exceeds 2000 vertices");
  std::vector<std::uint32_t> colors(total);
  for (std::size_t v = 0; v < total; ++v) colors[v] = base[static_cast<Vertex>((v / stride) % m)];
  return Coloring::compact(std::move(colors));
}

Coloring lg3_structured_coloring(const SearchOptions& opts) {
  const auto plane = pg2(3);
  const Graph g = levi_graph(plane);
  const auto P = static_cast<std::uint32_t>(plane.size());
  const std::uint32_t special = plane.index_of({0, 0, 1});
  const auto& on_special = plane.points_on_line[special];

  std::vector<std::uint32_t> colors(2 * P, 0);
  colors[P + special] = 1;
  std::vector<std::vector<std::uint32_t>> pencils;  // other lines through each point
  for (std::size_t i = 0; i < on_special.size(); ++i) {
    colors[on_special[i]] = static_cast<std::uint32_t>(i + 2);
    std::vector<std::uint32_t> pencil;
    for (auto l : plane.lines_through_point[on_special[i]])
      if (l != special) pencil.push_back(l);
    pencils.push_back(std::move(pencil));
  }
  std::vector<std::uint32_t> rest;
  for (std::uint32_t p = 0; p < P; ++p)
    if (std::find(on_special.begin(), on_special.end(), p) == on_special.end()) rest.push_back(p);

  std::optional<Coloring> found;
  std::function<void(std::size_t)> color_rest = [&](std::size_t i) {
    if (found) return;
    if (i == rest.size()) {
      Coloring c(colors);
      if (is_distinguishing(g, c, opts).distinguishing) found = std::move(c);
      return;
    }
    const std::uint32_t p = rest[i];
    for (std::uint32_t col = 2; col <= 5 && !found; ++col) {
      bool ok = true;
      for (auto l : plane.lines_through_point[p])
        if (colors[P + l] == col) ok = false;
      if (!ok) continue;
      colors[p] = col;
      color_rest(i + 1);
      colors[p] = 0;
    }
  };
  std::function<void(std::size_t)> color_pencils = [&](std::size_t i) {
    if (found) return;
    if (i == pencils.size()) {
      color_rest(0);
      return;
    }
    std::vector<std::uint32_t> palette;
    for (std::uint32_t col = 2; col <= 5; ++col)
      if (col != colors[on_special[i]]) palette.push_back(col);
    do {
      for (std::size_t j = 0; j < pencils[i].size(); ++j) colors[P + pencils[i][j]] = palette[j];
      color_pencils(i + 1);
    } while (!found && std::next_permutation(palette.begin(), palette.end()));
  };
  color_pencils(0);
  if (!found) throw Error(ErrorCode::Infeasible, "no structured distinguishing 5-coloring of LG_3");
  return *found;
}

}  // namespace dchroma
