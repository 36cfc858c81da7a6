#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dchroma/automorphism.hpp"
#include "dchroma/families.hpp"
#include "dchroma/graph.hpp"

namespace dchroma {

/// Vertex coloring with colors 1..k, every color used.
class Coloring {
 public:
  Coloring() = default;
  /// Throws Error(InvalidInput) if a color is 0 or some color in 1..max is unused.
  explicit Coloring(std::vector<std::uint32_t> colors);
  /// Renumbers colors to 1..k preserving their relative order.
  static Coloring compact(std::vector<std::uint32_t> colors);

  std::size_t size() const { return colors_.size(); }
  std::uint32_t k() const { return k_; }
  std::uint32_t operator[](Vertex v) const { return colors_[v]; }
  const std::vector<std::uint32_t>& colors() const { return colors_; }
  /// Vertices of color c (1-based), ascending.
  std::vector<Vertex> color_class(std::uint32_t c) const;
  std::vector<std::size_t> class_sizes() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::uint32_t> colors_;
  std::uint32_t k_ = 0;
};

// Coloring file: one "vertex color" line per vertex.
std::string coloring_to_text(const Coloring& c);
Coloring coloring_from_text(const std::string& text, std::size_t n);
nlohmann::json coloring_to_json(const Coloring& c);
Coloring coloring_from_json(const nlohmann::json& j);

bool is_proper(const Graph& g, const Coloring& c);

struct DistinguishResult {
  bool distinguishing = false;
  std::optional<Permutation> witness;
};

/// Searches for a nontrivial automorphism preserving every color class.
DistinguishResult is_distinguishing(const Graph& g, const Coloring& c, const SearchOptions& opts = {});
AutResult color_preserving_automorphisms(const Graph& g, const Coloring& c, const SearchOptions& opts = {});

/// Exact chromatic number: DSATUR branch and bound, lower bound from a clique
/// and from ceil(n / alpha).
unsigned chromatic_number(const Graph& g, const SearchOptions& opts = {});

enum class EnumerationMode { All, UpToColorPermutation };

/// Streams every proper coloring using exactly k colors. The callback returns
/// false to stop early. Returns the number emitted; Error(CapExceeded) past cap.
std::uint64_t enumerate_proper_colorings(const Graph& g, unsigned k, EnumerationMode mode,
                                         const std::function<bool(const Coloring&)>& emit,
                                         std::uint64_t cap = 100'000'000);

struct LowerBoundCertificate {
  unsigned k = 0;
  bool exhaustive = false;
  std::uint64_t colorings = 0;
  /// Representative coloring and a nontrivial automorphism preserving it.
  std::vector<std::pair<Coloring, Permutation>> witnesses;
};

struct ChiDResult {
  std::optional<unsigned> value;  // nullopt = Unknown
  std::optional<Coloring> witness;
  unsigned chromatic = 0;
  std::vector<LowerBoundCertificate> certificates;
};

struct ChiDOptions {
  SearchOptions search;
  std::uint64_t coloring_cap = 10'000'000;
  std::size_t stored_witnesses = 100'000;
};

ChiDResult distinguishing_chromatic_number(const Graph& g, unsigned max_k, const ChiDOptions& opts = {});

/// Random proper coloring with exactly k colors: random static vertex order,
/// random color order per vertex, backtracking with restarts.
/// Throws Error(Infeasible) after 10^4 failed attempts.
Coloring random_proper_coloring(const Graph& g, unsigned k, std::uint64_t seed);

/// Recolors class `class_id` i.i.d. uniformly over t colors: the old id and
/// k+1..k+t-1. Unused colors are compacted away.
Coloring split_color_class(const Coloring& c, std::uint32_t class_id, unsigned t, std::uint64_t seed);

/// Classes L, A, R\A (k = 2) or R, A, L\A (k = 3) on levi_order1(k, n), with
/// A = {12, 23, 24, 34, 45, 56, ..., (n-1)n}.
Coloring lg1_explicit_coloring(unsigned k, unsigned n);

/// Lines of slope gamma as q colors, with (0,0) moved to color q+1.
Coloring gs_plus_one_coloring(int q, const std::vector<int>& S, Slope gamma);

/// r+s+1 colors on levi_tensor_krs(q, r, s) built from a 3-coloring of LG_q
/// whose lines form one class.
Coloring krs_plus_one_coloring(int q, unsigned r, unsigned s, const Coloring& base3);

/// Colors tuple (x_0, ..., x_{n-1}) of weak_power(G, n) by base[x_coord].
Coloring factor_induced_coloring(const Coloring& base, unsigned n, unsigned coord);

/// Proper 5-coloring of LG_3 with line (0,0,1) alone in its class, its points
/// in four distinct colors and the other lines through each of those points
/// in three distinct colors. Returns the first distinguishing one in a fixed
/// search order.
Coloring lg3_structured_coloring(const SearchOptions& opts = {});

}  // namespace dchroma
