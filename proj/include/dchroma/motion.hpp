#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dchroma/algebra.hpp"
#include "dchroma/coloring.hpp"
#include "dchroma/families.hpp"
#include "dchroma/permgroup.hpp"

namespace dchroma {

/// Minimum number of points moved by a nontrivial element.
/// Throws Error(EmptyGroup) when the table holds only the identity.
std::size_t motion(const PermutationTable& elements);

struct MotionReport {
  BigInt group_order;
  std::size_t class_size = 0;
  unsigned t = 0;
  BigRational exact_EN;
  std::size_t F_max = 0;  // over nontrivial elements; 0 for the trivial group
  std::map<std::size_t, std::uint64_t> theta_histogram;
  std::uint64_t least_prime = 0;  // 0 for the trivial group
  /// exact_EN < least_prime; vacuously true for the trivial group.
  bool lemma_satisfied = false;
  /// t^(|C1| - F_max) > |G|^2.
  bool log_condition = false;
  /// Elements violating 2 theta <= |C1| + F (expected 0).
  std::uint64_t theta_bound_violations = 0;
  /// (exact_EN - 1)^2 <= (order - 1)^2 t^(F_max - |C1|).
  bool counting_bound_holds = false;
  std::optional<std::size_t> motion;
};

/// Exact sum over all elements of t^(theta - |C1|). Every element must map
/// C1 onto itself (Error(NotSetwiseStable) otherwise). The sum is split over
/// `threads` workers and merged in index order.
MotionReport exact_expected_fixers(const PermutationTable& elements, const std::vector<Vertex>& c1,
                                   unsigned t, unsigned threads = 1);

nlohmann::json motion_report_to_json(const MotionReport& r);

/// numer / base^(twice_exponent / 2) + 1, kept exact; comparisons go
/// through squares so half-integer exponents never touch floating point.
struct HalfPowerBound {
  BigInt numer;
  BigInt base;
  BigInt twice_exponent;

  /// value < r for an integer r >= 1.
  bool less_than(const BigInt& r) const;
  /// Exact rational value when the exponent is an integer.
  std::optional<BigRational> rational() const;
  /// Decimal rendering for display only.
  std::string decimal(int digits = 12) const;
  double approx() const;
  std::string to_string() const;
};
bool operator<(const HalfPowerBound& a, const HalfPowerBound& b);
nlohmann::json bound_to_json(const HalfPowerBound& b);

/// (q^8 - q^6 - q^5 + q^3) n / t^((q^2+1)/2) + 1 for q = p^n.
HalfPowerBound levi_bound(int q, unsigned t);
/// Same with log2(q) in place of n, display only.
double levi_bound_log2_form(int q, unsigned t);

/// n! / 2^K + 1 with 2K = C(n,k) - C(n-2,k-2) - C(n-2,k).
HalfPowerBound lg1_bound(unsigned n, unsigned k);

struct FixedKsets {
  BigInt F;
  std::vector<std::vector<unsigned>> argmax;  // cycle types, parts descending
  bool only_transpositions = false;
  bool exhaustive = false;
};

/// Max over nontrivial sigma in S_n of the number of k-subsets sigma fixes,
/// exhaustively over cycle types for n <= 12; Error(TooLarge) beyond.
FixedKsets max_fixed_ksets(unsigned n, unsigned k);
/// Closed form C(n-2,k-2) + C(n-2,k).
BigInt fixed_ksets_formula(unsigned n, unsigned k);

/// n! aut^n / 2^(m^(n-1)) + 1.
HalfPowerBound weak_bound(unsigned m, const BigInt& aut_order, unsigned n, std::size_t c1_size);

/// Slope map of x -> [[a, b], [c, d]] x on F_q^2: alpha -> (d alpha + c) / (a + b alpha).
Slope slope_mobius(int q, int a, int b, int c, int d, Slope alpha);
/// Image of vertex (x, y) = x*q + y under the matrix.
Vertex apply_matrix(int q, int a, int b, int c, int d, Vertex v);

enum class FavorableMode { ExactSmall, MonteCarlo };

struct FavorableReport {
  int q = 0;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::uint64_t equal = 0;      // |Aut(G_S)| == q^2 (q-1)
  std::uint64_t divisible = 0;  // q^2 (q-1) divides |Aut(G_S)|
  std::uint64_t timeouts = 0;
  std::map<std::string, std::uint64_t> order_histogram;
  BigRational fraction;
  BigRational probability_bound;
};

/// (q^2-1)(q^2-q) 2 p((q-1)/2) / C(q, (q-1)/2).
BigRational favorable_probability_bound(int q);
/// ExactSmall runs every S; MonteCarlo samples `trials` uniform S.
FavorableReport favorable_fraction(int q, std::uint64_t trials, std::uint64_t seed, FavorableMode mode,
                                   const SearchOptions& opts = {}, unsigned threads = 1);
nlohmann::json favorable_to_json(const FavorableReport& r);

/// Splits class_id into t random parts until the result is distinguishing.
/// Requires report.lemma_satisfied; Error(ExhaustedTries) after max_tries.
struct SplitResult {
  Coloring coloring;
  std::uint64_t tries = 0;
};
SplitResult randomized_split_search(const Graph& g, const Coloring& c, std::uint32_t class_id, unsigned t,
                                    const MotionReport& report, std::uint64_t seed, std::uint64_t max_tries,
                                    const SearchOptions& opts = {});

struct LineDirectionReport {
  int q = 0;
  std::uint64_t checked = 0;
  std::uint64_t lines_seen = 0;
  std::uint64_t violations = 0;
  std::size_t min_directions_nonline = 0;
  bool exhaustive = false;
};

/// Every q-subset of F_q^2 that is not a line determines at least (q+3)/2
/// slopes. Exhaustive when samples == 0, otherwise seeded sampling.
LineDirectionReport check_line_directions(int q, std::uint64_t samples, std::uint64_t seed);

}  // namespace dchroma
