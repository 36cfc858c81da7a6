#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dchroma/algebra.hpp"

namespace dchroma {

using Point = std::uint32_t;

/// A bijection on {0, ..., degree-1} stored as its image array.
///
/// Products read left to right: (a * b)(x) == b(a(x)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws Error(InvalidInput) unless images is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);
  /// Builds from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point x) const { return images_[x]; }
  std::span<const Point> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::size_t moved_count() const;
  /// Disjoint cycles of length >= 2, each starting at its smallest point.
  std::vector<std::vector<Point>> cycles() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Flat storage for a large list of permutations of one degree.
///
/// Rows are 16-bit, so the degree is limited to 65536 points; closure of a
/// group of order 10^6 on a few hundred points then fits comfortably.
class PermutationTable {
 public:
  using Row = std::span<const std::uint16_t>;

  explicit PermutationTable(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return degree_ == 0 ? 0 : data_.size() / degree_; }
  Row row(std::size_t i) const { return Row(data_.data() + i * degree_, degree_); }
  Permutation at(std::size_t i) const;

  void push_back(const Permutation& p);
  void push_back(Row row);
  void pop_back() { data_.resize(data_.size() - degree_); }
  void reserve(std::size_t rows) { data_.reserve(rows * degree_); }

 private:
  std::size_t degree_;
  std::vector<std::uint16_t> data_;
};

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;

/// All elements of the group generated by gens (breadth-first products with
/// hash dedup). Row 0 is the identity. Throws Error(CapExceeded) past cap.
PermutationTable closure(const std::vector<Permutation>& gens, std::size_t cap = kDefaultClosureCap);

/// Base and strong generating set built by deterministic Schreier-Sims.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens);

  BigInt order() const;
  bool contains(const Permutation& g) const;
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    Point base;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> orbit_index;  // point -> slot in transversal, -1 if absent
    std::vector<Point> orbit;
    std::vector<Permutation> transversal;   // transversal[i] maps base to orbit[i]
  };

  void extend(std::size_t level, Permutation g);
  Permutation strip(std::size_t level, Permutation g) const;

  std::size_t degree_;
  std::vector<Level> levels_;
};

/// A group given by generators, with optionally materialized elements.
struct GroupSpec {
  std::size_t degree = 0;
  std::vector<Permutation> generators;
  std::optional<PermutationTable> elements;
  std::optional<BigInt> order;

  /// Validates generator degrees. An empty generator list means the trivial group.
  GroupSpec(std::size_t degree, std::vector<Permutation> generators);

  /// Populates `elements` (and `order`) via closure if not done yet.
  const PermutationTable& ensure_elements(std::size_t cap = kDefaultClosureCap);
  /// Generators with the identity substituted for an empty list.
  std::vector<Permutation> nonempty_generators() const;
};

/// Exact order of <gens>, read off a stabilizer chain.
BigInt group_order(std::size_t degree, const std::vector<Permutation>& gens);
inline BigInt group_order(const GroupSpec& g) { return group_order(g.degree, g.generators); }

struct OrbitCount {
  std::size_t theta = 0;  // cycles of the restriction to the subset
  std::size_t fixed = 0;  // points of the subset left in place
};

/// Cycle and fixed-point counts of perm restricted to a setwise-stable subset.
/// Throws Error(NotSetwiseStable) when perm moves a subset point outside.
OrbitCount orbit_count_on(const Permutation& perm, std::span<const Point> subset);
/// Same on a table row; `member` is an indicator of the subset over all points.
OrbitCount orbit_count_on(PermutationTable::Row row, std::span<const Point> subset,
                          const std::vector<char>& member);

/// S_n acting on the k-subsets of [n] (colex order), generated by (0 1) and
/// the n-cycle. Throws Error(TooLarge) when binomial(n, k) > 10^6.
GroupSpec induced_action_on_ksets(unsigned n, unsigned k);

/// base wr S_n acting on n-tuples over the base's m points, tuples in
/// row-major order (coordinate 0 most significant). Throws Error(TooLarge)
/// when m^n > 10^6.
GroupSpec wreath_action(const GroupSpec& base, unsigned n);

/// The full symmetric group on m points as a GroupSpec.
GroupSpec symmetric_group(std::size_t m);

std::string to_string(const Permutation& p);

}  // namespace dchroma
