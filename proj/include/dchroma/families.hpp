#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dchroma/algebra.hpp"
#include "dchroma/graph.hpp"
#include "dchroma/permgroup.hpp"

namespace dchroma {

using Triple = std::array<FieldElem, 3>;

/// PG(2,q) with normalized homogeneous coordinates (first nonzero entry 1).
/// Points and lines are both listed as (1,h,k) lex, then (0,1,k), then (0,0,1);
/// line [a,b,c] is the set ax+by+cz = 0.
struct ProjectivePlane {
  int q = 0;
  FiniteField field;
  std::vector<Triple> points;
  std::vector<Triple> lines;
  std::vector<std::vector<std::uint32_t>> points_on_line;
  std::vector<std::vector<std::uint32_t>> lines_through_point;

  std::size_t size() const { return points.size(); }
  bool incident(std::uint32_t p, std::uint32_t l) const;
  /// Index of the normalized form of a nonzero vector.
  std::uint32_t index_of(Triple v) const;
  /// The unique line through two distinct points.
  std::uint32_t line_through(std::uint32_t p1, std::uint32_t p2) const;
  /// e.g. "P(1,0,2)" or "L(0,0,1)".
  std::string point_label(std::uint32_t p) const;
  std::string line_label(std::uint32_t l) const;

 private:
  friend ProjectivePlane pg2(int q);
  explicit ProjectivePlane(int q_) : q(q_), field(q_) {}
  std::vector<std::uint32_t> index_;  // base-q code of a normalized triple -> index
  std::vector<std::uint32_t> join_;   // p1 * size + p2 -> line
};

ProjectivePlane pg2(int q);

/// Points 0..P-1, then lines P..2P-1; side 0 = points.
Graph levi_graph(int q);
Graph levi_graph(const ProjectivePlane& plane);

/// PGL(3,q) acting on the vertices of levi_graph(q).
GroupSpec pgl3_action(int q);
/// PGL(3,q) extended by the coordinatewise Frobenius.
GroupSpec pgammal3_action(int q);
GroupSpec pgl3_action(const ProjectivePlane& plane);
GroupSpec pgammal3_action(const ProjectivePlane& plane);
/// Vertex permutation of levi_graph induced by a point permutation that
/// maps lines to lines.
Permutation induced_levi_permutation(const ProjectivePlane& plane, const std::vector<std::uint32_t>& point_map);

/// Left = (k-1)-subsets, right = k-subsets of [n], both colex; containment.
Graph levi_order1(unsigned k, unsigned n);
/// S_n acting on all vertices of levi_order1(k, n).
GroupSpec levi_order1_action(unsigned k, unsigned n);

/// r-subsets of [n] in colex order, adjacent iff they intersect.
Graph kneser_complement(unsigned n, unsigned r);

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

/// Vertex (g, h) has id g * |H| + h.
Graph weak_product(const Graph& g, const Graph& h);
/// Tuples in row-major order, coordinate 0 most significant.
Graph weak_power(const Graph& g, unsigned n);

/// Element of F_q, or kInfiniteSlope.
using Slope = int;
inline constexpr Slope kInfiniteSlope = -1;
std::string slope_to_string(Slope s);

struct SlopeGraphMeta {
  int q = 0;
  std::vector<int> S;
};

/// Vertex (x, y) of F_q^2 has id x * q + y.
std::pair<Graph, SlopeGraphMeta> slope_graph(int q, std::vector<int> S);
/// (v2-u2)/(v1-u1), or kInfiniteSlope when v1 == u1.
Slope slope(int q, Vertex u, Vertex v);
/// Lines of one slope, indexed by intercept: y = alpha*x + c, or x = c for infinity.
std::vector<std::vector<Vertex>> affine_line_partition(int q, Slope alpha);
/// The maps (x,y) -> (lambda x + b1, lambda y + b2), order q^2 (q-1).
GroupSpec scalar_translation_action(int q);
/// (x,y) -> (x+1, y+alpha), or (x, y+1) for infinity.
Permutation slope_translation(int q, Slope alpha);

struct FiberMeta {
  int q = 0;
  unsigned r = 0;
  unsigned s = 0;
  std::size_t plane_size = 0;

  Vertex point_copy(std::uint32_t p, unsigned i) const { return static_cast<Vertex>(p * r + i); }
  Vertex line_copy(std::uint32_t l, unsigned j) const {
    return static_cast<Vertex>(plane_size * r + l * s + j);
  }
  std::vector<Vertex> point_fiber(std::uint32_t p) const;
  std::vector<Vertex> line_fiber(std::uint32_t l) const;
};

/// LG_q tensor K_{r,s}: (p,i) ~ (l,j) iff p lies on l.
std::pair<Graph, FiberMeta> levi_tensor_krs(int q, unsigned r, unsigned s);
/// Transposition of two copies within the fiber of a point (or line).
Permutation fiber_swap(const FiberMeta& meta, bool is_line, std::uint32_t index, unsigned i, unsigned j);

}  // namespace dchroma
