#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "dchroma/permgroup.hpp"

namespace dchroma {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected loop-free graph with bitset adjacency.
///
/// Immutable once built. Optional per-vertex side tags (0/1, for incidence
/// graphs) and free-form labels travel with the graph through I/O.
class Graph {
 public:
  Graph() = default;
  /// Throws Error(InvalidInput) on loops or out-of-range endpoints; duplicate
  /// edges are merged.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t edge_count() const { return m_; }
  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * words_, words_};
  }

  /// Edges (u, v) with u < v in ascending order.
  std::vector<Edge> edges() const;

  const std::optional<std::vector<std::uint8_t>>& sides() const { return side_; }
  const std::optional<std::vector<std::string>>& labels() const { return labels_; }
  /// Throws Error(InvalidInput) if some edge joins two vertices of one side.
  void set_sides(std::vector<std::uint8_t> sides);
  void set_labels(std::vector<std::string> labels);

  /// True iff p maps every edge to an edge.
  bool is_automorphism(const Permutation& p) const;
  /// The graph with vertex v renamed to p(v).
  Graph relabeled(const Permutation& p) const;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::vector<Vertex>> adj_;
  std::optional<std::vector<std::uint8_t>> side_;
  std::optional<std::vector<std::string>> labels_;
};

bool is_r_thin(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

// Text format: header "n m", then m lines "u v" (u < v, ascending), then
// optionally a "#side" line followed by n lines "v s", and a "#label" line
// followed by n lines "v text".
void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_text(const Graph& g);
/// Throws Error(ParseError) on malformed input.
Graph read_graph(std::istream& in);
Graph graph_from_text(const std::string& text);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace dchroma
