#include "dchroma/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

#include "dchroma/error.hpp"

namespace dchroma {

Graph::Graph(std::size_t n, std::span<const Edge> edges)
    : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0), adj_(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw Error(ErrorCode::InvalidInput, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::InvalidInput, "loops are not allowed");
    if (adjacent(u, v)) continue;
    bits_[u * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    bits_[v * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    ++m_;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

void Graph::set_sides(std::vector<std::uint8_t> sides) {
  if (sides.size() != n_) throw Error(ErrorCode::InvalidInput, "side vector has wrong length");
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : adj_[u])
      if (sides[u] == sides[v]) throw Error(ErrorCode::InvalidInput, "edge inside one side");
  side_ = std::move(sides);
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != n_) throw Error(ErrorCode::InvalidInput, "label vector has wrong length");
  labels_ = std::move(labels);
}

bool Graph::is_automorphism(const Permutation& p) const {
  if (p.degree() != n_) return false;
  for (Vertex u = 0; u < n_; ++u) {
    if (adj_[p(u)].size() != adj_[u].size()) return false;
    for (Vertex v : adj_[u])
      if (!adjacent(p(u), p(v))) return false;
  }
  return true;
}

Graph Graph::relabeled(const Permutation& p) const {
  std::vector<Edge> es;
  for (auto [u, v] : edges()) es.emplace_back(p(u), p(v));
  return Graph(n_, es);
}

bool is_r_thin(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  auto row_less = [&](Vertex a, Vertex b) {
    const auto ra = g.row(a), rb = g.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  };
  std::sort(order.begin(), order.end(), row_less);
  for (std::size_t i = 1; i < n; ++i) {
    const auto ra = g.row(order[i - 1]), rb = g.row(order[i]);
    if (std::equal(ra.begin(), ra.end(), rb.begin())) return false;
  }
  return true;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.order();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(s);
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// --- I/O --------------------------------------------------------------------

void write_graph(std::ostream& out, const Graph& g) {
  const auto es = g.edges();
  out << g.order() << ' ' << es.size() << '\n';
  for (auto [u, v] : es) out << u << ' ' << v << '\n';
  if (g.sides()) {
    out << "#side\n";
    for (Vertex v = 0; v < g.order(); ++v) out << v << ' ' << int{(*g.sides())[v]} << '\n';
  }
  if (g.labels()) {
    out << "#label\n";
    for (Vertex v = 0; v < g.order(); ++v) out << v << ' ' << (*g.labels())[v] << '\n';
  }
}

std::string graph_to_text(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

namespace {

[[noreturn]] void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  auto next = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next()) parse_fail(lineno, "missing header");
  long long n = -1, m = -1;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0) parse_fail(lineno, "header must be 'n m'");
  }
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    if (!next()) parse_fail(lineno, "missing edge lines");
    std::istringstream es(line);
    long long u, v;
    std::string rest;
    if (!(es >> u >> v) || (es >> rest)) parse_fail(lineno, "edge line must be 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n || u == v) parse_fail(lineno, "bad edge endpoints");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  Graph g(static_cast<std::size_t>(n), edges);
  if (g.edge_count() != static_cast<std::size_t>(m)) parse_fail(lineno, "duplicate edges");

  while (next()) {
    if (line == "#side") {
      std::vector<std::uint8_t> sides(n);
      for (long long i = 0; i < n; ++i) {
        if (!next()) parse_fail(lineno, "truncated #side block");
        std::istringstream ss(line);
        long long v, s;
        if (!(ss >> v >> s) || v != i || (s != 0 && s != 1)) parse_fail(lineno, "bad side line");
        sides[i] = static_cast<std::uint8_t>(s);
      }
      g.set_sides(std::move(sides));
    } else if (line == "#label") {
      std::vector<std::string> labels(n);
      for (long long i = 0; i < n; ++i) {
        if (!next()) parse_fail(lineno, "truncated #label block");
        const auto sp = line.find(' ');
        if (sp == std::string::npos || line.substr(0, sp) != std::to_string(i))
          parse_fail(lineno, "bad label line");
        labels[i] = line.substr(sp + 1);
      }
      g.set_labels(std::move(labels));
    } else {
      parse_fail(lineno, "unexpected content");
    }
  }
  return g;
}

Graph graph_from_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.order();
  j["m"] = g.edge_count();
  auto& es = j["edges"] = nlohmann::json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  if (g.sides()) {
    std::vector<int> s((*g.sides()).begin(), (*g.sides()).end());
    j["side"] = s;
  }
  if (g.labels()) j["labels"] = *g.labels();
  return j;
}

Graph graph_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    Graph g(n, edges);
    if (j.contains("side")) {
      std::vector<std::uint8_t> s;
      for (int x : j["side"].get<std::vector<int>>()) s.push_back(static_cast<std::uint8_t>(x));
      g.set_sides(std::move(s));
    }
    if (j.contains("labels")) g.set_labels(j["labels"].get<std::vector<std::string>>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace dchroma
