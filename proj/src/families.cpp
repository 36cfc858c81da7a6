#include "dchroma/families.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dchroma/error.hpp"

namespace dchroma {

namespace {

std::string triple_label(char tag, const FiniteField& f, const Triple& t) {
  std::string s(1, tag);
  s += '(';
  for (int i = 0; i < 3; ++i) {
    if (i) s += ',';
    s += f.to_string(t[i]);
  }
  s += ')';
  return s;
}

std::vector<Triple> normalized_triples(int q) {
  std::vector<Triple> out;
  for (int h = 0; h < q; ++h)
    for (int k = 0; k < q; ++k)
      out.push_back({1, static_cast<FieldElem>(h), static_cast<FieldElem>(k)});
  for (int k = 0; k < q; ++k) out.push_back({0, 1, static_cast<FieldElem>(k)});
  out.push_back({0, 0, 1});
  return out;
}

std::string subset_label(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned b = 0; b < 32; ++b)
    if (mask & (1u << b)) {
      if (!first) s += ',';
      s += std::to_string(b + 1);
      first = false;
    }
  return s + "}";
}

using Matrix3 = std::array<std::array<FieldElem, 3>, 3>;

Triple apply(const FiniteField& f, const Matrix3& m, const Triple& v) {
  Triple w{};
  for (int i = 0; i < 3; ++i) {
    FieldElem acc = 0;
    for (int j = 0; j < 3; ++j) acc = f.add(acc, f.mul(m[i][j], v[j]));
    w[i] = acc;
  }
  return w;
}

std::vector<std::uint32_t> point_map_of(const ProjectivePlane& plane, const Matrix3& m) {
  std::vector<std::uint32_t> map(plane.size());
  for (std::uint32_t p = 0; p < plane.size(); ++p)
    map[p] = plane.index_of(apply(plane.field, m, plane.points[p]));
  return map;
}

bool is_single_cycle(const std::vector<std::uint32_t>& map) {
  std::uint32_t x = 0;
  std::size_t len = 0;
  do {
    x = map[x];
    ++len;
  } while (x != 0 && len <= map.size());
  return len == map.size();
}

BigInt pgl3_order(int q) {
  const BigInt Q = q;
  return ipow(Q, 8) - ipow(Q, 6) - ipow(Q, 5) + ipow(Q, 3);
}

}  // namespace

// --- projective plane -------------------------------------------------------

bool ProjectivePlane::incident(std::uint32_t p, std::uint32_t l) const {
  const auto& x = points[p];
  const auto& a = lines[l];
  FieldElem s = 0;
  for (int i = 0; i < 3; ++i) s = field.add(s, field.mul(a[i], x[i]));
  return s == 0;
}

std::uint32_t ProjectivePlane::index_of(Triple v) const {
  int lead = 0;
  while (lead < 3 && v[lead] == 0) ++lead;
  if (lead == 3) throw Error(ErrorCode::InvalidInput, "zero vector has no projective point");
  const FieldElem s = field.inv(v[lead]);
  for (auto& x : v) x = field.mul(x, s);
  return index_[(v[0] * q + v[1]) * q + v[2]];
}

std::uint32_t ProjectivePlane::line_through(std::uint32_t p1, std::uint32_t p2) const {
  if (p1 == p2) throw Error(ErrorCode::InvalidInput, "line_through needs distinct points");
  return join_[p1 * size() + p2];
}

std::string ProjectivePlane::point_label(std::uint32_t p) const {
  return triple_label('P', field, points[p]);
}
std::string ProjectivePlane::line_label(std::uint32_t l) const {
  return triple_label('L', field, lines[l]);
}

ProjectivePlane pg2(int q) {
  ProjectivePlane plane(q);  // FiniteField throws UnsupportedOrder
  plane.points = normalized_triples(q);
  plane.lines = plane.points;
  const std::size_t P = plane.points.size();
  plane.index_.assign(static_cast<std::size_t>(q) * q * q, 0);
  for (std::uint32_t i = 0; i < P; ++i) {
    const auto& t = plane.points[i];
    plane.index_[(t[0] * q + t[1]) * q + t[2]] = i;
  }
  plane.points_on_line.assign(P, {});
  plane.lines_through_point.assign(P, {});
  for (std::uint32_t l = 0; l < P; ++l)
    for (std::uint32_t p = 0; p < P; ++p)
      if (plane.incident(p, l)) {
        plane.points_on_line[l].push_back(p);
        plane.lines_through_point[p].push_back(l);
      }
  plane.join_.assign(P * P, 0);
  for (std::uint32_t l = 0; l < P; ++l)
    for (auto a : plane.points_on_line[l])
      for (auto b : plane.points_on_line[l]) plane.join_[a * P + b] = l;
  return plane;
}

Graph levi_graph(const ProjectivePlane& plane) {
  const std::size_t P = plane.size();
  std::vector<Edge> edges;
  for (std::uint32_t p = 0; p < P; ++p)
    for (auto l : plane.lines_through_point[p])
      edges.emplace_back(p, static_cast<Vertex>(P + l));
  Graph g(2 * P, edges);
  std::vector<std::uint8_t> sides(2 * P, 0);
  std::fill(sides.begin() + P, sides.end(), 1);
  g.set_sides(std::move(sides));
  std::vector<std::string> labels;
  for (std::uint32_t p = 0; p < P; ++p) labels.push_back(plane.point_label(p));
  for (std::uint32_t l = 0; l < P; ++l) labels.push_back(plane.line_label(l));
  g.set_labels(std::move(labels));
  return g;
}

Graph levi_graph(int q) { return levi_graph(pg2(q)); }

Permutation induced_levi_permutation(const ProjectivePlane& plane,
                                     const std::vector<std::uint32_t>& point_map) {
  const std::size_t P = plane.size();
  std::vector<Point> img(2 * P);
  for (std::uint32_t p = 0; p < P; ++p) img[p] = point_map[p];
  for (std::uint32_t l = 0; l < P; ++l) {
    const auto& pts = plane.points_on_line[l];
    const std::uint32_t image = plane.line_through(point_map[pts[0]], point_map[pts[1]]);
    for (auto p : pts)
      if (!plane.incident(point_map[p], image))
        throw Error(ErrorCode::InvalidInput, "point map does not preserve collinearity");
    img[P + l] = static_cast<Point>(P + image);
  }
  return Permutation(std::move(img));
}

GroupSpec pgl3_action(const ProjectivePlane& plane) {
  const int q = plane.q;
  const BigInt target = pgl3_order(q);
  const std::size_t deg = 2 * plane.size();

  std::vector<Matrix3> transvections;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) {
        Matrix3 t{};
        for (int d = 0; d < 3; ++d) t[d][d] = 1;
        t[i][j] = 1;
        transvections.push_back(t);
      }

  // Companion matrix of x^3 - c2 x^2 - c1 x - c0 whose action on points is a
  // single cycle, together with one transvection.
  for (int c0 = 1; c0 < q; ++c0)
    for (int c1 = 0; c1 < q; ++c1)
      for (int c2 = 0; c2 < q; ++c2) {
        const Matrix3 c{{{0, 0, static_cast<FieldElem>(c0)},
                         {1, 0, static_cast<FieldElem>(c1)},
                         {0, 1, static_cast<FieldElem>(c2)}}};
        const auto cmap = point_map_of(plane, c);
        if (!is_single_cycle(cmap)) continue;
        const Permutation singer = induced_levi_permutation(plane, cmap);
        for (const auto& t : transvections) {
          std::vector<Permutation> gens{singer, induced_levi_permutation(plane, point_map_of(plane, t))};
          if (group_order(deg, gens) == target) {
            GroupSpec spec(deg, std::move(gens));
            spec.order = target;
            return spec;
          }
        }
      }
  throw Error(ErrorCode::InvalidInput, "no generating pair found for PGL(3," + std::to_string(q) + ")");
}

GroupSpec pgl3_action(int q) { return pgl3_action(pg2(q)); }

GroupSpec pgammal3_action(const ProjectivePlane& plane) {
  GroupSpec spec = pgl3_action(plane);
  const auto& f = plane.field;
  if (f.degree() > 1) {
    std::vector<std::uint32_t> frob(plane.size());
    for (std::uint32_t p = 0; p < plane.size(); ++p) {
      Triple t = plane.points[p];
      for (auto& x : t) x = f.frobenius(x);
      frob[p] = plane.index_of(t);
    }
    spec.generators.push_back(induced_levi_permutation(plane, frob));
    spec.order = *spec.order * f.degree();
  }
  return spec;
}

GroupSpec pgammal3_action(int q) { return pgammal3_action(pg2(q)); }

// --- subset families --------------------------------------------------------

Graph levi_order1(unsigned k, unsigned n) {
  if (k < 2 || 2 * k >= n || n > 32)
    throw Error(ErrorCode::InvalidParameters, "levi_order1 needs 2 <= k and 2k < n");
  if (binomial(n, k) + binomial(n, k - 1) > 100'000)
    throw Error(ErrorCode::InvalidParameters, "levi_order1 too large");
  const auto left = ksubsets_colex(n, k - 1);
  const auto right = ksubsets_colex(n, k);
  const auto L = static_cast<Vertex>(left.size());
  std::vector<Edge> edges;
  for (Vertex j = 0; j < right.size(); ++j)
    for (unsigned b = 0; b < n; ++b)
      if (right[j] & (1u << b))
        edges.emplace_back(static_cast<Vertex>(colex_rank(right[j] & ~(1u << b))), L + j);
  Graph g(left.size() + right.size(), edges);
  std::vector<std::uint8_t> sides(g.order(), 0);
  std::fill(sides.begin() + L, sides.end(), 1);
  g.set_sides(std::move(sides));
  std::vector<std::string> labels;
  for (auto m : left) labels.push_back(subset_label(m));
  for (auto m : right) labels.push_back(subset_label(m));
  g.set_labels(std::move(labels));
  return g;
}

GroupSpec levi_order1_action(unsigned k, unsigned n) {
  if (k < 2 || 2 * k >= n || n > 32)
    throw Error(ErrorCode::InvalidParameters, "levi_order1 needs 2 <= k and 2k < n");
  const GroupSpec a = induced_action_on_ksets(n, k - 1);
  const GroupSpec b = induced_action_on_ksets(n, k);
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    std::vector<Point> img;
    for (auto x : a.generators[i].images()) img.push_back(x);
    for (auto x : b.generators[i].images()) img.push_back(static_cast<Point>(a.degree + x));
    gens.emplace_back(std::move(img));
  }
  GroupSpec spec(a.degree + b.degree, std::move(gens));
  spec.order = factorial(n);
  return spec;
}

Graph kneser_complement(unsigned n, unsigned r) {
  if (r < 3 || n < 2 * r || n > 32) throw Error(ErrorCode::InvalidParameters, "kneser_complement needs r >= 3, n >= 2r");
  if (binomial(n, r) > 10'000) throw Error(ErrorCode::InvalidParameters, "kneser_complement too large");
  const auto sets = ksubsets_colex(n, r);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < sets.size(); ++a)
    for (Vertex b = a + 1; b < sets.size(); ++b)
      if (sets[a] & sets[b]) edges.emplace_back(a, b);
  Graph g(sets.size(), edges);
  std::vector<std::string> labels;
  for (auto m : sets) labels.push_back(subset_label(m));
  g.set_labels(std::move(labels));
  return g;
}

// --- small graphs and products ----------------------------------------------

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.emplace_back(u, static_cast<Vertex>(a + v));
  Graph g(a + b, edges);
  std::vector<std::uint8_t> sides(a + b, 0);
  std::fill(sides.begin() + a, sides.end(), 1);
  g.set_sides(std::move(sides));
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidParameters, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph weak_product(const Graph& g, const Graph& h) {
  const std::size_t n = g.order() * h.order();
  if (n > 2000) throw Error(ErrorCode::TooLarge, "weak product exceeds 2000 vertices");
  const std::size_t nh = h.order();
  std::vector<Edge> edges;
  for (auto [g1, g2] : g.edges())
    for (auto [h1, h2] : h.edges()) {
      edges.emplace_back(static_cast<Vertex>(g1 * nh + h1), static_cast<Vertex>(g2 * nh + h2));
      edges.emplace_back(static_cast<Vertex>(g1 * nh + h2), static_cast<Vertex>(g2 * nh + h1));
    }
  Graph out(n, edges);
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < nh; ++b) {
      const std::string la = g.labels() ? (*g.labels())[a] : std::to_string(a);
      const std::string lb = h.labels() ? (*h.labels())[b] : std::to_string(b);
      labels.push_back(la + "," + lb);
    }
  out.set_labels(std::move(labels));
  return out;
}

Graph weak_power(const Graph& g, unsigned n) {
  if (n == 0) throw Error(ErrorCode::InvalidParameters, "weak_power needs n >= 1");
  Graph out = g;
  for (unsigned i = 1; i < n; ++i) out = weak_product(out, g);
  if (out.labels()) {
    auto labels = *out.labels();
    for (auto& l : labels) l = "(" + l + ")";
    out.set_labels(std::move(labels));
  }
  return out;
}

// --- slope graphs -----------------------------------------------------------

namespace {

void check_slope_q(int q) {
  if (q < 3 || q > 13 || !is_prime(static_cast<std::uint64_t>(q)))
    throw Error(ErrorCode::InvalidParameters, "slope graphs need an odd prime q <= 13");
}

int mod(long long a, int q) { return static_cast<int>(((a % q) + q) % q); }

int inv_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (mod(static_cast<long long>(a) * x, q) == 1) return x;
  throw Error(ErrorCode::InvalidInput, "no inverse");
}

}  // namespace

std::string slope_to_string(Slope s) { return s == kInfiniteSlope ? "inf" : std::to_string(s); }

Slope slope(int q, Vertex u, Vertex v) {
  const int u1 = static_cast<int>(u) / q, u2 = static_cast<int>(u) % q;
  const int v1 = static_cast<int>(v) / q, v2 = static_cast<int>(v) % q;
  if (u1 == v1) return kInfiniteSlope;
  return mod(static_cast<long long>(v2 - u2) * inv_mod(mod(v1 - u1, q), q), q);
}

std::pair<Graph, SlopeGraphMeta> slope_graph(int q, std::vector<int> S) {
  check_slope_q(q);
  std::sort(S.begin(), S.end());
  if (S.size() != static_cast<std::size_t>((q - 1) / 2) ||
      std::adjacent_find(S.begin(), S.end()) != S.end() || S.front() < 0 || S.back() >= q)
    throw Error(ErrorCode::InvalidParameters, "slope set must be (q-1)/2 distinct elements of F_q");
  std::vector<char> in_s(q, 0);
  for (int s : S) in_s[s] = 1;
  const Vertex n = static_cast<Vertex>(q * q);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      const Slope s = slope(q, u, v);
      if (s != kInfiniteSlope && in_s[s]) edges.emplace_back(u, v);
    }
  Graph g(n, edges);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < n; ++v)
    labels.push_back("(" + std::to_string(v / q) + "," + std::to_string(v % q) + ")");
  g.set_labels(std::move(labels));
  return {std::move(g), SlopeGraphMeta{q, std::move(S)}};
}

std::vector<std::vector<Vertex>> affine_line_partition(int q, Slope alpha) {
  if (alpha != kInfiniteSlope && (alpha < 0 || alpha >= q))
    throw Error(ErrorCode::InvalidParameters, "slope out of range");
  std::vector<std::vector<Vertex>> lines(q);
  for (int c = 0; c < q; ++c)
    for (int x = 0; x < q; ++x) {
      if (alpha == kInfiniteSlope)
        lines[c].push_back(static_cast<Vertex>(c * q + x));
      else
        lines[c].push_back(static_cast<Vertex>(x * q + mod(static_cast<long long>(alpha) * x + c, q)));
    }
  for (auto& l : lines) std::sort(l.begin(), l.end());
  return lines;
}

GroupSpec scalar_translation_action(int q) {
  check_slope_q(q);
  int lambda = 2;
  for (; lambda < q; ++lambda) {
    int order = 1;
    for (long long x = lambda; x != 1; x = x * lambda % q) ++order;
    if (order == q - 1) break;
  }
  const std::size_t n = static_cast<std::size_t>(q) * q;
  auto make = [&](auto fn) {
    std::vector<Point> img(n);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        auto [a, b] = fn(x, y);
        img[x * q + y] = static_cast<Point>(a * q + b);
      }
    return Permutation(std::move(img));
  };
  std::vector<Permutation> gens{
      make([&](int x, int y) { return std::pair{mod(lambda * x, q), mod(lambda * y, q)}; }),
      make([&](int x, int y) { return std::pair{mod(x + 1, q), y}; }),
      make([&](int x, int y) { return std::pair{x, mod(y + 1, q)}; })};
  GroupSpec spec(n, std::move(gens));
  spec.order = BigInt(q) * q * (q - 1);
  return spec;
}

Permutation slope_translation(int q, Slope alpha) {
  const std::size_t n = static_cast<std::size_t>(q) * q;
  std::vector<Point> img(n);
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      const int nx = alpha == kInfiniteSlope ? x : mod(x + 1, q);
      const int ny = alpha == kInfiniteSlope ? mod(y + 1, q) : mod(y + alpha, q);
      img[x * q + y] = static_cast<Point>(nx * q + ny);
    }
  return Permutation(std::move(img));
}

// --- tensor with K_{r,s} ----------------------------------------------------

std::vector<Vertex> FiberMeta::point_fiber(std::uint32_t p) const {
  std::vector<Vertex> out;
  for (unsigned i = 0; i < r; ++i) out.push_back(point_copy(p, i));
  return out;
}

std::vector<Vertex> FiberMeta::line_fiber(std::uint32_t l) const {
  std::vector<Vertex> out;
  for (unsigned j = 0; j < s; ++j) out.push_back(line_copy(l, j));
  return out;
}

std::pair<Graph, FiberMeta> levi_tensor_krs(int q, unsigned r, unsigned s) {
  if (q < 5) throw Error(ErrorCode::InvalidParameters, "levi_tensor_krs needs q >= 5");
  if (r < 2 || s < 2) throw Error(ErrorCode::InvalidParameters, "levi_tensor_krs needs r, s >= 2");
  const auto plane = pg2(q);
  const std::size_t P = plane.size();
  if (P * (r + s) > 2000) throw Error(ErrorCode::InvalidParameters, "levi_tensor_krs exceeds 2000 vertices");
  FiberMeta meta{q, r, s, P};
  std::vector<Edge> edges;
  for (std::uint32_t p = 0; p < P; ++p)
    for (auto l : plane.lines_through_point[p])
      for (unsigned i = 0; i < r; ++i)
        for (unsigned j = 0; j < s; ++j) edges.emplace_back(meta.point_copy(p, i), meta.line_copy(l, j));
  Graph g(P * (r + s), edges);
  std::vector<std::uint8_t> sides(g.order(), 0);
  std::fill(sides.begin() + P * r, sides.end(), 1);
  g.set_sides(std::move(sides));
  std::vector<std::string> labels;
  for (std::uint32_t p = 0; p < P; ++p)
    for (unsigned i = 0; i < r; ++i) labels.push_back(plane.point_label(p) + "#" + std::to_string(i));
  for (std::uint32_t l = 0; l < P; ++l)
    for (unsigned j = 0; j < s; ++j) labels.push_back(plane.line_label(l) + "#" + std::to_string(j));
  g.set_labels(std::move(labels));
  return {std::move(g), meta};
}

Permutation fiber_swap(const FiberMeta& meta, bool is_line, std::uint32_t index, unsigned i, unsigned j) {
  const unsigned copies = is_line ? meta.s : meta.r;
  if (i == j || i >= copies || j >= copies || index >= meta.plane_size)
    throw Error(ErrorCode::InvalidParameters, "fiber_swap needs two distinct valid copies");
  const Vertex a = is_line ? meta.line_copy(index, i) : meta.point_copy(index, i);
  const Vertex b = is_line ? meta.line_copy(index, j) : meta.point_copy(index, j);
  return Permutation::from_cycles(meta.plane_size * (meta.r + meta.s), {{a, b}});
}

}  // namespace dchroma
