#include "dchroma/automorphism.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

#include "dchroma/error.hpp"

namespace dchroma {

namespace {

inline std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdull;
}

// Ordered partition with contiguous cells. A cell is identified by the
// position of its first element; end[start] is one past its last position.
struct Partition {
  std::vector<Vertex> lab;
  std::vector<std::uint32_t> pos;
  std::vector<std::uint32_t> cell;  // vertex -> start of its cell
  std::vector<std::uint32_t> end;   // start -> one past end
  std::uint32_t ncells = 0;

  bool discrete() const { return ncells == lab.size(); }
};

struct UnionFind {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;
  std::vector<char> failed;

  explicit UnionFind(std::size_t n) : parent(n), size(n, 1), failed(n, 0) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    failed[a] = failed[a] || failed[b];
  }
  void absorb(const Permutation& p) {
    for (std::uint32_t x = 0; x < parent.size(); ++x) unite(x, p(x));
  }
};

class Search {
 public:
  Search(const Graph& g, std::span<const std::uint32_t> cells, const SearchOptions& opts)
      : g_(g), n_(static_cast<std::uint32_t>(g.order())), opts_(opts), count_(n_, 0) {
    start_ = std::chrono::steady_clock::now();
    if (!cells.empty() && cells.size() != n_)
      throw Error(ErrorCode::InvalidInput, "cell vector length differs from vertex count");
    root_ = initial_partition(cells);
  }

  AutResult run() {
    AutResult res;
    if (n_ == 0) return res;

    // First path down to a discrete leaf.
    std::vector<Partition> path;
    std::vector<Vertex> base;
    Partition p = root_;
    std::uint64_t h = refine(p, all_cells(p));
    path.push_back(p);
    hashes_.push_back(h);
    while (!path.back().discrete()) {
      const std::uint32_t t = target_cell(path.back());
      const Vertex v = min_vertex(path.back(), t);
      Partition child = path.back();
      h = individualize_and_refine(child, v);
      base.push_back(v);
      path.push_back(std::move(child));
      hashes_.push_back(h);
    }
    first_leaf_ = path.back().lab;

    auto& gens = gens_;
    std::vector<std::size_t> orbit_sizes(base.size(), 1);

    for (std::size_t i = base.size(); i-- > 0;) {
      UnionFind uf(n_);
      for (const auto& gen : gens) uf.absorb(gen.perm);
      const Partition& node = path[i];
      const std::uint32_t t = target_cell(node);
      std::vector<Vertex> candidates(node.lab.begin() + t, node.lab.begin() + node.end[t]);
      std::sort(candidates.begin(), candidates.end());
      for (Vertex w : candidates) {
        if (w == base[i]) continue;
        const auto rw = uf.find(w);
        if (rw == uf.find(base[i]) || uf.failed[rw]) continue;
        Partition child = node;
        const std::uint64_t ch = individualize_and_refine(child, w);
        std::vector<Vertex> seq(base.begin(), base.begin() + i);
        seq.push_back(w);
        auto found = ch == hashes_[i + 1] ? descend(child, i + 1, seq) : std::nullopt;
        if (found) {
          uf.absorb(*found);
          gens.push_back({std::move(*found), i});
          if (opts_.stop_at_first) {
            res.complete = false;
            break;
          }
        } else {
          uf.failed[uf.find(w)] = 1;
        }
      }
      orbit_sizes[i] = uf.size[uf.find(base[i])];
      if (!res.complete) break;
    }

    for (auto& gen : gens) res.generators.push_back(std::move(gen.perm));
    res.order = 1;
    for (auto s : orbit_sizes) res.order *= s;
    for (const auto& gen : res.generators)
      if (!g_.is_automorphism(gen))
        throw Error(ErrorCode::InvalidInput, "internal: search produced a non-automorphism");
    return res;
  }

 private:
  Partition initial_partition(std::span<const std::uint32_t> cells) {
    Partition p;
    p.lab.resize(n_);
    p.pos.resize(n_);
    p.cell.resize(n_);
    p.end.assign(n_, 0);
    std::iota(p.lab.begin(), p.lab.end(), Vertex{0});
    if (!cells.empty())
      std::stable_sort(p.lab.begin(), p.lab.end(),
                       [&](Vertex a, Vertex b) { return cells[a] < cells[b]; });
    std::uint32_t s = 0;
    for (std::uint32_t i = 0; i < n_; ++i) {
      p.pos[p.lab[i]] = i;
      if (i > 0 && !cells.empty() && cells[p.lab[i]] != cells[p.lab[i - 1]]) {
        p.end[s] = i;
        s = i;
        ++p.ncells;
      }
      p.cell[p.lab[i]] = s;
    }
    p.end[s] = n_;
    ++p.ncells;
    return p;
  }

  static std::vector<std::uint32_t> all_cells(const Partition& p) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t c = 0; c < p.lab.size(); c = p.end[c]) out.push_back(c);
    return out;
  }

  static std::uint32_t target_cell(const Partition& p) {
    std::uint32_t best = 0, best_size = 0;
    for (std::uint32_t c = 0; c < p.lab.size(); c = p.end[c]) {
      const std::uint32_t sz = p.end[c] - c;
      if (sz > 1 && (best_size == 0 || sz < best_size)) {
        best = c;
        best_size = sz;
      }
    }
    return best;
  }

  static Vertex min_vertex(const Partition& p, std::uint32_t c) {
    return *std::min_element(p.lab.begin() + c, p.lab.begin() + p.end[c]);
  }

  void tick() {
    if (++steps_ > opts_.node_budget)
      throw Error(ErrorCode::Timeout, "automorphism search exceeded node budget");
    if (opts_.time_budget_secs > 0 && (steps_ & 1023) == 0) {
      const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > opts_.time_budget_secs)
        throw Error(ErrorCode::Timeout, "automorphism search exceeded time budget");
    }
  }

  std::uint64_t individualize_and_refine(Partition& p, Vertex v) {
    const std::uint32_t c = p.cell[v];
    const std::uint32_t e = p.end[c];
    // Move v to the front of its cell and split it off.
    const std::uint32_t pv = p.pos[v];
    const Vertex front = p.lab[c];
    std::swap(p.lab[c], p.lab[pv]);
    p.pos[front] = pv;
    p.pos[v] = c;
    p.end[c] = c + 1;
    p.end[c + 1] = e;
    for (std::uint32_t i = c + 1; i < e; ++i) p.cell[p.lab[i]] = c + 1;
    ++p.ncells;
    return mix(refine(p, {c}), c);
  }

  // Equitable refinement. Returns a hash of the refinement trace that is
  // invariant under relabeling of the graph.
  std::uint64_t refine(Partition& p, std::vector<std::uint32_t> queue) {
    std::vector<char> queued(n_, 0);
    for (auto c : queue) queued[c] = 1;
    std::uint64_t h = 0x12345;
    std::size_t head = 0;
    std::vector<std::uint32_t> touched;
    std::vector<Vertex> splitter;

    while (head < queue.size() && !p.discrete()) {
      tick();
      const std::uint32_t s = queue[head++];
      queued[s] = 0;
      splitter.assign(p.lab.begin() + s, p.lab.begin() + p.end[s]);
      touched.clear();
      for (Vertex w : splitter)
        for (Vertex u : g_.neighbors(w)) {
          if (count_[u]++ == 0) {
            const std::uint32_t cu = p.cell[u];
            if (p.end[cu] - cu > 1 && std::find(touched.begin(), touched.end(), cu) == touched.end())
              touched.push_back(cu);
          }
        }
      std::sort(touched.begin(), touched.end());
      h = mix(h, s);
      for (std::uint32_t c : touched) {
        const std::uint32_t e = p.end[c];
        auto first = p.lab.begin() + c, last = p.lab.begin() + e;
        std::sort(first, last, [&](Vertex a, Vertex b) { return count_[a] < count_[b]; });
        if (count_[p.lab[c]] == count_[p.lab[e - 1]]) {
          h = mix(h, mix(c, count_[p.lab[c]]));
          for (std::uint32_t i = c; i < e; ++i) p.pos[p.lab[i]] = i;
          continue;
        }
        const bool was_queued = queued[c];
        std::uint32_t fs = c;
        for (std::uint32_t i = c; i < e; ++i) {
          const Vertex v = p.lab[i];
          p.pos[v] = i;
          if (i > c && count_[v] != count_[p.lab[i - 1]]) {
            p.end[fs] = i;
            h = mix(h, mix(mix(fs, i - fs), count_[p.lab[i - 1]]));
            if (!(fs == c && was_queued)) {
              queue.push_back(fs);
              queued[fs] = 1;
            }
            fs = i;
            ++p.ncells;
          }
          p.cell[v] = fs;
        }
        p.end[fs] = e;
        h = mix(h, mix(mix(fs, e - fs), count_[p.lab[e - 1]]));
        queue.push_back(fs);
        queued[fs] = 1;
      }
      for (Vertex w : splitter)
        for (Vertex u : g_.neighbors(w)) count_[u] = 0;
    }
    // Remaining queue entries are irrelevant once discrete; the final cell
    // structure goes into the hash either way.
    for (std::uint32_t c = 0; c < n_; c = p.end[c]) h = mix(h, p.end[c] - c);
    return h;
  }

  // Looks for a leaf equivalent to the first leaf below p. Children in one
  // orbit of the known automorphisms fixing `seq` pointwise are
  // interchangeable, so only the first of each orbit is explored.
  std::optional<Permutation> descend(Partition& p, std::size_t depth, std::vector<Vertex>& seq) {
    if (p.discrete()) {
      std::vector<Point> img(n_);
      for (std::uint32_t i = 0; i < n_; ++i) img[first_leaf_[i]] = p.lab[i];
      Permutation perm(std::move(img));
      if (g_.is_automorphism(perm)) return perm;
      return std::nullopt;
    }
    if (depth + 1 >= hashes_.size()) return std::nullopt;
    const std::uint32_t t = target_cell(p);
    std::vector<Vertex> candidates(p.lab.begin() + t, p.lab.begin() + p.end[t]);
    std::sort(candidates.begin(), candidates.end());

    std::optional<UnionFind> uf;
    std::size_t absorbed = 0;
    auto refresh = [&] {
      for (; absorbed < gens_.size(); ++absorbed) {
        const auto& perm = gens_[absorbed].perm;
        if (!std::all_of(seq.begin(), seq.end(), [&](Vertex x) { return perm(x) == x; })) continue;
        if (!uf) uf.emplace(n_);
        uf->absorb(perm);
      }
    };
    for (Vertex u : candidates) {
      refresh();
      if (uf && uf->failed[uf->find(u)]) continue;
      Partition child = p;
      if (individualize_and_refine(child, u) == hashes_[depth + 1]) {
        seq.push_back(u);
        auto r = descend(child, depth + 1, seq);
        seq.pop_back();
        if (r) return r;
      }
      if (!uf) uf.emplace(n_);
      uf->failed[uf->find(u)] = 1;
    }
    return std::nullopt;
  }

  struct Gen {
    Permutation perm;
    std::size_t level;
  };

  const Graph& g_;
  std::uint32_t n_;
  SearchOptions opts_;
  std::vector<std::uint32_t> count_;
  Partition root_;
  std::vector<std::uint64_t> hashes_;
  std::vector<Vertex> first_leaf_;
  std::vector<Gen> gens_;
  std::uint64_t steps_ = 0;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

AutResult automorphism_group(const Graph& g, std::span<const std::uint32_t> cells,
                             const SearchOptions& opts) {
  if (g.order() > 2000) throw Error(ErrorCode::TooLarge, "automorphism search limited to 2000 vertices");
  return Search(g, cells, opts).run();
}

}  // namespace dchroma
