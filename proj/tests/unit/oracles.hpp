#pragma once
// Slow reference implementations used only as test oracles.

#include <functional>
#include <set>
#include <vector>

#include "dchroma/graph.hpp"

namespace oracle {

using Perm = std::vector<dchroma::Point>;

// Every automorphism of g (optionally color-preserving) by plain backtracking.
inline std::vector<Perm> all_automorphisms(const dchroma::Graph& g, const std::vector<std::uint32_t>& colors = {}) {
  const std::size_t n = g.order();
  std::vector<Perm> out;
  Perm img(n);
  std::vector<char> used(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      out.push_back(img);
      return;
    }
    for (dchroma::Vertex w = 0; w < n; ++w) {
      if (used[w] || g.degree(w) != g.degree(static_cast<dchroma::Vertex>(v))) continue;
      if (!colors.empty() && colors[w] != colors[v]) continue;
      bool ok = true;
      for (dchroma::Vertex u = 0; u < v && ok; ++u)
        ok = g.adjacent(static_cast<dchroma::Vertex>(v), u) == g.adjacent(w, img[u]);
      if (!ok) continue;
      used[w] = 1;
      img[v] = w;
      rec(v + 1);
      used[w] = 0;
    }
  };
  rec(0);
  return out;
}

inline Perm compose(const Perm& a, const Perm& b) {  // x -> b(a(x))
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

// Group generated by gens, by saturation over an ordered set.
inline std::set<Perm> generated(const std::vector<Perm>& gens, std::size_t degree) {
  Perm id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<dchroma::Point>(i);
  std::set<Perm> seen{id};
  std::vector<Perm> frontier{id};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::size_t brute_partitions(unsigned n, unsigned max_part) {
  if (n == 0) return 1;
  std::size_t total = 0;
  for (unsigned p = 1; p <= std::min(n, max_part); ++p) total += brute_partitions(n - p, p);
  return total;
}

}  // namespace oracle
