#include "dchroma/permgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "dchroma/error.hpp"

namespace dchroma {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw Error(ErrorCode::InvalidInput, "image array is not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i] >= degree) throw Error(ErrorCode::InvalidInput, "cycle point out of range");
      img[c[i]] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Point>(i);
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

std::size_t Permutation::moved_count() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) c += images_[i] != i;
  return c;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<char> seen(images_.size(), 0);
  for (Point s = 0; s < images_.size(); ++s) {
    if (seen[s] || images_[s] == s) continue;
    std::vector<Point> cyc;
    for (Point x = s; !seen[x]; x = images_[x]) {
      seen[x] = 1;
      cyc.push_back(x);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw Error(ErrorCode::InvalidInput, "degree mismatch in product");
  std::vector<Point> img(a.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = b.images_[a.images_[i]];
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Point x : p.images()) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::string to_string(const Permutation& p) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < p.degree(); ++i) out << (i ? "," : "") << p(static_cast<Point>(i));
  out << ']';
  return out.str();
}

// --- PermutationTable -------------------------------------------------------

PermutationTable::PermutationTable(std::size_t degree) : degree_(degree) {
  if (degree > 65536) throw Error(ErrorCode::TooLarge, "permutation table degree exceeds 65536");
}

Permutation PermutationTable::at(std::size_t i) const {
  const Row r = row(i);
  return Permutation(std::vector<Point>(r.begin(), r.end()));
}

void PermutationTable::push_back(const Permutation& p) {
  if (p.degree() != degree_) throw Error(ErrorCode::InvalidInput, "degree mismatch in table");
  for (Point x : p.images()) data_.push_back(static_cast<std::uint16_t>(x));
}

void PermutationTable::push_back(Row row) {
  if (row.size() != degree_) throw Error(ErrorCode::InvalidInput, "degree mismatch in table");
  data_.insert(data_.end(), row.begin(), row.end());
}

namespace {

struct RowHash {
  const PermutationTable* table;
  std::size_t operator()(std::size_t i) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : table->row(i)) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

struct RowEq {
  const PermutationTable* table;
  bool operator()(std::size_t a, std::size_t b) const noexcept {
    const auto ra = table->row(a), rb = table->row(b);
    return std::equal(ra.begin(), ra.end(), rb.begin());
  }
};

}  // namespace

PermutationTable closure(const std::vector<Permutation>& gens, std::size_t cap) {
  if (gens.empty()) throw Error(ErrorCode::InvalidInput, "closure needs at least one generator");
  const std::size_t deg = gens.front().degree();
  for (const auto& g : gens)
    if (g.degree() != deg) throw Error(ErrorCode::InvalidInput, "generators differ in degree");

  PermutationTable table(deg);
  table.push_back(Permutation::identity(deg));
  std::unordered_set<std::size_t, RowHash, RowEq> seen(1024, RowHash{&table}, RowEq{&table});
  seen.insert(0);

  std::vector<std::uint16_t> buf(deg);
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    for (const auto& g : gens) {
      const auto r = table.row(idx);
      for (std::size_t i = 0; i < deg; ++i) buf[i] = static_cast<std::uint16_t>(g(r[i]));
      table.push_back(PermutationTable::Row(buf));
      if (!seen.insert(table.size() - 1).second) {
        table.pop_back();
      } else if (table.size() > cap) {
        throw Error(ErrorCode::CapExceeded,
                    "group has more than " + std::to_string(cap) + " elements");
      }
    }
  }
  return table;
}

// --- StabilizerChain --------------------------------------------------------

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens)
    : degree_(degree) {
  for (const auto& g : gens) {
    if (g.degree() != degree) throw Error(ErrorCode::InvalidInput, "generator degree mismatch");
    extend(0, g);
  }
}

Permutation StabilizerChain::strip(std::size_t level, Permutation g) const {
  for (std::size_t i = level; i < levels_.size(); ++i) {
    const Level& L = levels_[i];
    const Point img = g(L.base);
    const std::int32_t slot = L.orbit_index[img];
    if (slot < 0) return g;
    g = g * L.transversal[slot].inverse();
  }
  return g;
}

void StabilizerChain::extend(std::size_t level, Permutation g) {
  g = strip(level, std::move(g));
  if (g.is_identity()) return;
  // The residue may stop at a deeper level; adding it at `level` is still
  // sound because it fixes all earlier base points.
  if (level == levels_.size()) {
    Level L;
    Point b = 0;
    while (g(b) == b) ++b;
    L.base = b;
    L.orbit_index.assign(degree_, -1);
    L.orbit = {b};
    L.orbit_index[b] = 0;
    L.transversal = {Permutation::identity(degree_)};
    levels_.push_back(std::move(L));
  }
  levels_[level].gens.push_back(g);

  // Schreier generators: existing orbit points with the new generator, and
  // newly discovered orbit points with every generator.
  std::vector<std::pair<std::size_t, std::size_t>> work;  // (orbit slot, gen index)
  {
    const Level& L = levels_[level];
    const std::size_t gi = L.gens.size() - 1;
    for (std::size_t s = 0; s < L.orbit.size(); ++s) work.emplace_back(s, gi);
  }
  while (!work.empty()) {
    auto [slot, gi] = work.back();
    work.pop_back();
    Level& L = levels_[level];
    const Point beta = L.orbit[slot];
    const Permutation& s = L.gens[gi];
    const Point gamma = s(beta);
    if (L.orbit_index[gamma] < 0) {
      L.orbit_index[gamma] = static_cast<std::int32_t>(L.orbit.size());
      L.orbit.push_back(gamma);
      L.transversal.push_back(L.transversal[slot] * s);
      const std::size_t ns = L.orbit.size() - 1;
      for (std::size_t j = 0; j < L.gens.size(); ++j) work.emplace_back(ns, j);
    } else {
      Permutation h = L.transversal[slot] * s * L.transversal[L.orbit_index[gamma]].inverse();
      if (!h.is_identity()) extend(level + 1, std::move(h));
    }
  }
}

BigInt StabilizerChain::order() const {
  BigInt r = 1;
  for (const auto& L : levels_) r *= L.orbit.size();
  return r;
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  return strip(0, g).is_identity();
}

std::vector<Point> StabilizerChain::base() const {
  std::vector<Point> b;
  for (const auto& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& L : levels_) s.push_back(L.orbit.size());
  return s;
}

BigInt group_order(std::size_t degree, const std::vector<Permutation>& gens) {
  return StabilizerChain(degree, gens).order();
}

// --- GroupSpec --------------------------------------------------------------

GroupSpec::GroupSpec(std::size_t deg, std::vector<Permutation> gens)
    : degree(deg), generators(std::move(gens)) {
  for (const auto& g : generators)
    if (g.degree() != degree) throw Error(ErrorCode::InvalidInput, "generator degree mismatch");
}

std::vector<Permutation> GroupSpec::nonempty_generators() const {
  if (!generators.empty()) return generators;
  return {Permutation::identity(degree)};
}

const PermutationTable& GroupSpec::ensure_elements(std::size_t cap) {
  if (!elements) {
    elements.emplace(closure(nonempty_generators(), cap));
    order = BigInt(elements->size());
  }
  return *elements;
}

// --- orbit counts -----------------------------------------------------------

OrbitCount orbit_count_on(const Permutation& perm, std::span<const Point> subset) {
  std::vector<char> member(perm.degree(), 0);
  for (Point x : subset) member.at(x) = 1;
  OrbitCount out;
  std::vector<char> seen(perm.degree(), 0);
  for (Point x : subset) {
    if (!member[perm(x)])
      throw Error(ErrorCode::NotSetwiseStable, "permutation moves a subset point outside the subset");
    if (perm(x) == x) ++out.fixed;
    if (seen[x]) continue;
    ++out.theta;
    for (Point y = x; !seen[y]; y = perm(y)) seen[y] = 1;
  }
  return out;
}

OrbitCount orbit_count_on(PermutationTable::Row row, std::span<const Point> subset,
                          const std::vector<char>& member) {
  OrbitCount out;
  std::vector<char> seen(row.size(), 0);
  for (Point x : subset) {
    const Point img = row[x];
    if (!member[img])
      throw Error(ErrorCode::NotSetwiseStable, "permutation moves a subset point outside the subset");
    if (img == x) ++out.fixed;
    if (seen[x]) continue;
    ++out.theta;
    for (Point y = x; !seen[y]; y = row[y]) seen[y] = 1;
  }
  return out;
}

// --- named actions ----------------------------------------------------------

GroupSpec induced_action_on_ksets(unsigned n, unsigned k) {
  if (k < 1 || k >= n || n > 32)
    throw Error(ErrorCode::InvalidParameters, "induced_action_on_ksets needs 1 <= k < n <= 32");
  if (binomial(n, k) > 1'000'000) throw Error(ErrorCode::TooLarge, "too many k-subsets");
  const auto subsets = ksubsets_colex(n, k);

  auto induced = [&](const std::vector<unsigned>& sigma) {
    std::vector<Point> img(subsets.size());
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      std::uint32_t m = 0;
      for (unsigned b = 0; b < n; ++b)
        if (subsets[i] & (1u << b)) m |= 1u << sigma[b];
      img[i] = static_cast<Point>(colex_rank(m));
    }
    return Permutation(std::move(img));
  };

  std::vector<unsigned> swap01(n), cyc(n);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  for (unsigned i = 0; i < n; ++i) cyc[i] = (i + 1) % n;

  std::vector<Permutation> gens{induced(swap01)};
  if (n > 2) gens.push_back(induced(cyc));
  GroupSpec g(subsets.size(), std::move(gens));
  g.order = factorial(n);
  return g;
}

GroupSpec wreath_action(const GroupSpec& base, unsigned n) {
  const std::size_t m = base.degree;
  if (m < 2 || n < 2) throw Error(ErrorCode::InvalidParameters, "wreath_action needs m >= 2, n >= 2");
  std::size_t deg = 1;
  for (unsigned i = 0; i < n; ++i) {
    deg *= m;
    if (deg > 1'000'000) throw Error(ErrorCode::TooLarge, "m^n exceeds 10^6");
  }

  auto decode = [&](std::size_t idx) {
    std::vector<std::size_t> t(n);
    for (unsigned i = n; i-- > 0;) {
      t[i] = idx % m;
      idx /= m;
    }
    return t;
  };
  auto encode = [&](const std::vector<std::size_t>& t) {
    std::size_t idx = 0;
    for (unsigned i = 0; i < n; ++i) idx = idx * m + t[i];
    return idx;
  };

  std::vector<Permutation> gens;
  for (const auto& bg : base.generators) {
    if (bg.is_identity()) continue;
    std::vector<Point> img(deg);
    for (std::size_t v = 0; v < deg; ++v) {
      auto t = decode(v);
      t[0] = bg(static_cast<Point>(t[0]));
      img[v] = static_cast<Point>(encode(t));
    }
    gens.emplace_back(std::move(img));
  }
  {
    std::vector<Point> img(deg);
    for (std::size_t v = 0; v < deg; ++v) {
      auto t = decode(v);
      std::swap(t[0], t[1]);
      img[v] = static_cast<Point>(encode(t));
    }
    gens.emplace_back(std::move(img));
  }
  if (n > 2) {
    std::vector<Point> img(deg);
    for (std::size_t v = 0; v < deg; ++v) {
      auto t = decode(v);
      std::rotate(t.begin(), t.begin() + 1, t.end());
      img[v] = static_cast<Point>(encode(t));
    }
    gens.emplace_back(std::move(img));
  }
  return GroupSpec(deg, std::move(gens));
}

GroupSpec symmetric_group(std::size_t m) {
  if (m < 2) return GroupSpec(m, {});
  std::vector<Permutation> gens{Permutation::from_cycles(m, {{0, 1}})};
  if (m > 2) {
    std::vector<Point> cyc(m);
    std::iota(cyc.begin(), cyc.end(), Point{0});
    gens.push_back(Permutation::from_cycles(m, {cyc}));
  }
  GroupSpec g(m, std::move(gens));
  g.order = factorial(static_cast<unsigned>(m));
  return g;
}

}  // namespace dchroma
