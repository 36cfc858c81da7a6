#include "dchroma/motion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "dchroma/error.hpp"
#include "dchroma/rng.hpp"

namespace dchroma {

namespace {

bool row_is_identity(PermutationTable::Row r) {
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i] != i) return false;
  return true;
}

unsigned small(const BigInt& x) {
  if (x < 0 || x > 1'000'000) throw Error(ErrorCode::TooLarge, "exponent out of range");
  return static_cast<unsigned>(x);
}

// Runs body(begin, end, worker) over [0, n) split into contiguous chunks.
template <class F>
void parallel_chunks(std::size_t n, unsigned threads, F body) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    body(0, n, 0u);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t b = n * w / threads, e = n * (w + 1) / threads;
    pool.emplace_back([&, b, e, w] {
      try {
        body(b, e, w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

int mod(long long a, int q) { return static_cast<int>(((a % q) + q) % q); }

int inv_mod(int a, int q) {
  for (int x = 1; x < q; ++x)
    if (mod(static_cast<long long>(a) * x, q) == 1) return x;
  throw Error(ErrorCode::SingularMatrix, "no inverse");
}

}  // namespace

std::size_t motion(const PermutationTable& elements) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto r = elements.row(i);
    std::size_t moved = 0;
    for (std::size_t x = 0; x < r.size(); ++x) moved += r[x] != x;
    if (moved > 0 && (!best || moved < *best)) best = moved;
  }
  if (!best) throw Error(ErrorCode::EmptyGroup, "motion is undefined for the trivial group");
  return *best;
}

// --- exact E(N) -------------------------------------------------------------

MotionReport exact_expected_fixers(const PermutationTable& elements, const std::vector<Vertex>& c1,
                                   unsigned t, unsigned threads) {
  if (t < 2) throw Error(ErrorCode::InvalidParameters, "t must be at least 2");
  if (elements.size() == 0) throw Error(ErrorCode::EmptyGroup, "no elements");
  std::vector<char> member(elements.degree(), 0);
  for (Vertex v : c1) {
    if (v >= elements.degree()) throw Error(ErrorCode::InvalidInput, "class vertex out of range");
    member[v] = 1;
  }
  const std::size_t m = c1.size();

  struct Partial {
    std::map<std::size_t, std::uint64_t> hist;
    std::size_t f_max = 0;
    std::uint64_t violations = 0;
  };
  std::vector<Partial> parts(std::max(1u, threads));
  parallel_chunks(elements.size(), threads, [&](std::size_t b, std::size_t e, unsigned w) {
    Partial& out = parts[w];
    for (std::size_t i = b; i < e; ++i) {
      const auto row = elements.row(i);
      const OrbitCount oc = orbit_count_on(row, c1, member);
      ++out.hist[oc.theta];
      if (2 * oc.theta > m + oc.fixed) ++out.violations;
      if (!row_is_identity(row)) out.f_max = std::max(out.f_max, oc.fixed);
    }
  });

  MotionReport r;
  r.group_order = elements.size();
  r.class_size = m;
  r.t = t;
  for (const auto& p : parts) {
    for (auto [theta, count] : p.hist) r.theta_histogram[theta] += count;
    r.F_max = std::max(r.F_max, p.f_max);
    r.theta_bound_violations += p.violations;
  }
  const BigInt T = t;
  BigInt numer = 0;
  for (auto [theta, count] : r.theta_histogram) numer += BigInt(count) * ipow(T, static_cast<unsigned>(theta));
  r.exact_EN = BigRational(numer, ipow(T, static_cast<unsigned>(m)));

  if (elements.size() == 1) {
    r.least_prime = 0;
    r.lemma_satisfied = true;
  } else {
    r.least_prime = least_prime_divisor(r.group_order);
    r.lemma_satisfied = r.exact_EN < BigRational(r.least_prime);
  }
  r.log_condition = ipow(T, static_cast<unsigned>(m - r.F_max)) > r.group_order * r.group_order;
  const BigRational excess = r.exact_EN - 1;
  r.counting_bound_holds = excess * excess * BigRational(ipow(T, static_cast<unsigned>(m - r.F_max))) <=
                           BigRational((r.group_order - 1) * (r.group_order - 1));
  return r;
}

nlohmann::json motion_report_to_json(const MotionReport& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [theta, count] : r.theta_histogram) hist[std::to_string(theta)] = count;
  nlohmann::json j{
      {"order", r.group_order.str()},
      {"class_size", r.class_size},
      {"t", r.t},
      {"exact_EN",
       {{"num", numerator(r.exact_EN).str()}, {"den", denominator(r.exact_EN).str()}, {"approx", to_decimal(r.exact_EN)}}},
      {"F_max", r.F_max},
      {"theta_histogram", hist},
      {"least_prime", r.least_prime},
      {"lemma_satisfied", r.lemma_satisfied},
      {"log_condition", r.log_condition},
      {"theta_bound_violations", r.theta_bound_violations},
      {"counting_bound_holds", r.counting_bound_holds},
  };
  if (r.motion) j["motion"] = *r.motion;
  return j;
}

// --- analytic bounds --------------------------------------------------------

bool HalfPowerBound::less_than(const BigInt& r) const {
  const BigInt slack = r - 1;
  if (slack <= 0) return false;
  return numer * numer < slack * slack * ipow(base, small(twice_exponent));
}

std::optional<BigRational> HalfPowerBound::rational() const {
  if (twice_exponent % 2 != 0) return std::nullopt;
  return BigRational(numer, ipow(base, small(twice_exponent / 2))) + 1;
}

std::string HalfPowerBound::decimal(int digits) const {
  using Dec = boost::multiprecision::cpp_dec_float_100;
  const Dec value = Dec(numer) / boost::multiprecision::sqrt(Dec(ipow(base, small(twice_exponent)))) + 1;
  std::ostringstream out;
  out << std::fixed << std::setprecision(digits) << value;
  return out.str();
}

double HalfPowerBound::approx() const { return std::stod(decimal(17)); }

std::string HalfPowerBound::to_string() const {
  std::string e = twice_exponent % 2 == 0 ? BigInt(twice_exponent / 2).str() : "(" + twice_exponent.str() + "/2)";
  return numer.str() + "/" + base.str() + "^" + e + " + 1";
}

bool operator<(const HalfPowerBound& a, const HalfPowerBound& b) {
  return a.numer * a.numer * ipow(b.base, small(b.twice_exponent)) <
         b.numer * b.numer * ipow(a.base, small(a.twice_exponent));
}

nlohmann::json bound_to_json(const HalfPowerBound& b) {
  nlohmann::json j{{"numer", b.numer.str()},
                   {"base", b.base.str()},
                   {"twice_exponent", b.twice_exponent.str()},
                   {"expression", b.to_string()},
                   {"approx", b.decimal()},
                   {"below_2", b.less_than(2)}};
  if (auto r = b.rational()) j["exact"] = {{"num", numerator(*r).str()}, {"den", denominator(*r).str()}};
  return j;
}

HalfPowerBound levi_bound(int q, unsigned t) {
  const auto pp = prime_power(static_cast<std::uint64_t>(q));
  if (!pp || q < 2) throw Error(ErrorCode::InvalidParameters, "q must be a prime power");
  if (t < 2) throw Error(ErrorCode::InvalidParameters, "t must be at least 2");
  const BigInt Q = q;
  const BigInt poly = ipow(Q, 8) - ipow(Q, 6) - ipow(Q, 5) + ipow(Q, 3);
  return {poly * pp->second, BigInt(t), Q * Q + 1};
}

double levi_bound_log2_form(int q, unsigned t) {
  const double Q = q;
  const double poly = std::pow(Q, 8) - std::pow(Q, 6) - std::pow(Q, 5) + std::pow(Q, 3);
  return std::log2(Q) * poly / std::pow(static_cast<double>(t), (Q * Q + 1) / 2) + 1;
}

HalfPowerBound lg1_bound(unsigned n, unsigned k) {
  if (k < 4 || 2 * k >= n) throw Error(ErrorCode::InvalidParameters, "lg1_bound needs k >= 4 and 2k < n");
  const BigInt twice_k = binomial(n, k) - binomial(n - 2, k - 2) - binomial(n - 2, k);
  return {factorial(n), BigInt(2), twice_k};
}

BigInt fixed_ksets_formula(unsigned n, unsigned k) {
  if (n < 2) return 0;
  return (k >= 2 ? binomial(n - 2, k - 2) : BigInt(0)) + binomial(n - 2, k);
}

FixedKsets max_fixed_ksets(unsigned n, unsigned k) {
  if (n > 12) throw Error(ErrorCode::TooLarge, "exhaustive path limited to n <= 12");
  if (n < 2 || k > n) throw Error(ErrorCode::InvalidParameters, "need n >= 2 and k <= n");
  FixedKsets out;
  out.exhaustive = true;
  std::vector<unsigned> parts;
  // Partitions of n with parts in descending order.
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left, unsigned max_part) {
    if (left == 0) {
      if (parts.front() == 1) return;  // identity
      std::vector<BigInt> poly(n + 1, 0);
      poly[0] = 1;
      for (unsigned len : parts)
        for (unsigned d = n; d >= len; --d) poly[d] += poly[d - len];
      const BigInt& f = poly[k];
      if (f > out.F) {
        out.F = f;
        out.argmax.clear();
      }
      if (f == out.F) out.argmax.push_back(parts);
      return;
    }
    for (unsigned p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(n, n);
  std::vector<unsigned> transposition(n - 1, 1);
  transposition[0] = 2;
  out.only_transpositions = out.argmax.size() == 1 && out.argmax[0] == transposition;
  return out;
}

HalfPowerBound weak_bound(unsigned m, const BigInt& aut_order, unsigned n, std::size_t c1_size) {
  if (m < 3 || n < 4) throw Error(ErrorCode::InvalidParameters, "weak_bound needs m >= 3 and n >= 4");
  if (c1_size < 1 || c1_size > m) throw Error(ErrorCode::InvalidParameters, "class size must be in 1..m");
  // F - T = (c1 - 2) m^(n-1) - c1 m^(n-1) = -2 m^(n-1), independent of c1.
  const BigInt mn1 = ipow(BigInt(m), n - 1);
  return {factorial(n) * ipow(aut_order, n), BigInt(2), 2 * mn1};
}

// --- slopes -----------------------------------------------------------------

Slope slope_mobius(int q, int a, int b, int c, int d, Slope alpha) {
  a = mod(a, q), b = mod(b, q), c = mod(c, q), d = mod(d, q);
  if (mod(static_cast<long long>(a) * d - static_cast<long long>(b) * c, q) == 0)
    throw Error(ErrorCode::SingularMatrix, "matrix is singular");
  if (alpha == kInfiniteSlope) return b == 0 ? kInfiniteSlope : mod(static_cast<long long>(d) * inv_mod(b, q), q);
  const int den = mod(a + static_cast<long long>(b) * alpha, q);
  if (den == 0) return kInfiniteSlope;
  return mod((static_cast<long long>(d) * alpha + c) % q * inv_mod(den, q), q);
}

Vertex apply_matrix(int q, int a, int b, int c, int d, Vertex v) {
  const int x = static_cast<int>(v) / q, y = static_cast<int>(v) % q;
  const int nx = mod(static_cast<long long>(a) * x + static_cast<long long>(b) * y, q);
  const int ny = mod(static_cast<long long>(c) * x + static_cast<long long>(d) * y, q);
  return static_cast<Vertex>(nx * q + ny);
}

BigRational favorable_probability_bound(int q) {
  if (q < 3 || q % 2 == 0) throw Error(ErrorCode::InvalidParameters, "q must be odd");
  const BigInt Q = q;
  const unsigned h = static_cast<unsigned>((q - 1) / 2);
  return BigRational((Q * Q - 1) * (Q * Q - Q) * 2 * partition_count(h), binomial(static_cast<unsigned>(q), h));
}

FavorableReport favorable_fraction(int q, std::uint64_t trials, std::uint64_t seed, FavorableMode mode,
                                   const SearchOptions& opts, unsigned threads) {
  if (q < 3 || q > 13 || !is_prime(static_cast<std::uint64_t>(q)))
    throw Error(ErrorCode::InvalidParameters, "q must be an odd prime <= 13");
  const unsigned h = static_cast<unsigned>((q - 1) / 2);
  std::vector<std::vector<int>> sets;
  if (mode == FavorableMode::ExactSmall) {
    for (auto mask : ksubsets_colex(static_cast<unsigned>(q), h)) {
      std::vector<int> S;
      for (int b = 0; b < q; ++b)
        if (mask & (1u << b)) S.push_back(b);
      sets.push_back(std::move(S));
    }
  } else {
    for (std::uint64_t i = 0; i < trials; ++i) {
      SplitMix64 rng(derive_seed(seed, i));
      std::vector<int> all(q);
      std::iota(all.begin(), all.end(), 0);
      for (unsigned j = 0; j < h; ++j) std::swap(all[j], all[j + uniform_below(rng, q - j)]);
      std::vector<int> S(all.begin(), all.begin() + h);
      std::sort(S.begin(), S.end());
      sets.push_back(std::move(S));
    }
  }

  const BigInt base = BigInt(q) * q * (q - 1);
  std::vector<std::optional<BigInt>> orders(sets.size());
  parallel_chunks(sets.size(), threads, [&](std::size_t b, std::size_t e, unsigned) {
    for (std::size_t i = b; i < e; ++i) {
      try {
        orders[i] = automorphism_group(slope_graph(q, sets[i]).first, {}, opts).order;
      } catch (const Error& err) {
        if (err.code() != ErrorCode::Timeout) throw;
      }
    }
  });

  FavorableReport r;
  r.q = q;
  r.seed = seed;
  r.trials = sets.size();
  for (const auto& o : orders) {
    if (!o) {
      ++r.timeouts;
      continue;
    }
    if (*o == base) ++r.equal;
    if (*o % base == 0) ++r.divisible;
    ++r.order_histogram[o->str()];
  }
  r.fraction = r.trials ? BigRational(r.equal, r.trials) : BigRational(0);
  r.probability_bound = favorable_probability_bound(q);
  return r;
}

nlohmann::json favorable_to_json(const FavorableReport& r) {
  return {{"q", r.q},
          {"seed", r.seed},
          {"trials", r.trials},
          {"equal", r.equal},
          {"divisible", r.divisible},
          {"timeouts", r.timeouts},
          {"order_histogram", r.order_histogram},
          {"fraction", {{"num", numerator(r.fraction).str()}, {"den", denominator(r.fraction).str()}, {"approx", to_decimal(r.fraction, 6)}}},
          {"probability_bound",
           {{"num", numerator(r.probability_bound).str()},
            {"den", denominator(r.probability_bound).str()},
            {"approx", to_decimal(r.probability_bound, 6)}}}};
}

// --- split search -----------------------------------------------------------

SplitResult randomized_split_search(const Graph& g, const Coloring& c, std::uint32_t class_id, unsigned t,
                                    const MotionReport& report, std::uint64_t seed, std::uint64_t max_tries,
                                    const SearchOptions& opts) {
  if (!report.lemma_satisfied) throw Error(ErrorCode::InvalidParameters, "certificate does not hold");
  for (std::uint64_t i = 0; i < max_tries; ++i) {
    Coloring s = split_color_class(c, class_id, t, derive_seed(seed, i));
    if (!is_proper(g, s)) continue;
    if (is_distinguishing(g, s, opts).distinguishing) return {std::move(s), i + 1};
  }
  throw Error(ErrorCode::ExhaustedTries, "no distinguishing split in " + std::to_string(max_tries) + " tries");
}

// --- line directions --------------------------------------------------------

LineDirectionReport check_line_directions(int q, std::uint64_t samples, std::uint64_t seed) {
  if (q < 3 || !is_prime(static_cast<std::uint64_t>(q)) || q > 13)
    throw Error(ErrorCode::InvalidParameters, "q must be an odd prime <= 13");
  const unsigned need = static_cast<unsigned>((q + 3) / 2);
  const unsigned N = static_cast<unsigned>(q * q);
  LineDirectionReport r;
  r.q = q;
  r.exhaustive = samples == 0;
  r.min_directions_nonline = static_cast<std::size_t>(q + 1);

  std::vector<Vertex> pts(q);
  auto examine = [&] {
    std::vector<char> seen(q + 1, 0);
    std::size_t dirs = 0;
    for (int i = 0; i < q; ++i)
      for (int j = i + 1; j < q; ++j) {
        const Slope s = slope(q, pts[i], pts[j]);
        const int idx = s == kInfiniteSlope ? q : s;
        if (!seen[idx]) {
          seen[idx] = 1;
          ++dirs;
        }
      }
    ++r.checked;
    if (dirs == 1) {
      ++r.lines_seen;
      return;
    }
    r.min_directions_nonline = std::min(r.min_directions_nonline, dirs);
    if (dirs < need) ++r.violations;
  };

  if (samples == 0) {
    if (binomial(N, static_cast<unsigned>(q)) > 100'000'000)
      throw Error(ErrorCode::TooLarge, "exhaustive check too large; sample instead");
    std::vector<unsigned> idx(q);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
      for (int i = 0; i < q; ++i) pts[i] = idx[i];
      examine();
      int i = q - 1;
      while (i >= 0 && idx[i] == N - q + static_cast<unsigned>(i)) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    SplitMix64 rng(seed);
    std::vector<Vertex> all(N);
    std::iota(all.begin(), all.end(), Vertex{0});
    for (std::uint64_t s = 0; s < samples; ++s) {
      for (int j = 0; j < q; ++j) std::swap(all[j], all[j + uniform_below(rng, N - j)]);
      std::copy(all.begin(), all.begin() + q, pts.begin());
      examine();
    }
  }
  return r;
}

}  // namespace dchroma
