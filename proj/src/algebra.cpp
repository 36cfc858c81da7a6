#include "dchroma/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "dchroma/error.hpp"

namespace dchroma {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::InvalidParameters: return "InvalidParameters";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotSetwiseStable: return "NotSetwiseStable";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InvalidBaseColoring: return "InvalidBaseColoring";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::ExhaustedTries: return "ExhaustedTries";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  int n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return std::nullopt;
  return std::make_pair(static_cast<int>(p), n);
}

namespace {

// Irreducible modulus coefficients, low degree first, excluding the leading 1.
std::vector<int> modulus_for(int p, int n) {
  if (p == 2 && n == 2) return {1, 1};        // x^2 + x + 1
  if (p == 2 && n == 3) return {1, 1, 0};     // x^3 + x + 1
  if (p == 3 && n == 2) return {1, 0};        // x^2 + 1
  if (p == 2 && n == 4) return {1, 1, 0, 0};  // x^4 + x + 1
  return {};
}

std::vector<int> digits(int id, int p, int n) {
  std::vector<int> d(n);
  for (int i = 0; i < n; ++i) {
    d[i] = id % p;
    id /= p;
  }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int id = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) id = id * p + d[i];
  return id;
}

}  // namespace

FiniteField::FiniteField(int q) : q_(q) {
  auto pp = prime_power(q > 0 ? static_cast<std::uint64_t>(q) : 0);
  if (!pp || q > 16)
    throw Error(ErrorCode::UnsupportedOrder, "field order " + std::to_string(q) +
                                                 " is not a prime power <= 16");
  p_ = pp->first;
  n_ = pp->second;
  const auto modulus = modulus_for(p_, n_);

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  frob_.resize(q_);

  for (int a = 0; a < q_; ++a) {
    const auto da = digits(a, p_, n_);
    for (int b = 0; b < q_; ++b) {
      const auto db = digits(b, p_, n_);
      std::vector<int> s(n_);
      for (int i = 0; i < n_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<FieldElem>(undigits(s, p_));

      // Schoolbook product, then reduce modulo the fixed polynomial.
      std::vector<int> prod(2 * n_ - 1, 0);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (int deg = 2 * n_ - 2; deg >= n_; --deg) {
        const int c = prod[deg];
        if (c == 0) continue;
        prod[deg] = 0;
        // x^n = -(modulus low part)
        for (int i = 0; i < n_; ++i)
          prod[deg - n_ + i] = ((prod[deg - n_ + i] - c * modulus.at(i)) % p_ + p_) % p_;
      }
      prod.resize(n_);
      mul_[a * q_ + b] = static_cast<FieldElem>(undigits(prod, p_));
    }
  }
  for (int a = 0; a < q_; ++a) {
    for (int b = 0; b < q_; ++b) {
      if (add_[a * q_ + b] == 0) neg_[a] = static_cast<FieldElem>(b);
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<FieldElem>(b);
    }
  }
  for (int a = 0; a < q_; ++a) {
    FieldElem x = 1;
    for (int i = 0; i < p_; ++i) x = mul(x, static_cast<FieldElem>(a));
    frob_[a] = x;
  }
  validate();
}

void FiniteField::validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::InvalidInput, "field table check failed: " + what);
  };
  for (int a = 0; a < q_; ++a) {
    if (add(static_cast<FieldElem>(a), 0) != a || mul(static_cast<FieldElem>(a), 1) != a)
      fail("identity");
    if (add(static_cast<FieldElem>(a), neg_[a]) != 0) fail("additive inverse");
    if (a != 0 && mul(static_cast<FieldElem>(a), inv_[a]) != 1) fail("multiplicative inverse");
    for (int b = 0; b < q_; ++b) {
      const auto fa = static_cast<FieldElem>(a), fb = static_cast<FieldElem>(b);
      if (add(fa, fb) != add(fb, fa) || mul(fa, fb) != mul(fb, fa)) fail("commutativity");
      for (int c = 0; c < q_; ++c) {
        const auto fc = static_cast<FieldElem>(c);
        if (add(add(fa, fb), fc) != add(fa, add(fb, fc))) fail("additive associativity");
        if (mul(mul(fa, fb), fc) != mul(fa, mul(fb, fc))) fail("multiplicative associativity");
        if (mul(fa, add(fb, fc)) != add(mul(fa, fb), mul(fa, fc))) fail("distributivity");
      }
    }
  }
  for (int a = 0; a < q_; ++a) {
    FieldElem x = static_cast<FieldElem>(a);
    for (int i = 0; i < n_; ++i) x = frob_[x];
    if (x != a) fail("frobenius order");
  }
}

FieldElem FiniteField::inv(FieldElem a) const {
  if (a == 0) throw Error(ErrorCode::InvalidInput, "inverse of zero");
  return inv_[a];
}

FieldElem FiniteField::pow(FieldElem a, unsigned e) const {
  FieldElem r = 1;
  while (e--) r = mul(r, a);
  return r;
}

std::string FiniteField::to_string(FieldElem a) const { return std::to_string(int{a}); }

FiniteField field_new(int q) { return FiniteField(q); }

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt partition_count(unsigned n) {
  if (n > 10000) throw Error(ErrorCode::InvalidInput, "partition_count limited to n <= 10^4");
  std::vector<BigInt> p(n + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    BigInt acc = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > static_cast<long>(m)) break;
      const bool plus = (j % 2) == 1;
      const long g2 = j * (3 * j + 1) / 2;
      BigInt term = p[m - g1];
      if (g2 <= static_cast<long>(m)) term += p[m - g2];
      if (plus) acc += term;
      else acc -= term;
    }
    p[m] = acc;
  }
  return p[n];
}

std::uint64_t least_prime_divisor(const BigInt& n) {
  if (n < 2) throw Error(ErrorCode::InvalidInput, "least_prime_divisor requires n >= 2");
  for (std::uint64_t d = 2;; ++d) {
    if (BigInt(d) * d > n) return static_cast<std::uint64_t>(n);  // n itself is prime
    if (n % d == 0) return d;
  }
}

BigInt ipow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

std::string to_decimal(const BigRational& r, int digits) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  BigInt num = numerator(r);
  const BigInt den = denominator(r);
  std::ostringstream out;
  if (num < 0) {
    out << '-';
    num = -num;
  }
  out << num / den;
  BigInt rem = num % den;
  if (digits > 0) {
    out << '.';
    for (int i = 0; i < digits; ++i) {
      rem *= 10;
      out << rem / den;
      rem %= den;
    }
  }
  return out.str();
}

double to_double(const BigRational& r) { return std::stod(to_decimal(r, 17)); }

std::vector<std::uint32_t> ksubsets_colex(unsigned n, unsigned k) {
  if (n > 32 || k > n) throw Error(ErrorCode::InvalidParameters, "ksubsets_colex needs k <= n <= 32");
  std::vector<std::uint32_t> out;
  if (k == 0) return {0u};
  // Gosper's hack enumerates masks with k bits in increasing numeric order,
  // which is exactly colex order.
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    out.push_back(static_cast<std::uint32_t>(mask));
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
  return out;
}

std::uint64_t colex_rank(std::uint32_t mask) {
  std::uint64_t rank = 0;
  unsigned i = 1;
  for (unsigned b = 0; b < 32; ++b) {
    if (mask & (1u << b)) {
      rank += static_cast<std::uint64_t>(binomial(b, i));
      ++i;
    }
  }
  return rank;
}

}  // namespace dchroma
