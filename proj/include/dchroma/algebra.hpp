#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dchroma {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Element of a small finite field, identified by a dense id in [0, q).
/// Id 0 is zero and id 1 is one. For extension fields the id is the
/// base-p encoding of the polynomial coefficients (constant term first).
using FieldElem = std::uint8_t;

/// Table-driven GF(q) for prime powers q <= 16.
///
/// Extension fields are built modulo fixed irreducible polynomials
/// (GF(4): x^2+x+1, GF(8): x^3+x+1, GF(9): x^2+1, GF(16): x^4+x+1), so
/// element ids are stable across runs. The constructor verifies the field
/// axioms exhaustively and throws Error(UnsupportedOrder) for other q.
class FiniteField {
 public:
  explicit FiniteField(int q);

  int order() const { return q_; }
  int characteristic() const { return p_; }
  int degree() const { return n_; }

  FieldElem add(FieldElem a, FieldElem b) const { return add_[a * q_ + b]; }
  FieldElem mul(FieldElem a, FieldElem b) const { return mul_[a * q_ + b]; }
  FieldElem neg(FieldElem a) const { return neg_[a]; }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  /// Throws Error(InvalidInput) for a == 0.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  FieldElem pow(FieldElem a, unsigned e) const;
  /// x -> x^p.
  FieldElem frobenius(FieldElem a) const { return frob_[a]; }

  /// Class of the polynomial variable x in an extension field; 1 in a prime field.
  FieldElem generator() const { return n_ == 1 ? FieldElem{1} : static_cast<FieldElem>(p_); }

  std::string to_string(FieldElem a) const;

 private:
  void validate() const;

  int q_ = 0;
  int p_ = 0;
  int n_ = 0;
  std::vector<FieldElem> add_;
  std::vector<FieldElem> mul_;
  std::vector<FieldElem> neg_;
  std::vector<FieldElem> inv_;
  std::vector<FieldElem> frob_;
};

/// Same as constructing FiniteField(q).
FiniteField field_new(int q);

/// Returns (p, n) with q = p^n, or nullopt if q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::uint64_t q);
bool is_prime(std::uint64_t n);

BigInt factorial(unsigned n);
/// Exact binomial coefficient; 0 when k > n.
BigInt binomial(unsigned n, unsigned k);
/// Number of integer partitions of n (Euler's pentagonal recurrence), n <= 10^4.
BigInt partition_count(unsigned n);
/// Smallest prime dividing n. Throws Error(InvalidInput) for n < 2.
std::uint64_t least_prime_divisor(const BigInt& n);

BigInt ipow(const BigInt& base, unsigned exponent);
/// Decimal rendering for display; never used for verdicts.
std::string to_decimal(const BigRational& r, int digits = 12);
double to_double(const BigRational& r);

// k-subsets of [n] as bitmasks (n <= 32), colexicographic order.
std::vector<std::uint32_t> ksubsets_colex(unsigned n, unsigned k);
/// Rank of a k-subset mask in colex order among all k-subsets.
std::uint64_t colex_rank(std::uint32_t mask);

}  // namespace dchroma
