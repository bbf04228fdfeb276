#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dayenu/truth_table.hpp"

namespace dayenu {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational, always in lowest terms with a positive denominator.
// Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(BigInt num, BigInt den);

  // Accepts "a/b" or a plain integer, optionally signed.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  bool operator==(const Rational&) const = default;
  std::strong_ordering operator<=>(const Rational& o) const;

  static Rational pow(const Rational& base, int exponent);  // exponent >= 0

  std::string to_fraction_string() const;  // "num/den", e.g. "2047/2048"

  // Exact decimal rendering, rounded half away from zero at the given number
  // of significant digits; trailing zeros trimmed ("0.5", "0.9995117").
  std::string to_decimal_string(int sig_digits = 7) const;

  double to_double() const;

 private:
  BigInt num_;
  BigInt den_;
};

// Independent per-variable true-probabilities; entry i is P(x_{i+1} = T).
class ProductMeasure {
 public:
  explicit ProductMeasure(std::vector<Rational> probs);

  int arity() const { return static_cast<int>(probs_.size()); }
  const Rational& prob(int var) const;  // 1-based
  const std::vector<Rational>& probs() const { return probs_; }

 private:
  std::vector<Rational> probs_;
};

ProductMeasure uniform_measure(int n, const Rational& p);

// Product over variables of p_i (where a has T) and 1 - p_i (where F).
Rational assignment_weight(const ProductMeasure& m, const Assignment& a);

// Exact P[t is satisfied] under m: the weight of t's truth set. Iterates
// only the true rows, so sparse tables cost O(|truth set|).
Rational sat_probability(const TruthTable& t, const ProductMeasure& m);

// P[D_n fails] under the uniform-p measure, summed term by term over the
// staircase vectors: sum_{k=0..n} p^k (1-p)^(n-k). Equals (n+1)/2^n at
// p = 1/2. The general-p form extends the uniform-1/2 result.
Rational dayenu_fail_closed_form(int n, const Rational& p);

struct MonteCarloEstimate {
  Rational estimate;   // hits / samples, exact
  double std_error;    // sqrt(q(1-q)/samples) with q the hit fraction
  std::uint64_t hits = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

// Deterministic sampler: variables x1..xn are drawn per sample from one
// mt19937_64 stream seeded with `seed`; a draw u makes x_i true iff
// u < ceil(p_i * 2^64), an exact integer comparison at 64-bit resolution.
// Identical inputs give bit-identical estimates on every platform.
MonteCarloEstimate monte_carlo_sat(const TruthTable& t,
                                   const ProductMeasure& m,
                                   std::uint64_t samples, std::uint64_t seed);

}  // namespace dayenu
