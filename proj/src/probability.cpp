#include "dayenu/probability.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <utility>

namespace dayenu {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) {
    throw std::invalid_argument("zero denominator");
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  const BigInt g = mp::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  const auto is_integer = [](std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
      s.remove_prefix(1);
    }
    if (s.empty()) {
      return false;
    }
    for (char c : s) {
      if (c < '0' || c > '9') {
        return false;
      }
    }
    return true;
  };
  const std::size_t slash = text.find('/');
  std::string_view num_part = text.substr(0, slash);
  std::string_view den_part =
      slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!is_integer(num_part) || !is_integer(den_part)) {
    throw std::invalid_argument("rationals are written as \"a/b\" or \"a\", "
                                "got \"" + std::string(text) + "\"");
  }
  return Rational(BigInt(std::string(num_part)), BigInt(std::string(den_part)));
}

Rational Rational::operator-() const {
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) {
    throw std::domain_error("division by zero");
  }
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering Rational::operator<=>(const Rational& o) const {
  const BigInt lhs = num_ * o.den_;
  const BigInt rhs = o.num_ * den_;
  if (lhs < rhs) {
    return std::strong_ordering::less;
  }
  if (lhs > rhs) {
    return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational Rational::pow(const Rational& base, int exponent) {
  if (exponent < 0) {
    throw std::invalid_argument("negative exponent");
  }
  // The base is reduced, so numerator and denominator powers stay coprime.
  Rational out;
  out.num_ = mp::pow(base.num_, static_cast<unsigned>(exponent));
  out.den_ = mp::pow(base.den_, static_cast<unsigned>(exponent));
  if (out.den_ < 0) {  // cannot happen; keep the invariant obvious
    out.num_ = -out.num_;
    out.den_ = -out.den_;
  }
  return out;
}

std::string Rational::to_fraction_string() const {
  return num_.str() + "/" + den_.str();
}

namespace {

BigInt pow10(int k) { return mp::pow(BigInt(10), static_cast<unsigned>(k)); }

}  // namespace

std::string Rational::to_decimal_string(int sig_digits) const {
  if (sig_digits < 1) {
    throw std::invalid_argument("need at least one significant digit");
  }
  if (num_ == 0) {
    return "0";
  }
  const bool negative = num_ < 0;
  const BigInt abs_num = negative ? BigInt(-num_) : num_;

  // exponent e with 10^e <= |v| < 10^(e+1)
  const auto v_at_least = [&](int k) {
    return k >= 0 ? abs_num >= den_ * pow10(k) : abs_num * pow10(-k) >= den_;
  };
  int e = 0;
  while (v_at_least(e + 1)) {
    ++e;
  }
  while (!v_at_least(e)) {
    --e;
  }

  // digits = round(|v| * 10^(sig-1-e)), half away from zero
  const int scale = sig_digits - 1 - e;
  const BigInt scaled_num = scale >= 0 ? abs_num * pow10(scale) : abs_num;
  const BigInt scaled_den = scale >= 0 ? den_ : den_ * pow10(-scale);
  BigInt digits = (2 * scaled_num + scaled_den) / (2 * scaled_den);
  if (digits == pow10(sig_digits)) {  // rounding carried into a new digit
    digits = pow10(sig_digits - 1);
    ++e;
  }

  std::string d = digits.str();
  std::string out;
  if (e >= sig_digits) {
    out = d + std::string(static_cast<std::size_t>(e) - sig_digits + 1, '0');
  } else if (e >= 0) {
    out = d.substr(0, static_cast<std::size_t>(e) + 1);
    std::string frac = d.substr(static_cast<std::size_t>(e) + 1);
    while (!frac.empty() && frac.back() == '0') {
      frac.pop_back();
    }
    if (!frac.empty()) {
      out += "." + frac;
    }
  } else {
    while (!d.empty() && d.back() == '0') {
      d.pop_back();
    }
    out = "0." + std::string(static_cast<std::size_t>(-e) - 1, '0') + d;
  }
  return negative ? "-" + out : out;
}

double Rational::to_double() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

ProductMeasure::ProductMeasure(std::vector<Rational> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw std::invalid_argument("a measure needs at least one variable");
  }
  for (const Rational& p : probs_) {
    if (p < Rational(0) || p > Rational(1)) {
      throw std::invalid_argument("probability " + p.to_fraction_string() +
                                  " is outside [0, 1]");
    }
  }
}

const Rational& ProductMeasure::prob(int var) const {
  if (var < 1 || var > arity()) {
    throw std::invalid_argument("variable x" + std::to_string(var) +
                                " is outside arity " + std::to_string(arity()));
  }
  return probs_[static_cast<std::size_t>(var) - 1];
}

ProductMeasure uniform_measure(int n, const Rational& p) {
  if (n < 1) {
    throw std::invalid_argument("arity must be at least 1, got " +
                                std::to_string(n));
  }
  return ProductMeasure(std::vector<Rational>(static_cast<std::size_t>(n), p));
}

Rational assignment_weight(const ProductMeasure& m, const Assignment& a) {
  if (m.arity() != a.arity()) {
    throw std::invalid_argument("measure arity " + std::to_string(m.arity()) +
                                " does not match assignment arity " +
                                std::to_string(a.arity()));
  }
  Rational w(1);
  for (int i = 1; i <= a.arity(); ++i) {
    w *= a.value(i) ? m.prob(i) : Rational(1) - m.prob(i);
  }
  return w;
}

Rational sat_probability(const TruthTable& t, const ProductMeasure& m) {
  if (t.arity() != m.arity()) {
    throw std::invalid_argument("table arity " + std::to_string(t.arity()) +
                                " does not match measure arity " +
                                std::to_string(m.arity()));
  }
  const int n = t.arity();

  // p_i and 1 - p_i reduce to the same denominator, so every row weight is
  // an integer product over one shared denominator; reduce once at the end.
  std::vector<BigInt> true_num(static_cast<std::size_t>(n));
  std::vector<BigInt> false_num(static_cast<std::size_t>(n));
  BigInt shared_den(1);
  for (int i = 1; i <= n; ++i) {
    const Rational& p = m.prob(i);
    true_num[static_cast<std::size_t>(i) - 1] = p.num();
    false_num[static_cast<std::size_t>(i) - 1] = p.den() - p.num();
    shared_den *= p.den();
  }

  BigInt sum(0);
  t.for_each_one([&](std::uint64_t index) {
    BigInt row(1);
    for (int i = 1; i <= n; ++i) {
      const bool value = (index >> (n - i)) & 1;
      row *= value ? true_num[static_cast<std::size_t>(i) - 1]
                   : false_num[static_cast<std::size_t>(i) - 1];
      if (row == 0) {
        break;
      }
    }
    sum += row;
  });
  return Rational(std::move(sum), std::move(shared_den));
}

Rational dayenu_fail_closed_form(int n, const Rational& p) {
  if (n < 2) {
    throw std::invalid_argument(
        "the dayenu function needs arity at least 2, got " + std::to_string(n));
  }
  if (p < Rational(0) || p > Rational(1)) {
    throw std::invalid_argument("probability " + p.to_fraction_string() +
                                " is outside [0, 1]");
  }
  const Rational q = Rational(1) - p;
  Rational sum(0);
  for (int k = 0; k <= n; ++k) {  // weight of the staircase F^(n-k) T^k
    sum += Rational::pow(p, k) * Rational::pow(q, n - k);
  }
  return sum;
}

MonteCarloEstimate monte_carlo_sat(const TruthTable& t,
                                   const ProductMeasure& m,
                                   std::uint64_t samples, std::uint64_t seed) {
  if (t.arity() != m.arity()) {
    throw std::invalid_argument("table arity " + std::to_string(t.arity()) +
                                " does not match measure arity " +
                                std::to_string(m.arity()));
  }
  if (samples == 0) {
    throw std::invalid_argument("need at least one sample");
  }
  const int n = t.arity();

  // Draw u in [0, 2^64); x_i is true iff u < p_i * 2^64. With t_i =
  // ceil(p_i * 2^64) that is exactly u < t_i, except p_i = 1 which always
  // hits. The comparison is exact for every p_i at 64-bit resolution.
  struct Threshold {
    bool always;
    std::uint64_t value;
  };
  std::vector<Threshold> thresholds;
  thresholds.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    const Rational& p = m.prob(i);
    if (p.num() == p.den()) {
      thresholds.push_back({true, 0});
    } else {
      const BigInt t64 = ((p.num() << 64) + p.den() - 1) / p.den();
      thresholds.push_back({false, t64.convert_to<std::uint64_t>()});
    }
  }

  std::mt19937_64 rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    std::uint64_t index = 0;
    for (const Threshold& th : thresholds) {
      const std::uint64_t u = rng();
      const bool value = th.always || u < th.value;
      index = (index << 1) | static_cast<std::uint64_t>(value);
    }
    hits += t.bit(index);
  }

  MonteCarloEstimate out;
  out.estimate = Rational(BigInt(hits), BigInt(samples));
  const double q =
      static_cast<double>(hits) / static_cast<double>(samples);
  out.std_error = std::sqrt(q * (1.0 - q) / static_cast<double>(samples));
  out.hits = hits;
  out.samples = samples;
  out.seed = seed;
  return out;
}

}  // namespace dayenu
