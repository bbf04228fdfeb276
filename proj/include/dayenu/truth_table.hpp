#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dayenu {

// Hard bound on the exhaustive representation: 2^30 bits = 128 MiB per table.
inline constexpr int kMaxSupportedArity = 30;
inline constexpr int kDefaultArityCap = 24;

// Requested arity exceeds the configured cap. Carries both so callers can
// report the limit that was in force.
class CapExceededError : public std::length_error {
 public:
  CapExceededError(int arity, int cap);
  int arity() const { return arity_; }
  int cap() const { return cap_; }

 private:
  int arity_;
  int cap_;
};

// Process-wide arity cap for table construction, default 24. The CLI wires
// this to --max-n and the DAYENU_MAX_N environment variable.
int arity_cap();
void set_arity_cap(int cap);

// One point of {T,F}^n: a truth value per variable, x1 first.
class Assignment {
 public:
  explicit Assignment(std::vector<bool> values);

  // Parses a string over {T,F}, x1 leftmost, e.g. "FFTT".
  static Assignment from_string(std::string_view text);

  int arity() const { return static_cast<int>(values_.size()); }
  bool value(int var) const;  // 1-based variable index
  const std::vector<bool>& values() const { return values_; }

  std::string to_string() const;

  bool operator==(const Assignment&) const = default;

 private:
  std::vector<bool> values_;
};

// Row index of an assignment: x1 is the most significant bit, so F..F is 0
// and T..T is 2^n - 1 and ascending index order is lexicographic in (x1..xn).
std::uint64_t assignment_index(const Assignment& a);
Assignment assignment_from_index(int n, std::uint64_t index);

// Exhaustive bit-packed semantics of an n-variable Boolean function: one bit
// per assignment, 2^n bits total. Tables are immutable; every operation
// returns a fresh table. Unused tail bits of the last word are kept zero so
// word-wise equality is semantic equality.
class TruthTable {
 public:
  static TruthTable constant(int n, bool value);
  static TruthTable variable(int n, int var);  // projection onto x_var

  // Builds a table from its 2^n-character 0/1 row string, index 0 first.
  static TruthTable from_bits(int n, std::string_view bits);

  int arity() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }

  bool bit(std::uint64_t index) const;
  bool eval(const Assignment& a) const;

  std::uint64_t count_ones() const;
  std::vector<Assignment> truth_set() const;

  // Visits the index of every true row in ascending order.
  template <typename F>
  void for_each_one(F&& fn) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int b = countr_zero_u64(w);
        fn(static_cast<std::uint64_t>(k) * 64 + b);
        w &= w - 1;
      }
    }
  }

  TruthTable operator~() const;
  friend TruthTable operator&(const TruthTable& a, const TruthTable& b);
  friend TruthTable operator|(const TruthTable& a, const TruthTable& b);
  friend TruthTable operator^(const TruthTable& a, const TruthTable& b);

  bool operator==(const TruthTable&) const = default;

  std::string to_bit_string() const;

  // Text form: "n=<arity>\n<bits>\n" with bits in ascending index order.
  std::string to_text() const;
  static TruthTable from_text(std::string_view text);

 private:
  TruthTable(int n, std::vector<std::uint64_t> words);

  static int countr_zero_u64(std::uint64_t w);
  static std::size_t word_count(int n);
  std::uint64_t tail_mask() const;

  int n_;
  std::vector<std::uint64_t> words_;
};

}  // namespace dayenu
