#include "dayenu/truth_table.hpp"

#include <atomic>
#include <bit>

namespace dayenu {

namespace {

std::atomic<int> g_arity_cap{kDefaultArityCap};

void check_arity(int n) {
  if (n < 1) {
    throw std::invalid_argument("arity must be at least 1, got " +
                                std::to_string(n));
  }
  const int cap = arity_cap();
  if (n > cap) {
    throw CapExceededError(n, cap);
  }
}

// Within one 64-bit word, the bits where index bit w (w < 6) is set.
constexpr std::uint64_t kWeightMask[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

}  // namespace

CapExceededError::CapExceededError(int arity, int cap)
    : std::length_error("arity " + std::to_string(arity) +
                        " exceeds the configured cap of " +
                        std::to_string(cap)),
      arity_(arity),
      cap_(cap) {}

int arity_cap() { return g_arity_cap.load(std::memory_order_relaxed); }

void set_arity_cap(int cap) {
  if (cap < 1 || cap > kMaxSupportedArity) {
    throw std::invalid_argument("arity cap must be in [1, " +
                                std::to_string(kMaxSupportedArity) +
                                "], got " + std::to_string(cap));
  }
  g_arity_cap.store(cap, std::memory_order_relaxed);
}

Assignment::Assignment(std::vector<bool> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw std::invalid_argument("assignment needs at least one variable");
  }
}

Assignment Assignment::from_string(std::string_view text) {
  std::vector<bool> values;
  values.reserve(text.size());
  for (char c : text) {
    if (c == 'T') {
      values.push_back(true);
    } else if (c == 'F') {
      values.push_back(false);
    } else {
      throw std::invalid_argument(
          std::string("assignment strings use only 'T' and 'F', got '") + c +
          "'");
    }
  }
  return Assignment(std::move(values));
}

bool Assignment::value(int var) const {
  if (var < 1 || var > arity()) {
    throw std::invalid_argument("variable x" + std::to_string(var) +
                                " is outside arity " + std::to_string(arity()));
  }
  return values_[static_cast<std::size_t>(var) - 1];
}

std::string Assignment::to_string() const {
  std::string out;
  out.reserve(values_.size());
  for (bool v : values_) {
    out.push_back(v ? 'T' : 'F');
  }
  return out;
}

std::uint64_t assignment_index(const Assignment& a) {
  std::uint64_t index = 0;
  for (bool v : a.values()) {
    index = (index << 1) | static_cast<std::uint64_t>(v);
  }
  return index;
}

Assignment assignment_from_index(int n, std::uint64_t index) {
  if (n < 1 || n > kMaxSupportedArity) {
    throw std::invalid_argument("arity out of range: " + std::to_string(n));
  }
  if (index >> n != 0) {
    throw std::invalid_argument("index " + std::to_string(index) +
                                " does not fit in arity " + std::to_string(n));
  }
  std::vector<bool> values(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    values[static_cast<std::size_t>(i) - 1] = (index >> (n - i)) & 1;
  }
  return Assignment(std::move(values));
}

TruthTable::TruthTable(int n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {}

int TruthTable::countr_zero_u64(std::uint64_t w) { return std::countr_zero(w); }

std::size_t TruthTable::word_count(int n) {
  return n >= 6 ? (std::size_t{1} << (n - 6)) : 1;
}

std::uint64_t TruthTable::tail_mask() const {
  if (n_ >= 6) {
    return ~std::uint64_t{0};
  }
  return (std::uint64_t{1} << (std::uint64_t{1} << n_)) - 1;
}

TruthTable TruthTable::constant(int n, bool value) {
  check_arity(n);
  TruthTable t(n, std::vector<std::uint64_t>(word_count(n), 0));
  if (value) {
    for (auto& w : t.words_) {
      w = ~std::uint64_t{0};
    }
    t.words_.back() &= t.tail_mask();
  }
  return t;
}

TruthTable TruthTable::variable(int n, int var) {
  check_arity(n);
  if (var < 1 || var > n) {
    throw std::invalid_argument("variable x" + std::to_string(var) +
                                " is outside arity " + std::to_string(n));
  }
  TruthTable t(n, std::vector<std::uint64_t>(word_count(n), 0));
  const int weight = n - var;  // x_var contributes 2^weight to the index
  if (weight >= 6) {
    for (std::size_t k = 0; k < t.words_.size(); ++k) {
      if ((k >> (weight - 6)) & 1) {
        t.words_[k] = ~std::uint64_t{0};
      }
    }
  } else {
    const std::uint64_t mask = kWeightMask[weight] & t.tail_mask();
    for (auto& w : t.words_) {
      w = mask;
    }
  }
  return t;
}

TruthTable TruthTable::from_bits(int n, std::string_view bits) {
  check_arity(n);
  const std::uint64_t expected = std::uint64_t{1} << n;
  if (bits.size() != expected) {
    throw std::invalid_argument("expected " + std::to_string(expected) +
                                " bits for arity " + std::to_string(n) +
                                ", got " + std::to_string(bits.size()));
  }
  TruthTable t(n, std::vector<std::uint64_t>(word_count(n), 0));
  for (std::uint64_t i = 0; i < expected; ++i) {
    const char c = bits[static_cast<std::size_t>(i)];
    if (c == '1') {
      t.words_[static_cast<std::size_t>(i >> 6)] |= std::uint64_t{1}
                                                    << (i & 63);
    } else if (c != '0') {
      throw std::invalid_argument(
          std::string("bit strings use only '0' and '1', got '") + c + "'");
    }
  }
  return t;
}

bool TruthTable::bit(std::uint64_t index) const {
  if (index >= size()) {
    throw std::invalid_argument("index " + std::to_string(index) +
                                " is outside table of size " +
                                std::to_string(size()));
  }
  return (words_[static_cast<std::size_t>(index >> 6)] >> (index & 63)) & 1;
}

bool TruthTable::eval(const Assignment& a) const {
  if (a.arity() != n_) {
    throw std::invalid_argument(
        "assignment arity " + std::to_string(a.arity()) +
        " does not match table arity " + std::to_string(n_));
  }
  return bit(assignment_index(a));
}

std::uint64_t TruthTable::count_ones() const {
  std::uint64_t count = 0;
  for (std::uint64_t w : words_) {
    count += static_cast<std::uint64_t>(std::popcount(w));
  }
  return count;
}

std::vector<Assignment> TruthTable::truth_set() const {
  std::vector<Assignment> out;
  out.reserve(static_cast<std::size_t>(count_ones()));
  for_each_one(
      [&](std::uint64_t index) { out.push_back(assignment_from_index(n_, index)); });
  return out;
}

TruthTable TruthTable::operator~() const {
  TruthTable t(n_, words_);
  for (auto& w : t.words_) {
    w = ~w;
  }
  t.words_.back() &= tail_mask();
  return t;
}

namespace {

void check_same_arity(const TruthTable& a, const TruthTable& b) {
  if (a.arity() != b.arity()) {
    throw std::invalid_argument("arity mismatch: " +
                                std::to_string(a.arity()) + " vs " +
                                std::to_string(b.arity()));
  }
}

}  // namespace

TruthTable operator&(const TruthTable& a, const TruthTable& b) {
  check_same_arity(a, b);
  TruthTable t(a.n_, a.words_);
  for (std::size_t k = 0; k < t.words_.size(); ++k) {
    t.words_[k] &= b.words_[k];
  }
  return t;
}

TruthTable operator|(const TruthTable& a, const TruthTable& b) {
  check_same_arity(a, b);
  TruthTable t(a.n_, a.words_);
  for (std::size_t k = 0; k < t.words_.size(); ++k) {
    t.words_[k] |= b.words_[k];
  }
  return t;
}

TruthTable operator^(const TruthTable& a, const TruthTable& b) {
  check_same_arity(a, b);
  TruthTable t(a.n_, a.words_);
  for (std::size_t k = 0; k < t.words_.size(); ++k) {
    t.words_[k] ^= b.words_[k];
  }
  return t;
}

std::string TruthTable::to_bit_string() const {
  std::string out(static_cast<std::size_t>(size()), '0');
  for_each_one(
      [&](std::uint64_t index) { out[static_cast<std::size_t>(index)] = '1'; });
  return out;
}

std::string TruthTable::to_text() const {
  return "n=" + std::to_string(n_) + "\n" + to_bit_string() + "\n";
}

TruthTable TruthTable::from_text(std::string_view text) {
  if (text.substr(0, 2) != "n=") {
    throw std::invalid_argument("table text must start with \"n=\"");
  }
  const std::size_t eol = text.find('\n');
  if (eol == std::string_view::npos) {
    throw std::invalid_argument("table text is missing the bits line");
  }
  const std::string_view header = text.substr(2, eol - 2);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(std::string(header), &used);
    if (used != header.size()) {
      throw std::invalid_argument("");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad arity in table header: \"" +
                                std::string(header) + "\"");
  }
  std::string_view bits = text.substr(eol + 1);
  if (!bits.empty() && bits.back() == '\n') {
    bits.remove_suffix(1);
  }
  return from_bits(n, bits);
}

}  // namespace dayenu
