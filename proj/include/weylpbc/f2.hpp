#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wpbc {

// Dense vector over F2. Bit i = coordinate i, packed LSB-first into 64-bit
// words; bits at positions >= size() are kept zero.
class F2Vector {
 public:
  F2Vector() = default;
  explicit F2Vector(std::size_t len) : len_(len), words_(word_count(len), 0) {}

  // Builds from a bitstring like "0110"; character i = coordinate i.
  static F2Vector from_string(std::string_view bits);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  std::size_t popcount() const;
  // Index of the lowest set bit, or size() when zero.
  std::size_t lowest_set() const;

  F2Vector& operator^=(const F2Vector& rhs);
  friend F2Vector operator^(F2Vector lhs, const F2Vector& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  friend bool operator==(const F2Vector&, const F2Vector&) = default;

  std::string to_string() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  static std::size_t word_count(std::size_t len) { return (len + 63) / 64; }
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

// Bitstring order: first differing coordinate decides, 0 before 1.
bool lex_less(const F2Vector& a, const F2Vector& b);

struct F2VectorLess {
  bool operator()(const F2Vector& a, const F2Vector& b) const {
    return lex_less(a, b);
  }
};

// Row-major matrix over F2; all rows have length ncols.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::vector<F2Vector> rows, std::size_t ncols);
  // Deduces ncols from the first row (0 when empty).
  explicit F2Matrix(std::vector<F2Vector> rows);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  const F2Vector& row(std::size_t i) const { return rows_[i]; }
  const std::vector<F2Vector>& rows() const { return rows_; }

 private:
  std::vector<F2Vector> rows_;
  std::size_t ncols_ = 0;
};

// Rank of the row space.
std::size_t rank(const F2Matrix& m);

// Nonzero c of length nrows with sum_{i: c_i=1} row_i = 0, or nullopt when
// the rows are independent. Elimination inserts rows top-down with leftmost
// pivots, so the certificate is the first dependency in that order.
std::optional<F2Vector> dependency_certificate(const F2Matrix& m);

}  // namespace wpbc
