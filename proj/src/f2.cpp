#include "weylpbc/f2.hpp"

#include <bit>

#include "weylpbc/errors.hpp"

namespace wpbc {

F2Vector F2Vector::from_string(std::string_view bits) {
  F2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i, true);
    else if (bits[i] != '0')
      throw BadLength("bitstring may contain only '0' and '1'");
  }
  return v;
}

bool F2Vector::is_zero() const {
  for (std::uint64_t w : words_)
    if (w != 0) return false;
  return true;
}

std::size_t F2Vector::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::size_t F2Vector::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0)
      return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return len_;
}

F2Vector& F2Vector::operator^=(const F2Vector& rhs) {
  if (len_ != rhs.len_) throw BadLength("F2Vector xor: length mismatch");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= rhs.words_[k];
  return *this;
}

std::string F2Vector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool lex_less(const F2Vector& a, const F2Vector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t k = 0; k < wa.size(); ++k) {
    const std::uint64_t d = wa[k] ^ wb[k];
    if (d != 0) {
      // The lowest differing coordinate decides; 0 sorts first.
      const int i = std::countr_zero(d);
      return ((wa[k] >> i) & 1u) == 0;
    }
  }
  return false;
}

F2Matrix::F2Matrix(std::vector<F2Vector> rows, std::size_t ncols)
    : rows_(std::move(rows)), ncols_(ncols) {
  for (const F2Vector& r : rows_)
    if (r.size() != ncols_) throw BadLength("F2Matrix: ragged rows");
}

F2Matrix::F2Matrix(std::vector<F2Vector> rows)
    : rows_(std::move(rows)), ncols_(rows_.empty() ? 0 : rows_[0].size()) {
  for (const F2Vector& r : rows_)
    if (r.size() != ncols_) throw BadLength("F2Matrix: ragged rows");
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Incremental xor-basis elimination. Each stored pivot row has a unique
// leading (lowest set) column, so reducing a new row strictly increases its
// leading index and terminates in at most ncols steps.
class Eliminator {
 public:
  explicit Eliminator(std::size_t ncols) : by_col_(ncols, npos) {}

  // Reduces `row` (and its combination tracker, when given) in place;
  // returns true if the row became zero, i.e. was dependent.
  bool insert(F2Vector& row, F2Vector* comb = nullptr) {
    for (;;) {
      const std::size_t lead = row.lowest_set();
      if (lead == row.size()) return true;
      const std::size_t slot = by_col_[lead];
      if (slot == npos) {
        by_col_[lead] = rows_.size();
        rows_.push_back(row);
        if (comb) combs_.push_back(*comb);
        return false;
      }
      row ^= rows_[slot];
      if (comb) *comb ^= combs_[slot];
    }
  }

  std::size_t pivot_count() const { return rows_.size(); }

 private:
  std::vector<std::size_t> by_col_;
  std::vector<F2Vector> rows_;
  std::vector<F2Vector> combs_;
};

}  // namespace

std::size_t rank(const F2Matrix& m) {
  Eliminator elim(m.ncols());
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    F2Vector row = m.row(i);
    elim.insert(row);
  }
  return elim.pivot_count();
}

std::optional<F2Vector> dependency_certificate(const F2Matrix& m) {
  Eliminator elim(m.ncols());
  for (std::size_t i = 0; i < m.nrows(); ++i) {
    F2Vector row = m.row(i);
    F2Vector comb(m.nrows());
    comb.set(i, true);
    if (elim.insert(row, &comb)) return comb;
  }
  return std::nullopt;
}

}  // namespace wpbc
