#include "weylpbc/decision.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "weylpbc/errors.hpp"

namespace wpbc {

namespace {

std::vector<F2Vector> nonzero_classes(const RootDatum& d) {
  std::vector<F2Vector> out;
  out.reserve(d.tab.size());
  for (const F2Vector& cls : d.tab)
    if (!cls.is_zero()) out.push_back(cls);
  return out;
}

F2Matrix sym_square_matrix(const std::vector<F2Vector>& classes, std::size_t n) {
  std::vector<F2Vector> rows;
  rows.reserve(classes.size());
  for (const F2Vector& cls : classes) rows.push_back(flatten(sym_square(cls)));
  return F2Matrix(std::move(rows), sym_dim(n));
}

}  // namespace

Verdict decide(const RootDatum& d) {
  const std::vector<F2Vector> classes = nonzero_classes(d);
  Verdict v;
  v.cardinality = classes.size();
  v.rank_sym = rank(sym_square_matrix(classes, d.rank));
  v.independent = v.rank_sym == v.cardinality;
  v.iso = v.independent;
  return v;
}

Witness extract_witness(const RootDatum& d) {
  const std::vector<F2Vector> classes = nonzero_classes(d);
  const auto cert = dependency_certificate(sym_square_matrix(classes, d.rank));
  if (!cert) throw IsIndependent("extract_witness: the datum is 2-independent");

  Witness w;
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (cert->get(i)) w.dependency.push_back(classes[i]);
  w.pad_zero = w.dependency.size() % 2 == 1;
  w.kernel_element = UabElement{w.dependency, +1};
  return w;
}

namespace {

// Product of the reflections (0,t,-1) over the letters, no root checks.
WeylElement eval_reflections(const std::vector<GVector>& letters, std::size_t n) {
  WeylElement acc = identity_weyl(n);
  for (const GVector& t : letters)
    acc = mul(acc, WeylElement{WedgeVector(wedge_dim(n)), t, -1});
  return acc;
}

// The four-letter gadget [2a, 0, 2b, 2a+2b] multiplies by exactly
// (4(a^b), 0, +1); all four letters lie in the zero class.
std::vector<GVector> gadget(const GVector& a, const GVector& b) {
  const std::size_t n = a.size();
  std::vector<GVector> g;
  g.push_back(scaled(2, a));
  g.push_back(zero_gvector(n));
  g.push_back(scaled(2, b));
  g.push_back(add(scaled(2, a), scaled(2, b)));
  return g;
}

class WordSearch {
 public:
  WordSearch(const RootDatum& d, const Witness& w, std::uint64_t budget)
      : datum_(d), budget_(budget), rng_(0x5eed0f2ULL) {
    for (const F2Vector& cls : w.dependency) {
      GVector lift(d.rank);
      for (std::size_t i = 0; i < d.rank; ++i)
        if (cls.get(i)) lift[i] = 1;
      base_.push_back(std::move(lift));
    }
    if (w.pad_zero) base_.push_back(zero_gvector(d.rank));
    // per-candidate cost in elementary coordinate steps
    cost_ = static_cast<std::uint64_t>(base_.size()) *
                (d.rank + wedge_dim(d.rank) + 2) +
            d.rank;
    if (cost_ == 0) cost_ = 1;
  }

  std::optional<std::vector<GVector>> run() {
    const std::size_t m = base_.size();
    if (auto w = try_candidate(base_)) return w;
    // adjacent and general transpositions of the base order
    for (std::size_t i = 0; i < m && !exhausted_; ++i)
      for (std::size_t j = i + 1; j < m && !exhausted_; ++j) {
        std::vector<GVector> cand = base_;
        std::swap(cand[i], cand[j]);
        if (auto w = try_candidate(cand)) return w;
      }
    // single representative shifts by 2 e_u
    for (std::size_t i = 0; i < m && !exhausted_; ++i)
      for (std::size_t u = 0; u < datum_.rank && !exhausted_; ++u) {
        std::vector<GVector> cand = base_;
        cand[i][u] += 2;
        if (auto w = try_candidate(cand)) return w;
      }
    // randomized restarts: shuffled order, sometimes with one random shift
    std::uint64_t round = 0;
    while (!exhausted_) {
      ++round;
      std::vector<GVector> cand = base_;
      for (std::size_t k = m; k > 1; --k)
        std::swap(cand[k - 1], cand[rng_() % k]);
      if (round % 2 == 0) {
        const std::size_t i = rng_() % m;
        const std::size_t u = rng_() % datum_.rank;
        cand[i][u] += (rng_() % 2 == 0) ? 2 : -2;
      }
      if (auto w = try_candidate(cand)) return w;
    }
    return std::nullopt;
  }

 private:
  // Charges the candidate cost; evaluates the letters, absorbs the even
  // translation sum into letter 0 and, when the wedge residue is divisible
  // by 4, cancels it with gadgets and verifies the full word.
  std::optional<std::vector<GVector>> try_candidate(std::vector<GVector> letters) {
    if (budget_ < cost_) {
      exhausted_ = true;
      return std::nullopt;
    }
    budget_ -= cost_;

    const std::size_t n = datum_.rank;
    WeylElement first = eval_reflections(letters, n);
    // the translation sum is even and the sign is +1 for any realizing word
    letters[0] = sub(letters[0], first.trans);
    const WeylElement fixed = eval_reflections(letters, n);

    for (const Int& x : fixed.twist)
      if (x % 4 != 0) return std::nullopt;

    std::vector<GVector> word = std::move(letters);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j, ++k) {
        const Int c = -fixed.twist[k] / 4;
        if (c == 0) continue;
        GVector a = zero_gvector(n);
        GVector b = zero_gvector(n);
        a[i] = c;
        b[j] = 1;
        for (auto& letter : gadget(a, b)) word.push_back(std::move(letter));
      }

    if (!is_identity(eval_word(datum_, word))) return std::nullopt;
    return word;
  }

  const RootDatum& datum_;
  std::vector<GVector> base_;
  std::uint64_t budget_;
  std::uint64_t cost_;
  bool exhausted_ = false;
  std::mt19937_64 rng_;
};

void check_witness(const RootDatum& d, const Witness& w) {
  if (w.dependency.empty())
    throw InvalidWitness("find_identity_word: empty dependency");
  SymTensor acc = zero_sym(d.rank);
  for (std::size_t i = 0; i < w.dependency.size(); ++i) {
    const F2Vector& cls = w.dependency[i];
    if (cls.size() != d.rank || cls.is_zero() || !contains_class(d, cls))
      throw InvalidWitness("find_identity_word: dependency class not in tab\\{0}");
    if (i > 0 && !lex_less(w.dependency[i - 1], cls))
      throw InvalidWitness("find_identity_word: dependency not sorted and distinct");
    acc ^= sym_square(cls);
  }
  if (!acc.is_zero())
    throw InvalidWitness("find_identity_word: sym-squares do not cancel");
  if (w.pad_zero != (w.dependency.size() % 2 == 1))
    throw InvalidWitness("find_identity_word: pad flag does not match parity");
  if (w.kernel_element.sign != +1 || w.kernel_element.support != w.dependency)
    throw InvalidWitness("find_identity_word: kernel element does not match");
}

}  // namespace

std::optional<std::vector<GVector>> find_identity_word(const RootDatum& d,
                                                       const Witness& w,
                                                       std::uint64_t budget) {
  check_witness(d, w);
  WordSearch search(d, w, budget);
  auto word = search.run();
  if (word) {
    // the word must realize the kernel element of the initial group
    std::vector<F2Vector> classes;
    classes.reserve(word->size());
    for (const GVector& t : *word) classes.push_back(mod2(t));
    if (eval_word_initial(d, classes) != w.kernel_element)
      throw Error("find_identity_word: verification failed");
  }
  return word;
}

namespace {

// Mask representation for small-rank enumeration: bit b set <=> the class
// of bitstring-lex rank b+1 is in tab (rank 0, the zero class, is implicit).
// Rank r <-> bitstring with character i = bit (n-1-i) of r, so rank order
// equals bitstring order.

F2Vector class_of_lex_rank(std::uint32_t r, std::size_t n) {
  F2Vector v(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((r >> (n - 1 - i)) & 1u) v.set(i, true);
  return v;
}

// Sorted-list lexicographic order on element sets encoded as masks: the
// lowest differing element decides; a shared proper prefix sorts first.
bool mask_list_less(std::uint64_t x, std::uint64_t y) {
  const std::uint64_t diff = x ^ y;
  if (diff == 0) return false;
  const int k = std::countr_zero(diff);
  const std::uint64_t above = ~((std::uint64_t{2} << k) - 1);
  if ((x >> k) & 1u) return (y & above) != 0;
  return (x & above) == 0;
}

// Greedy xor basis over n-bit integers; each kept element ends up with a
// distinct highest set bit, so one min-reduction pass per insert suffices.
struct SmallBasis {
  std::uint32_t elems[8] = {};
  std::size_t count = 0;
  bool insert(std::uint32_t v) {
    for (std::size_t k = 0; k < count; ++k) v = std::min(v, v ^ elems[k]);
    if (v == 0) return false;
    elems[count++] = v;
    return true;
  }
};

bool mask_spans(std::uint64_t mask, std::size_t n) {
  SmallBasis basis;
  for (int b = 0; mask != 0; ++b, mask >>= 1) {
    if (!(mask & 1u)) continue;
    basis.insert(static_cast<std::uint32_t>(b) + 1);
    if (basis.count == n) return true;
  }
  return basis.count == n;
}

RootDatum datum_of_mask(std::uint64_t mask, std::size_t n) {
  std::vector<F2Vector> tab;
  tab.push_back(F2Vector(n));
  for (std::uint32_t b = 0; b < (1u << n) - 1; ++b)
    if ((mask >> b) & 1u) tab.push_back(class_of_lex_rank(b + 1, n));
  return RootDatum{n, std::move(tab)};
}

// All of GL(n,F2) as permutations of the nonzero lex ranks.
std::vector<std::vector<std::uint8_t>> gl_permutations(std::size_t n) {
  const std::uint32_t m = 1u << n;  // vectors as n-bit ints, rank convention
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint32_t> rows(n);
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      rows[i] = static_cast<std::uint32_t>(c & (m - 1));
      c >>= n;
    }
    SmallBasis basis;
    bool invertible = true;
    for (std::size_t i = 0; i < n; ++i)
      if (!basis.insert(rows[i])) {
        invertible = false;
        break;
      }
    if (!invertible) continue;
    // perm over nonzero ranks: (A x)_i = parity(rows[i] & x)
    std::vector<std::uint8_t> perm(m - 1);
    for (std::uint32_t x = 1; x < m; ++x) {
      std::uint32_t y = 0;
      for (std::size_t i = 0; i < n; ++i)
        y = (y << 1) | (std::popcount(rows[i] & x) & 1);
      perm[x - 1] = static_cast<std::uint8_t>(y);
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::uint64_t apply_perm(const std::vector<std::uint8_t>& perm, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (int b = 0; mask != 0; ++b, mask >>= 1)
    if (mask & 1u) out |= std::uint64_t{1} << (perm[b] - 1);
  return out;
}

}  // namespace

std::vector<std::pair<RootDatum, Verdict>> enumerate_data(std::size_t rank,
                                                          EnumerateOptions opts) {
  if (rank < 1) throw BadLength("enumerate: rank must be at least 1");
  const std::size_t guard = opts.allow_large && !opts.up_to_gl ? 5 : 4;
  if (rank > guard)
    throw RankTooLarge("enumerate: rank " + std::to_string(rank) +
                       " exceeds the enumeration guard");

  const std::size_t nbits = (std::size_t{1} << rank) - 1;
  const std::uint64_t total = std::uint64_t{1} << nbits;

  std::vector<std::uint64_t> masks;
  if (!opts.up_to_gl) {
    for (std::uint64_t mask = 0; mask < total; ++mask)
      if (mask_spans(mask, rank)) masks.push_back(mask);
  } else {
    const auto perms = gl_permutations(rank);
    std::vector<bool> visited(total, false);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      if (visited[mask] || !mask_spans(mask, rank)) continue;
      std::uint64_t best = mask;
      for (const auto& perm : perms) {
        const std::uint64_t img = apply_perm(perm, mask);
        visited[img] = true;
        if (mask_list_less(img, best)) best = img;
      }
      masks.push_back(best);
    }
  }
  std::sort(masks.begin(), masks.end(), mask_list_less);

  std::vector<std::pair<RootDatum, Verdict>> out;
  out.reserve(masks.size());
  for (std::uint64_t mask : masks) {
    RootDatum d = datum_of_mask(mask, rank);
    Verdict v = decide(d);
    out.emplace_back(std::move(d), v);
  }
  return out;
}

}  // namespace wpbc
