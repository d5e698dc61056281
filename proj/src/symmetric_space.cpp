#include "weylpbc/symmetric_space.hpp"

#include <algorithm>

#include "weylpbc/errors.hpp"

namespace wpbc {

RootDatum validate(std::size_t rank, std::vector<F2Vector> raw_tab) {
  if (rank < 1) throw BadLength("validate: rank must be at least 1");
  for (const F2Vector& v : raw_tab)
    if (v.size() != rank) throw BadLength("validate: class length differs from rank");

  std::sort(raw_tab.begin(), raw_tab.end(), F2VectorLess{});
  raw_tab.erase(std::unique(raw_tab.begin(), raw_tab.end()), raw_tab.end());

  if (raw_tab.empty() || !raw_tab.front().is_zero())
    throw MissingZero("validate: the zero class is not in tab");
  if (wpbc::rank(F2Matrix(raw_tab, rank)) != rank)
    throw NotGenerating("validate: tab does not span F2^rank");

  return RootDatum{rank, std::move(raw_tab)};
}

GVector smul(const GVector& s, const GVector& t) {
  if (s.size() != t.size()) throw BadLength("smul: length mismatch");
  GVector r(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) r[i] = 2 * s[i] - t[i];
  return r;
}

bool contains_class(const RootDatum& d, const F2Vector& cls) {
  return cls.size() == d.rank &&
         std::binary_search(d.tab.begin(), d.tab.end(), cls, F2VectorLess{});
}

bool contains(const RootDatum& d, const GVector& t) {
  if (t.size() != d.rank) throw BadLength("contains: length mismatch");
  return contains_class(d, mod2(t));
}

}  // namespace wpbc
