#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>
#include <vector>

#include "weylpbc/symmetric_space.hpp"

namespace testutil {

inline wpbc::GVector gv(std::initializer_list<long long> xs) {
  wpbc::GVector g;
  for (long long x : xs) g.emplace_back(x);
  return g;
}

inline wpbc::F2Vector bits(std::string_view s) {
  return wpbc::F2Vector::from_string(s);
}

inline wpbc::RootDatum datum(std::size_t rank,
                             std::initializer_list<std::string_view> tab) {
  std::vector<wpbc::F2Vector> classes;
  for (std::string_view s : tab) classes.push_back(bits(s));
  return wpbc::validate(rank, std::move(classes));
}

// tab = all of F2^rank
inline wpbc::RootDatum full_datum(std::size_t rank) {
  std::vector<wpbc::F2Vector> classes;
  for (std::uint32_t x = 0; x < (1u << rank); ++x) {
    wpbc::F2Vector v(rank);
    for (std::size_t i = 0; i < rank; ++i)
      if ((x >> i) & 1u) v.set(i, true);
    classes.push_back(v);
  }
  return wpbc::validate(rank, std::move(classes));
}

// tab = {0} plus the standard basis
inline wpbc::RootDatum basis_datum(std::size_t rank) {
  std::vector<wpbc::F2Vector> classes;
  classes.push_back(wpbc::F2Vector(rank));
  for (std::size_t i = 0; i < rank; ++i) {
    wpbc::F2Vector e(rank);
    e.set(i, true);
    classes.push_back(e);
  }
  return wpbc::validate(rank, std::move(classes));
}

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
  long ival(long lo, long hi) {
    return lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  wpbc::GVector gvector(std::size_t n, long lo, long hi) {
    wpbc::GVector g(n);
    for (auto& x : g) x = wpbc::Int(ival(lo, hi));
    return g;
  }
  wpbc::F2Vector classvec(std::size_t n) {
    wpbc::F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (next(2)) v.set(i, true);
    return v;
  }
};

}  // namespace testutil
