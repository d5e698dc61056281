#include <doctest.h>

#include <set>
#include <string>

#include "helpers.hpp"
#include "weylpbc/errors.hpp"
#include "weylpbc/lattice.hpp"

using namespace wpbc;
using testutil::bits;
using testutil::gv;

TEST_CASE("pair index is lexicographic") {
  CHECK(wedge_dim(4) == 6);
  CHECK(sym_dim(4) == 10);
  std::size_t k = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) CHECK(pair_index(i, j, 4) == k++);
}

TEST_CASE("wedge examples") {
  CHECK(wedge(gv({1, 0, 0}), gv({0, 1, 0})) == gv({1, 0, 0}));
  CHECK(wedge(gv({1, 2, 0}), gv({0, 1, 1})) == gv({1, 1, 2}));
  testutil::Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    const GVector g = rng.gvector(4, -9, 9);
    CHECK(wedge(g, g) == WedgeVector(wedge_dim(4)));
  }
  CHECK_THROWS_AS(wedge(gv({1, 0}), gv({1, 0, 0})), BadLength);
}

TEST_CASE("mod2 examples") {
  CHECK(mod2(gv({3, -2})) == bits("10"));
  CHECK(mod2(gv({0, 0, 0})) == bits("000"));
  testutil::Rng rng(8);
  for (int it = 0; it < 20; ++it) {
    const long k = rng.ival(-50, 50);
    CHECK(mod2(gv({2 * k, 2 * k + 1})) == bits("01"));
  }
}

TEST_CASE("sym square examples") {
  // the matrices (1 0;0 0) and (1 1;1 1)
  const SymTensor a = sym_square(bits("10"));
  CHECK(a.diag == bits("10"));
  CHECK(a.off == bits("0"));
  const SymTensor b = sym_square(bits("11"));
  CHECK(b.diag == bits("11"));
  CHECK(b.off == bits("1"));
  CHECK(sym_square(bits("00")).is_zero());
  CHECK(flatten(b) == bits("111"));
}

TEST_CASE("wedge embedding into sym tensors") {
  // image of the basis vector e0 ^ e1
  const SymTensor p = sym_of_wedge(bits("100"), 3);
  CHECK(p.diag == bits("000"));
  CHECK(p.off == bits("100"));
  CHECK(sym_of_wedge(bits("000"), 3).is_zero());
  testutil::Rng rng(9);
  for (int it = 0; it < 20; ++it) {
    const F2Vector w = rng.classvec(wedge_dim(4));
    CHECK(sym_of_wedge(w, 4).diag.is_zero());
  }
  CHECK_THROWS_AS(sym_of_wedge(bits("10"), 3), BadLength);
  // injectivity: the images of the wedge basis vectors are independent
  std::vector<F2Vector> rows;
  for (std::size_t k = 0; k < wedge_dim(4); ++k) {
    F2Vector e(wedge_dim(4));
    e.set(k, true);
    rows.push_back(flatten(sym_of_wedge(e, 4)));
  }
  CHECK(rank(F2Matrix(rows, sym_dim(4))) == wedge_dim(4));
}

TEST_CASE("square root homomorphism") {
  CHECK(sym_sqrt(sym_square(bits("101"))) == bits("101"));
  testutil::Rng rng(10);
  for (int it = 0; it < 20; ++it) {
    const F2Vector w = rng.classvec(wedge_dim(5));
    CHECK(sym_sqrt(sym_of_wedge(w, 5)) == bits("00000"));
  }
  CHECK(sym_sqrt(zero_sym(3)) == bits("000"));
}

TEST_CASE("pair map examples") {
  testutil::Rng rng(11);
  for (int it = 0; it < 20; ++it) {
    const F2Vector g = rng.classvec(4);
    CHECK(sym_of_pair(F2Vector(wedge_dim(4)), g) == sym_square(g));
    const F2Vector w = rng.classvec(wedge_dim(4));
    CHECK(sym_of_pair(w, F2Vector(4)) == sym_of_wedge(w, 4));
  }
}

TEST_CASE("pair map is a bijection at small rank") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::size_t wd = wedge_dim(n);
    const std::size_t total = std::size_t{1} << (wd + n);
    std::set<std::string> images;
    for (std::size_t code = 0; code < total; ++code) {
      F2Vector w(wd);
      F2Vector g(n);
      for (std::size_t k = 0; k < wd; ++k)
        if ((code >> k) & 1u) w.set(k, true);
      for (std::size_t i = 0; i < n; ++i)
        if ((code >> (wd + i)) & 1u) g.set(i, true);
      images.insert(flatten(sym_of_pair(w, g)).to_string());
      // sqrt recovers the vector component
      CHECK(sym_sqrt(sym_of_pair(w, g)) == g);
    }
    // injective, and the image is the whole sym space of dimension n(n+1)/2
    CHECK(images.size() == total);
    CHECK(total == std::size_t{1} << sym_dim(n));
  }
}

TEST_CASE("wedge over F2 matches the mod-2 integer wedge") {
  testutil::Rng rng(12);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 1 + rng.next(6);
    const GVector g = rng.gvector(n, -9, 9);
    const GVector h = rng.gvector(n, -9, 9);
    CHECK(mod2(wedge(g, h)) == wedge2(mod2(g), mod2(h)));
  }
}
