#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "oracles.hpp"
#include "weylpbc/decision.hpp"
#include "weylpbc/errors.hpp"

using namespace wpbc;
using testutil::basis_datum;
using testutil::bits;
using testutil::datum;
using testutil::full_datum;

namespace {

bool dot2(const F2Vector& a, const F2Vector& b) {
  bool r = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.get(i) && b.get(i)) r = !r;
  return r;
}

RootDatum transform(testutil::Rng& rng, const RootDatum& d) {
  std::vector<F2Vector> rows;
  do {
    rows.clear();
    for (std::size_t i = 0; i < d.rank; ++i) rows.push_back(rng.classvec(d.rank));
  } while (rank(F2Matrix(rows, d.rank)) != d.rank);
  std::vector<F2Vector> tab;
  for (const F2Vector& cls : d.tab) {
    F2Vector img(d.rank);
    for (std::size_t i = 0; i < d.rank; ++i)
      if (dot2(rows[i], cls)) img.set(i, true);
    tab.push_back(img);
  }
  return validate(d.rank, std::move(tab));
}

RootDatum random_datum(testutil::Rng& rng, std::size_t n, std::size_t max_card) {
  std::vector<F2Vector> tab;
  tab.push_back(F2Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    F2Vector e(n);
    e.set(i, true);
    tab.push_back(e);
  }
  while (tab.size() < max_card + 1) {
    const F2Vector v = rng.classvec(n);
    if (!v.is_zero()) tab.push_back(v);
  }
  return transform(rng, validate(n, std::move(tab)));
}

bool oracle_datum_dependent(const RootDatum& d) {
  std::vector<std::vector<int>> rows;
  for (const F2Vector& cls : d.tab) {
    if (cls.is_zero()) continue;
    std::vector<int> v(d.rank);
    for (std::size_t i = 0; i < d.rank; ++i) v[i] = cls.get(i);
    rows.push_back(testutil::oracle_sym_flat(v));
  }
  return testutil::oracle_dependent(rows);
}

bool tab_list_less(const std::vector<F2Vector>& a, const std::vector<F2Vector>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      F2VectorLess{});
}

}  // namespace

TEST_CASE("decide examples") {
  const Verdict v2 = decide(full_datum(2));
  CHECK(v2.independent);
  CHECK(v2.iso);
  CHECK(v2.cardinality == 3);
  CHECK(v2.rank_sym == 3);

  const Verdict v3 = decide(full_datum(3));
  CHECK_FALSE(v3.independent);
  CHECK_FALSE(v3.iso);
  CHECK(v3.cardinality == 7);
  CHECK(v3.rank_sym == 6);

  for (std::size_t n = 1; n <= 8; ++n) {
    const Verdict v = decide(basis_datum(n));
    CHECK(v.independent);
    CHECK(v.cardinality == n);
  }
}

TEST_CASE("witness extraction") {
  const RootDatum d = full_datum(3);
  const Witness w = extract_witness(d);
  CHECK(w.dependency == std::vector<F2Vector>(d.tab.begin() + 1, d.tab.end()));
  CHECK(w.pad_zero);
  CHECK(w.kernel_element.sign == 1);
  CHECK(w.kernel_element.support == w.dependency);
  CHECK_FALSE(w.word_in_w.has_value());

  // deterministic
  const Witness again = extract_witness(d);
  CHECK(again.dependency == w.dependency);

  // the sym-squares over the dependency cancel exactly
  SymTensor acc = zero_sym(3);
  for (const F2Vector& cls : w.dependency) acc ^= sym_square(cls);
  CHECK(acc.is_zero());

  CHECK_THROWS_AS(extract_witness(full_datum(2)), IsIndependent);

  // first dependency in elimination order for the full rank-4 datum: the
  // embedded rank-3 dependency on the last three coordinates
  const Witness w4 = extract_witness(full_datum(4));
  CHECK(w4.dependency ==
        std::vector<F2Vector>{bits("0001"), bits("0010"), bits("0011"),
                              bits("0100"), bits("0101"), bits("0110"),
                              bits("0111")});
}

TEST_CASE("decide is GL invariant") {
  testutil::Rng rng(41);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 2 + rng.next(4);
    const RootDatum d = random_datum(rng, n, n + rng.next(6));
    const RootDatum e = transform(rng, d);
    CHECK(decide(d).independent == decide(e).independent);
  }
}

TEST_CASE("monotonicity") {
  testutil::Rng rng(42);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 3 + rng.next(2);
    const RootDatum d = random_datum(rng, n, n + rng.next(8));
    const Verdict v = decide(d);
    // superset of a dependent datum stays dependent
    if (!v.independent) {
      std::vector<F2Vector> bigger = d.tab;
      const F2Vector extra = rng.classvec(n);
      bigger.push_back(extra);
      CHECK_FALSE(decide(validate(n, bigger)).independent);
    } else {
      // subset of an independent datum stays independent (when still valid)
      std::vector<F2Vector> smaller = d.tab;
      smaller.erase(smaller.begin() + 1 + rng.next(smaller.size() - 1));
      if (rank(F2Matrix(smaller, n)) == n)
        CHECK(decide(validate(n, smaller)).independent);
    }
  }
}

TEST_CASE("decide agrees with the exhaustive oracle") {
  testutil::Rng rng(43);
  for (int it = 0; it < 60; ++it) {
    const std::size_t n = 2 + rng.next(4);
    const RootDatum d = random_datum(rng, n, n + rng.next(7));
    REQUIRE(d.tab.size() <= 13);
    CHECK(decide(d).independent == !oracle_datum_dependent(d));
  }
}

TEST_CASE("independent data respect the dimension bound") {
  testutil::Rng rng(44);
  for (int it = 0; it < 40; ++it) {
    const std::size_t n = 2 + rng.next(3);
    const RootDatum d = random_datum(rng, n, 2 * n + rng.next(5));
    const Verdict v = decide(d);
    if (v.independent) CHECK(v.cardinality <= sym_dim(n));
    if (v.cardinality > sym_dim(n)) CHECK_FALSE(v.independent);
  }
}

TEST_CASE("identity word search on the full rank-3 datum") {
  const RootDatum d = full_datum(3);
  const Witness w = extract_witness(d);

  CHECK_FALSE(find_identity_word(d, w, 0).has_value());

  const auto word = find_identity_word(d, w, 1000000);
  REQUIRE(word.has_value());
  CHECK(is_identity(eval_word(d, *word)));

  std::vector<F2Vector> classes;
  for (const GVector& t : *word) classes.push_back(mod2(t));
  const UabElement u = eval_word_initial(d, classes);
  CHECK(u == w.kernel_element);
  CHECK_FALSE(u.is_identity());
  const WabElement ab = eval_word_ab(d, classes);
  CHECK(ab.sym.is_zero());
  CHECK(ab.sign == 1);

  // deterministic across calls
  const auto again = find_identity_word(d, w, 1000000);
  REQUIRE(again.has_value());
  CHECK(*again == *word);
}

TEST_CASE("identity word search rejects invalid witnesses") {
  const RootDatum d = full_datum(3);
  Witness w = extract_witness(d);

  Witness empty = w;
  empty.dependency.clear();
  empty.kernel_element.support.clear();
  CHECK_THROWS_AS(find_identity_word(d, empty, 1000), InvalidWitness);

  Witness badpad = w;
  badpad.pad_zero = !badpad.pad_zero;
  CHECK_THROWS_AS(find_identity_word(d, badpad, 1000), InvalidWitness);

  Witness badsign = w;
  badsign.kernel_element.sign = -1;
  CHECK_THROWS_AS(find_identity_word(d, badsign, 1000), InvalidWitness);

  Witness offdatum = w;
  offdatum.dependency.pop_back();
  offdatum.kernel_element.support = offdatum.dependency;
  CHECK_THROWS_AS(find_identity_word(d, offdatum, 1000), InvalidWitness);
}

TEST_CASE("identity word search contract on random dependent data") {
  testutil::Rng rng(45);
  int found = 0;
  for (int it = 0; it < 10; ++it) {
    const std::size_t n = 3 + rng.next(2);
    const RootDatum d = random_datum(rng, n, sym_dim(n) + 1 + rng.next(3));
    if (decide(d).independent) continue;
    const Witness w = extract_witness(d);
    const auto word = find_identity_word(d, w, 400000);
    if (!word) continue;
    ++found;
    CHECK(is_identity(eval_word(d, *word)));
    std::vector<F2Vector> classes;
    for (const GVector& t : *word) classes.push_back(mod2(t));
    CHECK(eval_word_initial(d, classes) == w.kernel_element);
  }
  CHECK(found > 0);
}

TEST_CASE("enumerate small ranks") {
  const auto one = enumerate_data(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].first.tab == std::vector<F2Vector>{bits("0"), bits("1")});
  CHECK(one[0].second.iso);

  const auto two = enumerate_data(2);
  CHECK(two.size() == 4);
  for (const auto& [d, v] : two) CHECK(v.iso);

  const auto three = enumerate_data(3);
  CHECK(three.size() == 92);
  std::size_t iso = 0;
  for (const auto& [d, v] : three) {
    if (v.iso) ++iso;
    if (v.cardinality > sym_dim(3)) CHECK_FALSE(v.iso);
  }
  CHECK(iso == 91);

  // output is sorted in list-lexicographic tab order
  for (std::size_t i = 1; i < three.size(); ++i)
    CHECK(tab_list_less(three[i - 1].first.tab, three[i].first.tab));

  const auto four = enumerate_data(4);
  CHECK(four.size() == 31232);
  iso = 0;
  for (const auto& [d, v] : four) {
    if (v.iso) ++iso;
    if (v.cardinality > sym_dim(4)) CHECK_FALSE(v.iso);
  }
  CHECK(iso == 27476);
}

TEST_CASE("enumerate up to GL orbits") {
  const auto two = enumerate_data(2, {.up_to_gl = true});
  REQUIRE(two.size() == 2);
  CHECK(two[0].first.tab ==
        std::vector<F2Vector>{bits("00"), bits("01"), bits("10")});
  CHECK(two[1].first.tab ==
        std::vector<F2Vector>{bits("00"), bits("01"), bits("10"), bits("11")});

  const auto three = enumerate_data(3, {.up_to_gl = true});
  CHECK(three.size() == 6);
  std::size_t iso = 0;
  for (const auto& [d, v] : three)
    if (v.iso) ++iso;
  CHECK(iso == 5);

  const auto four = enumerate_data(4, {.up_to_gl = true});
  CHECK(four.size() == 36);
  iso = 0;
  for (const auto& [d, v] : four)
    if (v.iso) ++iso;
  CHECK(iso == 22);
}

TEST_CASE("enumerate guard") {
  CHECK_THROWS_AS(enumerate_data(5), RankTooLarge);
  CHECK_THROWS_AS(enumerate_data(5, {.up_to_gl = true, .allow_large = true}),
                  RankTooLarge);
  CHECK_THROWS_AS(enumerate_data(6, {.up_to_gl = false, .allow_large = true}),
                  RankTooLarge);
}
