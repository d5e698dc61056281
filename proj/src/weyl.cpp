#include "weylpbc/weyl.hpp"

#include <algorithm>
#include <string>

#include "weylpbc/errors.hpp"

namespace wpbc {

namespace {

void check_rank(const WeylElement& a, const WeylElement& b) {
  if (a.trans.size() != b.trans.size() || a.twist.size() != b.twist.size())
    throw BadLength("weyl mul: rank mismatch");
}

void check_sign(int v) {
  if (v != 1 && v != -1) throw Error("sign must be +1 or -1");
}

}  // namespace

WeylElement identity_weyl(std::size_t n) {
  return WeylElement{WedgeVector(wedge_dim(n)), GVector(n), +1};
}

bool is_identity(const WeylElement& a) {
  if (a.sign != +1) return false;
  for (const Int& x : a.twist)
    if (x != 0) return false;
  for (const Int& x : a.trans)
    if (x != 0) return false;
  return true;
}

WabElement identity_wab(std::size_t n) { return WabElement{zero_sym(n), +1}; }

WeylElement mul(const WeylElement& a, const WeylElement& b) {
  check_rank(a, b);
  check_sign(a.sign);
  check_sign(b.sign);
  const GVector vb = a.sign == 1 ? b.trans : negated(b.trans);
  WedgeVector twist = add(add(a.twist, b.twist), wedge(a.trans, vb));
  return WeylElement{std::move(twist), add(a.trans, vb), a.sign * b.sign};
}

WeylElement inverse(const WeylElement& a) {
  check_sign(a.sign);
  return WeylElement{negated(a.twist), scaled(-a.sign, a.trans), a.sign};
}

AffineElement mul(const AffineElement& a, const AffineElement& b) {
  const GVector vb = a.sign == 1 ? b.trans : negated(b.trans);
  return AffineElement{add(a.trans, vb), a.sign * b.sign};
}

WabElement mul(const WabElement& a, const WabElement& b) {
  return WabElement{a.sym ^ b.sym, a.sign * b.sign};
}

UabElement mul(const UabElement& a, const UabElement& b) {
  // Symmetric difference of two sorted supports.
  UabElement r;
  r.sign = a.sign * b.sign;
  std::size_t i = 0, j = 0;
  while (i < a.support.size() && j < b.support.size()) {
    if (a.support[i] == b.support[j]) {
      ++i;
      ++j;
    } else if (lex_less(a.support[i], b.support[j])) {
      r.support.push_back(a.support[i++]);
    } else {
      r.support.push_back(b.support[j++]);
    }
  }
  r.support.insert(r.support.end(), a.support.begin() + i, a.support.end());
  r.support.insert(r.support.end(), b.support.begin() + j, b.support.end());
  return r;
}

AffineElement affine_part(const WeylElement& a) {
  return AffineElement{a.trans, a.sign};
}

WabElement project_ab(const WeylElement& a) {
  return WabElement{sym_of_pair(mod2(a.twist), mod2(a.trans)), a.sign};
}

WeylElement reflection(const RootDatum& d, const GVector& t) {
  if (t.size() != d.rank) throw BadLength("reflection: length mismatch");
  if (!contains(d, t)) throw NotARoot("reflection: not a root of the datum");
  return WeylElement{WedgeVector(wedge_dim(d.rank)), t, -1};
}

namespace {

GVector affine_act(const GVector& g, int v, const GVector& t) {
  GVector r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) r[i] = 2 * g[i] + v * t[i];
  return r;
}

}  // namespace

GVector act(const RootDatum& d, const WeylElement& a, const GVector& t) {
  if (!contains(d, t)) throw NotARoot("act: not a root of the datum");
  return affine_act(a.trans, a.sign, t);
}

GVector act(const RootDatum& d, const AffineElement& a, const GVector& t) {
  if (!contains(d, t)) throw NotARoot("act: not a root of the datum");
  return affine_act(a.trans, a.sign, t);
}

WeylElement eval_word(const RootDatum& d, std::span<const GVector> word) {
  WeylElement acc = identity_weyl(d.rank);
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (word[k].size() != d.rank || !contains(d, word[k]))
      throw NotARoot("eval_word: letter " + std::to_string(k) + " is not a root", k);
    acc = mul(acc, WeylElement{WedgeVector(wedge_dim(d.rank)), word[k], -1});
  }
  return acc;
}

WabElement eval_word_ab(const RootDatum& d, std::span<const F2Vector> classes) {
  WabElement acc = identity_wab(d.rank);
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (!contains_class(d, classes[k]))
      throw NotARoot("eval_word_ab: letter " + std::to_string(k) + " is not a root", k);
    acc.sym ^= sym_square(classes[k]);
    acc.sign = -acc.sign;
  }
  return acc;
}

UabElement eval_word_initial(const RootDatum& d, std::span<const F2Vector> classes) {
  UabElement acc;
  for (std::size_t k = 0; k < classes.size(); ++k) {
    if (!contains_class(d, classes[k]))
      throw NotARoot("eval_word_initial: letter " + std::to_string(k) + " is not a root",
                     k);
    if (!classes[k].is_zero()) {
      UabElement letter;
      letter.support.push_back(classes[k]);
      letter.sign = -1;
      acc = mul(acc, letter);
    } else {
      acc.sign = -acc.sign;
    }
  }
  return acc;
}

}  // namespace wpbc
