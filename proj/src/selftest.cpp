#include "weylpbc/selftest.hpp"

#include <functional>
#include <random>

#include "weylpbc/decision.hpp"
#include "weylpbc/io.hpp"
#include "weylpbc/weyl.hpp"

namespace wpbc {

namespace {

// Deterministic draws; plain modulo keeps the sequence identical across
// standard library implementations.
struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  std::uint64_t next(std::uint64_t bound) { return eng() % bound; }
  Int int_in(long lo, long hi) {
    return Int(lo + static_cast<long>(next(static_cast<std::uint64_t>(hi - lo + 1))));
  }
  GVector gvector(std::size_t n, long lo, long hi) {
    GVector g(n);
    for (auto& x : g) x = int_in(lo, hi);
    return g;
  }
  F2Vector classvec(std::size_t n) {
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
      if (next(2)) v.set(i, true);
    return v;
  }
};

bool dot2(const F2Vector& a, const F2Vector& b) {
  bool r = false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.get(i) && b.get(i)) r = !r;
  return r;
}

std::vector<F2Vector> random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    std::vector<F2Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(rng.classvec(n));
    if (rank(F2Matrix(rows, n)) == n) return rows;
  }
}

F2Vector apply_matrix(const std::vector<F2Vector>& rows, const F2Vector& v) {
  F2Vector out(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (dot2(rows[i], v)) out.set(i, true);
  return out;
}

// Random valid datum: basis plus a few extra classes, twisted by a random
// change of basis so the tab is not always echelon-shaped.
RootDatum random_datum(Rng& rng, std::size_t n) {
  std::vector<F2Vector> tab;
  tab.push_back(F2Vector(n));
  for (std::size_t i = 0; i < n; ++i) {
    F2Vector e(n);
    e.set(i, true);
    tab.push_back(e);
  }
  const std::size_t extras = rng.next(4);
  for (std::size_t k = 0; k < extras; ++k) {
    F2Vector v = rng.classvec(n);
    if (!v.is_zero()) tab.push_back(v);
  }
  const auto change = random_invertible(rng, n);
  for (auto& cls : tab) cls = apply_matrix(change, cls);
  return validate(n, std::move(tab));
}

// Integer lift of a random tab class, shifted inside its coset.
GVector random_root(Rng& rng, const RootDatum& d) {
  const F2Vector& cls = d.tab[rng.next(d.tab.size())];
  GVector t(d.rank);
  for (std::size_t i = 0; i < d.rank; ++i)
    t[i] = Int(cls.get(i)) + 2 * rng.int_in(-3, 3);
  return t;
}

WeylElement random_weyl(Rng& rng, std::size_t n) {
  WeylElement a;
  a.twist = rng.gvector(wedge_dim(n), -5, 5);
  a.trans = rng.gvector(n, -5, 5);
  a.sign = rng.next(2) ? 1 : -1;
  return a;
}

class Suite {
 public:
  explicit Suite(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (!ok && result_.failures.size() < 5) result_.failures.push_back(what);
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult smul_axioms(Rng& rng, std::uint64_t iters) {
  Suite s("smul-axioms");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(6);
    const GVector a = rng.gvector(n, -9, 9);
    const GVector b = rng.gvector(n, -9, 9);
    const GVector c = rng.gvector(n, -9, 9);
    s.check(smul(a, a) == a, "s.s = s");
    s.check(smul(a, smul(a, b)) == b, "s.(s.t) = t");
    s.check(smul(c, smul(a, b)) == smul(smul(c, a), smul(c, b)),
            "r.(s.t) = (r.s).(r.t)");
  }
  return s.take();
}

SuiteResult class_preservation(Rng& rng, std::uint64_t iters) {
  Suite s("class-preservation");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(5);
    const RootDatum d = random_datum(rng, n);
    const GVector t = random_root(rng, d);
    const GVector u = random_root(rng, d);
    s.check(mod2(smul(u, t)) == mod2(t), "mod2(s.t) = mod2(t)");
    s.check(contains(d, smul(u, t)), "roots closed under the multiplication");
  }
  return s.take();
}

SuiteResult wedge_bilinearity(Rng& rng, std::uint64_t iters) {
  Suite s("wedge-bilinearity");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(6);
    const GVector g = rng.gvector(n, -9, 9);
    const GVector g2 = rng.gvector(n, -9, 9);
    const GVector h = rng.gvector(n, -9, 9);
    s.check(wedge(add(g, g2), h) == add(wedge(g, h), wedge(g2, h)),
            "(g+g')^h = g^h + g'^h");
    s.check(wedge(g, h) == negated(wedge(h, g)), "g^h = -(h^g)");
    s.check(wedge(g, g) == WedgeVector(wedge_dim(n)), "g^g = 0");
  }
  return s.take();
}

SuiteResult sym_maps(Rng& rng, std::uint64_t iters) {
  Suite s("sym-maps");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(6);
    const F2Vector g = rng.classvec(n);
    const F2Vector h = rng.classvec(n);
    F2Vector w(wedge_dim(n));
    for (std::size_t k = 0; k < w.size(); ++k)
      if (rng.next(2)) w.set(k, true);
    const F2Vector w2(wedge_dim(n));
    s.check(sym_sqrt(sym_square(g)) == g, "sqrt(g x g) = g");
    s.check(sym_sqrt(sym_of_wedge(w, n)) == F2Vector(n), "sqrt vanishes on pi");
    s.check(sym_of_pair(w2, g) == sym_square(g), "phi(0,g) = g x g");
    // Heisenberg product over F2: (s,g)(t,h) = (s+t+g^h, g+h)
    const SymTensor lhs = sym_of_pair(w ^ wedge2(g, h), g ^ h);
    const SymTensor rhs = sym_of_pair(w, g) ^ sym_of_pair(F2Vector(wedge_dim(n)), h);
    s.check(lhs == rhs, "phi is a homomorphism");
  }
  return s.take();
}

SuiteResult weyl_group_laws(Rng& rng, std::uint64_t iters) {
  Suite s("weyl-group-laws");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(5);
    const WeylElement a = random_weyl(rng, n);
    const WeylElement b = random_weyl(rng, n);
    const WeylElement c = random_weyl(rng, n);
    const WeylElement id = identity_weyl(n);
    s.check(mul(mul(a, b), c) == mul(a, mul(b, c)), "associativity");
    s.check(mul(a, id) == a && mul(id, a) == a, "identity");
    s.check(mul(a, inverse(a)) == id && mul(inverse(a), a) == id, "inverse");
  }
  return s.take();
}

SuiteResult cocycle_consistency(Rng& rng, std::uint64_t iters) {
  Suite s("cocycle-consistency");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(5);
    const WeylElement a = random_weyl(rng, n);
    const WeylElement b = random_weyl(rng, n);
    // dropping the wedge part is a homomorphism onto A
    s.check(affine_part(mul(a, b)) == mul(affine_part(a), affine_part(b)),
            "W -> A projection");
    // the wedge increment of the product is exactly the cocycle g ^ (v g')
    const WeylElement ab = mul(a, b);
    const GVector vb = a.sign == 1 ? b.trans : negated(b.trans);
    s.check(ab.twist == add(add(a.twist, b.twist), wedge(a.trans, vb)),
            "cocycle term");
  }
  return s.take();
}

SuiteResult reflection_axioms_w(Rng& rng, std::uint64_t iters) {
  Suite s("reflection-axioms-w");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(5);
    const RootDatum d = random_datum(rng, n);
    const GVector t = random_root(rng, d);
    const GVector u = random_root(rng, d);
    const WeylElement rt = reflection(d, t);
    const WeylElement ru = reflection(d, u);
    s.check(act(d, rt, u) == smul(t, u), "t^W.s = t.s");
    s.check(mul(mul(rt, ru), inverse(rt)) == reflection(d, smul(t, u)),
            "conjugation relation");
    s.check(mul(rt, rt) == identity_weyl(n), "involution");
    s.check(act(d, rt, act(d, rt, u)) == u, "action is involutive");
  }
  return s.take();
}

SuiteResult reflection_axioms_wab(Rng& rng, std::uint64_t iters) {
  Suite s("reflection-axioms-wab");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(5);
    const RootDatum d = random_datum(rng, n);
    const F2Vector t = d.tab[rng.next(d.tab.size())];
    const F2Vector u = d.tab[rng.next(d.tab.size())];
    const WabElement rt{sym_square(t), -1};
    const WabElement ru{sym_square(u), -1};
    s.check(mul(rt, rt) == identity_wab(n), "involution");
    // abelianized conjugation: t s t^-1 = s and class(t.s) = class(s)
    const WabElement conj = mul(mul(rt, ru), rt);
    s.check(conj == ru, "conjugation relation");
    const GVector tl = random_root(rng, d);
    const GVector ul = random_root(rng, d);
    s.check(mod2(smul(tl, ul)) == mod2(ul), "class of t.s");
  }
  return s.take();
}

SuiteResult abelianization_square(Rng& rng, std::uint64_t iters) {
  Suite s("abelianization-square");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(4);
    const RootDatum d = random_datum(rng, n);
    const std::size_t len = rng.next(9);
    std::vector<GVector> word;
    std::vector<F2Vector> classes;
    for (std::size_t k = 0; k < len; ++k) {
      word.push_back(random_root(rng, d));
      classes.push_back(mod2(word.back()));
    }
    s.check(project_ab(eval_word(d, word)) == eval_word_ab(d, classes),
            "project_ab(eval_word) = eval_word_ab");
  }
  return s.take();
}

SuiteResult gadget_identity(Rng& rng, std::uint64_t iters) {
  Suite s("gadget-identity");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 2 + rng.next(4);  // ranks 2..5
    std::vector<F2Vector> tab;
    tab.push_back(F2Vector(n));
    for (std::size_t i = 0; i < n; ++i) {
      F2Vector e(n);
      e.set(i, true);
      tab.push_back(e);
    }
    const RootDatum d = validate(n, std::move(tab));
    const GVector a = rng.gvector(n, -5, 5);
    const GVector b = rng.gvector(n, -5, 5);
    const std::vector<GVector> word = {scaled(2, a), zero_gvector(n), scaled(2, b),
                                       add(scaled(2, a), scaled(2, b))};
    const WeylElement expect{scaled(4, wedge(a, b)), zero_gvector(n), +1};
    s.check(eval_word(d, word) == expect, "[2a,0,2b,2a+2b] = (4(a^b),0,+1)");
  }
  return s.take();
}

SuiteResult uab_evaluation(Rng& rng, std::uint64_t iters) {
  Suite s("uab-evaluation");
  for (std::uint64_t it = 0; it < iters; ++it) {
    const std::size_t n = 1 + rng.next(5);
    const RootDatum d = random_datum(rng, n);
    const std::size_t len = rng.next(9);
    std::vector<F2Vector> classes;
    for (std::size_t k = 0; k < len; ++k)
      classes.push_back(d.tab[rng.next(d.tab.size())]);
    const UabElement e = eval_word_initial(d, classes);
    s.check(e.sign == (len % 2 == 0 ? 1 : -1), "sign is word-length parity");
    // support = classes with odd multiplicity, zero excluded
    std::vector<F2Vector> odd;
    for (const F2Vector& cls : d.tab) {
      if (cls.is_zero()) continue;
      std::size_t count = 0;
      for (const F2Vector& c : classes)
        if (c == cls) ++count;
      if (count % 2) odd.push_back(cls);
    }
    s.check(e.support == odd, "support is odd-multiplicity classes");
  }
  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_property_suites(std::uint64_t seed, std::uint64_t iters) {
  using SuiteFn = SuiteResult (*)(Rng&, std::uint64_t);
  static constexpr SuiteFn suites[] = {
      smul_axioms,          class_preservation,     wedge_bilinearity,
      sym_maps,             weyl_group_laws,        cocycle_consistency,
      reflection_axioms_w,  reflection_axioms_wab,  abelianization_square,
      gadget_identity,      uab_evaluation,
  };
  std::vector<SuiteResult> results;
  std::uint64_t index = 0;
  for (SuiteFn fn : suites) {
    Rng rng(seed * 1000003 + index++);
    results.push_back(fn(rng, iters));
  }
  return results;
}

}  // namespace wpbc
