#include "weylpbc/lattice.hpp"

#include "weylpbc/errors.hpp"

namespace wpbc {

namespace {

void check_same_length(const std::vector<Int>& a, const std::vector<Int>& b,
                       const char* what) {
  if (a.size() != b.size()) throw BadLength(std::string(what) + ": length mismatch");
}

}  // namespace

GVector zero_gvector(std::size_t n) { return GVector(n); }

GVector add(const GVector& a, const GVector& b) {
  check_same_length(a, b, "add");
  GVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

GVector sub(const GVector& a, const GVector& b) {
  check_same_length(a, b, "sub");
  GVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

GVector negated(const GVector& a) {
  GVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

GVector scaled(const Int& k, const GVector& a) {
  GVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

WedgeVector wedge(const GVector& g, const GVector& h) {
  check_same_length(g, h, "wedge");
  const std::size_t n = g.size();
  WedgeVector r(wedge_dim(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k) r[k] = g[i] * h[j] - g[j] * h[i];
  return r;
}

F2Vector mod2(const std::vector<Int>& v) {
  F2Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] % 2 != 0) r.set(i, true);
  return r;
}

SymTensor zero_sym(std::size_t n) {
  return SymTensor{F2Vector(n), F2Vector(wedge_dim(n))};
}

F2Vector flatten(const SymTensor& s) {
  const std::size_t n = s.diag.size();
  F2Vector r(n + s.off.size());
  for (std::size_t i = 0; i < n; ++i) r.set(i, s.diag.get(i));
  for (std::size_t k = 0; k < s.off.size(); ++k) r.set(n + k, s.off.get(k));
  return r;
}

SymTensor sym_square(const F2Vector& cls) {
  const std::size_t n = cls.size();
  SymTensor s = zero_sym(n);
  s.diag = cls;
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if (cls.get(i) && cls.get(j)) s.off.set(k, true);
  return s;
}

SymTensor sym_of_wedge(const F2Vector& w, std::size_t n) {
  if (w.size() != wedge_dim(n)) throw BadLength("sym_of_wedge: length mismatch");
  return SymTensor{F2Vector(n), w};
}

F2Vector sym_sqrt(const SymTensor& s) { return s.diag; }

SymTensor sym_of_pair(const F2Vector& w, const F2Vector& cls) {
  return sym_of_wedge(w, cls.size()) ^ sym_square(cls);
}

F2Vector wedge2(const F2Vector& a, const F2Vector& b) {
  if (a.size() != b.size()) throw BadLength("wedge2: length mismatch");
  const std::size_t n = a.size();
  F2Vector r(wedge_dim(n));
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++k)
      if ((a.get(i) && b.get(j)) != (a.get(j) && b.get(i))) r.set(k, true);
  return r;
}

}  // namespace wpbc
