#include "sdskit/matrix.hpp"

#include <random>
#include <stdexcept>

namespace sdskit {

bool IntMatrix::is_sign_matrix() const {
  for (int32_t v : a_)
    if (v != 1 && v != -1) return false;
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(n_);
  t.group = group;
  for (uint32_t r = 0; r < n_; ++r)
    for (uint32_t c = 0; c < n_; ++c) t.at(c, r) = at(r, c);
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("matrix order mismatch");
  const uint32_t n = a.order();
  IntMatrix c(n, 0);
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t k = 0; k < n; ++k) {
      int32_t v = a.at(i, k);
      if (v == 0) continue;
      for (uint32_t j = 0; j < n; ++j) c.at(i, j) += v * b.at(k, j);
    }
  return c;
}

IntMatrix char_matrix(const Group& g, const Block& b) {
  const uint32_t n = g.order();
  IntMatrix m(n);
  m.group = g.spec();
  for (uint32_t x = 0; x < n; ++x)
    for (uint32_t y = 0; y < n; ++y) m.at(x, y) = b.test(g.sub(y, x)) ? -1 : 1;
  return m;
}

IntMatrix r_matrix(const Group& g) {
  const uint32_t n = g.order();
  IntMatrix r(n, 0);
  r.group = g.spec();
  for (uint32_t x = 0; x < n; ++x) r.at(x, g.neg(x)) = 1;
  return r;
}

namespace {

bool shift_invariant(const Group& g, const IntMatrix& m, bool type2,
                     const TypeCheckOptions& opts) {
  if (m.order() != g.order()) throw std::invalid_argument("matrix/group order mismatch");
  const uint32_t n = g.order();
  auto check_z = [&](uint32_t z) {
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y) {
        uint32_t yy = type2 ? g.sub(y, z) : g.add(y, z);
        if (m.at(g.add(x, z), yy) != m.at(x, y)) return false;
      }
    return true;
  };
  if (n <= opts.exhaustive_bound) {
    for (uint32_t z = 0; z < n; ++z)
      if (!check_z(z)) return false;
    return true;
  }
  std::mt19937 rng(static_cast<uint32_t>(opts.seed));
  std::uniform_int_distribution<uint32_t> dist(0, n - 1);
  for (uint32_t s = 0; s < opts.samples; ++s)
    if (!check_z(dist(rng))) return false;
  return true;
}

}  // namespace

bool is_type1(const Group& g, const IntMatrix& m, TypeCheckOptions opts) {
  return shift_invariant(g, m, /*type2=*/false, opts);
}

bool is_type2(const Group& g, const IntMatrix& m, TypeCheckOptions opts) {
  return shift_invariant(g, m, /*type2=*/true, opts);
}

IntMatrix goethals_seidel(const IntMatrix& a1, const IntMatrix& a2,
                          const IntMatrix& a3, const IntMatrix& a4,
                          const IntMatrix& r) {
  const uint32_t n = a1.order();
  if (a2.order() != n || a3.order() != n || a4.order() != n || r.order() != n)
    throw std::invalid_argument("Goethals-Seidel inputs must share one order");

  const IntMatrix u = a1;
  const IntMatrix xr = multiply(a2, r);
  const IntMatrix yr = multiply(a3, r);
  const IntMatrix zr = multiply(a4, r);
  const IntMatrix xtr = multiply(a2.transposed(), r);
  const IntMatrix ytr = multiply(a3.transposed(), r);
  const IntMatrix ztr = multiply(a4.transposed(), r);

  IntMatrix h(4 * n);
  auto place = [&](uint32_t bi, uint32_t bj, const IntMatrix& m, int32_t sign) {
    for (uint32_t i = 0; i < n; ++i)
      for (uint32_t j = 0; j < n; ++j) h.at(bi * n + i, bj * n + j) = sign * m.at(i, j);
  };
  place(0, 0, u, 1);   place(0, 1, xr, 1);   place(0, 2, yr, 1);   place(0, 3, zr, 1);
  place(1, 0, xr, -1); place(1, 1, u, 1);    place(1, 2, ztr, -1); place(1, 3, ytr, 1);
  place(2, 0, yr, -1); place(2, 1, ztr, 1);  place(2, 2, u, 1);    place(2, 3, xtr, -1);
  place(3, 0, zr, -1); place(3, 1, ytr, -1); place(3, 2, xtr, 1);  place(3, 3, u, 1);
  return h;
}

bool is_hadamard(const IntMatrix& h) {
  if (!h.is_sign_matrix()) return false;
  const uint32_t n = h.order();
  for (uint32_t i = 0; i < n; ++i)
    for (uint32_t j = i; j < n; ++j) {
      int64_t dot = 0;
      for (uint32_t k = 0; k < n; ++k)
        dot += static_cast<int64_t>(h.at(i, k)) * h.at(j, k);
      if (dot != (i == j ? static_cast<int64_t>(n) : 0)) return false;
    }
  return true;
}

bool is_skew_type(const IntMatrix& h) {
  const uint32_t n = h.order();
  for (uint32_t i = 0; i < n; ++i) {
    if (h.at(i, i) != 1) return false;
    for (uint32_t j = i + 1; j < n; ++j)
      if (h.at(i, j) + h.at(j, i) != 0) return false;
  }
  return true;
}

bool amicable(const IntMatrix& x, const IntMatrix& y) {
  if (x.order() != y.order()) throw std::invalid_argument("matrix order mismatch");
  return multiply(x, y.transposed()) == multiply(y, x.transposed());
}

}  // namespace sdskit
