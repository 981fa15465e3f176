#include "hstrace/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace hstrace {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) out.at(i, j) += v * y.at(k, j);
    }
  return out;
}

Int determinant(IntMatrix m) {
  const std::size_t n = m.rows;
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

namespace {

struct Worker {
  IntMatrix& a;
  IntMatrix& u;  // row transform
  IntMatrix& v;  // column transform

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < a.cols; ++c) std::swap(a.at(i, c), a.at(j, c));
    for (std::size_t c = 0; c < u.cols; ++c) std::swap(u.at(i, c), u.at(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (std::size_t r = 0; r < v.rows; ++r) std::swap(v.at(r, i), v.at(r, j));
  }
  // row_dst += q * row_src
  void add_row(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(dst, c) += q * a.at(src, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(dst, c) += q * u.at(src, c);
  }
  void add_col(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t r = 0; r < a.rows; ++r) a.at(r, dst) += q * a.at(r, src);
    for (std::size_t r = 0; r < v.rows; ++r) v.at(r, dst) += q * v.at(r, src);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < a.cols; ++c) a.at(i, c) = -a.at(i, c);
    for (std::size_t c = 0; c < u.cols; ++c) u.at(i, c) = -u.at(i, c);
  }

  // Least nonzero |entry| in the submatrix at (s,s), or false if all zero.
  bool find_pivot(std::size_t s, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Int best;
    for (std::size_t i = s; i < a.rows; ++i)
      for (std::size_t j = s; j < a.cols; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (!found || ax < best) {
          found = true;
          best = std::move(ax);
          pi = i;
          pj = j;
        }
      }
    return found;
  }
};

}  // namespace

SmithResult smith_normal_form(IntMatrix m) {
  SmithResult res;
  res.left = IntMatrix::identity(m.rows);
  res.right = IntMatrix::identity(m.cols);
  Worker w{m, res.left, res.right};

  const std::size_t r = std::min(m.rows, m.cols);
  for (std::size_t s = 0; s < r; ++s) {
    std::size_t pi = s, pj = s;
    if (!w.find_pivot(s, pi, pj)) break;
    for (;;) {
      w.swap_rows(s, pi);
      w.swap_cols(s, pj);
      bool clean = true;
      for (std::size_t i = s + 1; i < m.rows; ++i) {
        if (m.at(i, s) == 0) continue;
        Int q = m.at(i, s) / m.at(s, s);
        w.add_row(i, s, -q);
        if (m.at(i, s) != 0) clean = false;
      }
      for (std::size_t j = s + 1; j < m.cols; ++j) {
        if (m.at(s, j) == 0) continue;
        Int q = m.at(s, j) / m.at(s, s);
        w.add_col(j, s, -q);
        if (m.at(s, j) != 0) clean = false;
      }
      if (!clean) {
        w.find_pivot(s, pi, pj);
        continue;
      }
      // force the pivot to divide the rest of the submatrix
      bool divides = true;
      for (std::size_t i = s + 1; i < m.rows && divides; ++i)
        for (std::size_t j = s + 1; j < m.cols && divides; ++j)
          if (m.at(i, j) % m.at(s, s) != 0) {
            w.add_row(s, i, 1);
            divides = false;
          }
      if (divides) break;
      w.find_pivot(s, pi, pj);
    }
    if (m.at(s, s) < 0) w.negate_row(s);
  }

  res.invariants.resize(r);
  for (std::size_t s = 0; s < r; ++s) res.invariants[s] = m.at(s, s);
  return res;
}

AbelianStructure cokernel_structure(const IntMatrix& relations) {
  SmithResult snf = smith_normal_form(relations);
  AbelianStructure out;
  std::size_t rank = 0;
  for (const Int& d : snf.invariants) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) out.torsion.push_back(d);
  }
  out.free_rank = relations.cols - rank;
  std::sort(out.torsion.begin(), out.torsion.end());
  return out;
}

}  // namespace hstrace
