#pragma once

#include <cstddef>
#include <vector>

#include "hstrace/bigint.hpp"

namespace hstrace {

/// Dense integer matrix, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Int& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static IntMatrix identity(std::size_t n);

  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

/// Exact determinant by fraction-free (Bareiss) elimination. Square input.
Int determinant(IntMatrix m);

/// left * input * right = diag(invariants), with left and right unimodular.
/// invariants has length min(rows, cols), forms a divisibility chain
/// d1 | d2 | ..., is non-negative, zeros trailing.
struct SmithResult {
  std::vector<Int> invariants;
  IntMatrix left;
  IntMatrix right;
};

SmithResult smith_normal_form(IntMatrix m);

/// Structure of Z^cols modulo the row span of `relations`:
/// free rank plus the torsion coefficients (invariants > 1, ascending).
struct AbelianStructure {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;

  friend bool operator==(const AbelianStructure& x, const AbelianStructure& y) {
    return x.free_rank == y.free_rank && x.torsion == y.torsion;
  }
};

AbelianStructure cokernel_structure(const IntMatrix& relations);

}  // namespace hstrace
