#pragma once

#include <cstddef>
#include <vector>

#include "orbtop/complex.hpp"
#include "orbtop/numbers.hpp"

namespace orbtop {

// Dense arbitrary-precision integer matrix, row-major.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Integer& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Integer& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix from_sparse(const SparseMatrix& s);
};

// Invariant factors d_1 | d_2 | ... | d_r of M (all >= 1, zero factors
// omitted), computed by unimodular row/column reduction with a
// minimal-absolute-value pivot rule. Exact over Z at any magnitude.
std::vector<Integer> smith_normal_form(Matrix M);

inline std::size_t rank_of(const std::vector<Integer>& invariant_factors) {
  return invariant_factors.size();
}

}  // namespace orbtop
