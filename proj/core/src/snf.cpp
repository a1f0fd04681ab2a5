#include "orbtop/snf.hpp"

#include <cstdlib>

namespace orbtop {

Matrix Matrix::from_sparse(const SparseMatrix& s) {
  Matrix m(s.rows, s.cols);
  for (std::size_t c = 0; c < s.cols; ++c)
    for (const auto& [r, v] : s.columns[c]) m.at(r, c) = v;
  return m;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols; ++c)
    mpz_swap(m.at(a, c).get_mpz_t(), m.at(b, c).get_mpz_t());
}

void swap_cols(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < m.rows; ++r)
    mpz_swap(m.at(r, a).get_mpz_t(), m.at(r, b).get_mpz_t());
}

// row_a -= q * row_b (from column `from` on; earlier columns are zero).
void row_submul(Matrix& m, std::size_t a, std::size_t b, const Integer& q,
                std::size_t from) {
  for (std::size_t c = from; c < m.cols; ++c)
    mpz_submul(m.at(a, c).get_mpz_t(), q.get_mpz_t(), m.at(b, c).get_mpz_t());
}

void col_submul(Matrix& m, std::size_t a, std::size_t b, const Integer& q,
                std::size_t from) {
  for (std::size_t r = from; r < m.rows; ++r)
    mpz_submul(m.at(r, a).get_mpz_t(), q.get_mpz_t(), m.at(r, b).get_mpz_t());
}

// Smallest-|value| nonzero entry of the trailing submatrix, if any; early
// exit on a unit entry (no pivot can beat it).
bool find_pivot(const Matrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  Integer best;
  for (std::size_t r = t; r < m.rows; ++r) {
    for (std::size_t c = t; c < m.cols; ++c) {
      const Integer& v = m.at(r, c);
      if (sgn(v) == 0) continue;
      Integer av = abs(v);
      if (!found || av < best) {
        found = true;
        best = av;
        pr = r;
        pc = c;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<Integer> smith_normal_form(Matrix m) {
  std::vector<Integer> factors;
  std::size_t t = 0;
  Integer q, r;
  while (t < m.rows && t < m.cols) {
    std::size_t pr = t, pc = t;
    if (!find_pivot(m, t, pr, pc)) break;
    swap_rows(m, t, pr);
    swap_cols(m, t, pc);

    // Clear column t and row t. Whenever a remainder survives a division
    // step it is strictly smaller than the pivot; swapping it into the
    // pivot slot makes the loop terminate (|pivot| strictly decreases).
    for (;;) {
      bool restarted = false;
      for (std::size_t i = t + 1; i < m.rows && !restarted; ++i) {
        if (sgn(m.at(i, t)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), m.at(t, t).get_mpz_t());
        row_submul(m, i, t, q, t);
        if (sgn(m.at(i, t)) != 0) {
          swap_rows(m, t, i);
          restarted = true;
        }
      }
      if (restarted) continue;
      for (std::size_t j = t + 1; j < m.cols && !restarted; ++j) {
        if (sgn(m.at(t, j)) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        col_submul(m, j, t, q, t);
        if (sgn(m.at(t, j)) != 0) {
          swap_cols(m, t, j);
          restarted = true;
        }
      }
      if (!restarted) break;
    }

    // Divisibility: the pivot must divide every remaining entry. Folding a
    // bad row into row t reintroduces row-t entries, so redo the clearing.
    bool fixed = true;
    for (std::size_t i = t + 1; i < m.rows && fixed; ++i) {
      for (std::size_t j = t + 1; j < m.cols && fixed; ++j) {
        if (sgn(m.at(i, j)) == 0) continue;
        mpz_fdiv_r(r.get_mpz_t(), m.at(i, j).get_mpz_t(), m.at(t, t).get_mpz_t());
        if (sgn(r) != 0) {
          for (std::size_t c = t; c < m.cols; ++c)
            m.at(t, c) += m.at(i, c);
          fixed = false;
        }
      }
    }
    if (!fixed) continue;  // re-run pivoting at the same t

    if (sgn(m.at(t, t)) < 0) mpz_neg(m.at(t, t).get_mpz_t(), m.at(t, t).get_mpz_t());
    factors.push_back(m.at(t, t));
    ++t;
  }
  return factors;
}

}  // namespace orbtop
