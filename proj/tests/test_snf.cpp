#include <doctest.h>

#include <functional>
#include <random>
#include <vector>

#include "orbtop/numbers.hpp"
#include "orbtop/snf.hpp"

using namespace orbtop;

namespace {

Matrix make(std::size_t r, std::size_t c, std::vector<long> entries) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < entries.size(); ++i) m.a[i] = entries[i];
  return m;
}

Integer det(const Matrix& m, const std::vector<std::size_t>& rows,
            const std::vector<std::size_t>& cols) {
  // Laplace expansion; fine for k <= 6.
  std::size_t k = rows.size();
  if (k == 0) return 1;
  if (k == 1) return m.at(rows[0], cols[0]);
  Integer sum = 0;
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < k; ++j) {
    if (m.at(rows[0], cols[j]) == 0) continue;
    std::vector<std::size_t> sub_cols;
    for (std::size_t t = 0; t < k; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Integer minor = det(m, sub_rows, sub_cols);
    if (j % 2 == 0)
      sum += m.at(rows[0], cols[j]) * minor;
    else
      sum -= m.at(rows[0], cols[j]) * minor;
  }
  return sum;
}

void subsets(std::size_t n, std::size_t k, std::size_t start,
             std::vector<std::size_t>& acc,
             const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (acc.size() == k) {
    fn(acc);
    return;
  }
  for (std::size_t i = start; i + (k - acc.size()) <= n; ++i) {
    acc.push_back(i);
    subsets(n, k, i + 1, acc, fn);
    acc.pop_back();
  }
}

// Invariant factors via determinant divisors: d_k = gcd of all k x k minors,
// factor_k = d_k / d_{k-1}.
std::vector<Integer> determinant_divisor_oracle(const Matrix& m) {
  std::vector<Integer> factors;
  Integer prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows, m.cols); ++k) {
    Integer g = 0;
    std::vector<std::size_t> racc, cacc;
    subsets(m.rows, k, 0, racc, [&](const std::vector<std::size_t>& rows) {
      subsets(m.cols, k, 0, cacc, [&](const std::vector<std::size_t>& cols) {
        Integer d = det(m, rows, cols);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (g == 0) break;  // all k x k minors vanish: rank < k
    factors.push_back(g / prev);
    prev = g;
  }
  return factors;
}

}  // namespace

TEST_SUITE_BEGIN("snf");

TEST_CASE("unimodular, diagonal, and zero matrices") {
  Matrix neg_i = make(3, 3, {-1, 0, 0, 0, -1, 0, 0, 0, -1});
  CHECK(smith_normal_form(neg_i) == std::vector<Integer>{1, 1, 1});

  Matrix diag = make(2, 2, {2, 0, 0, 3});
  CHECK(smith_normal_form(diag) == std::vector<Integer>{1, 6});

  Matrix zero(3, 2);
  CHECK(smith_normal_form(zero).empty());

  Matrix empty;
  CHECK(smith_normal_form(empty).empty());
}

TEST_CASE("rank deficiency and torsion") {
  // Rows are proportional: rank 1, content 2.
  CHECK(smith_normal_form(make(2, 2, {2, 4, 4, 8})) == std::vector<Integer>{2});
  // det = -2.
  CHECK(smith_normal_form(make(2, 2, {1, 2, 3, 4})) == std::vector<Integer>{1, 2});
  // Content 2, determinant 8: invariant factors (2, 4).
  CHECK(smith_normal_form(make(2, 2, {2, 4, 2, 8})) == std::vector<Integer>{2, 4});
  // Wide and tall shapes.
  CHECK(smith_normal_form(make(1, 3, {6, 10, 15})) == std::vector<Integer>{1});
  CHECK(smith_normal_form(make(3, 1, {4, 6, 0})) == std::vector<Integer>{2});
}

TEST_CASE("divisibility chain holds") {
  Matrix m = make(3, 3, {2, 0, 0, 0, 6, 0, 0, 0, 4});
  std::vector<Integer> f = smith_normal_form(m);
  REQUIRE(f.size() == 3);
  CHECK(f == std::vector<Integer>{2, 2, 12});
  for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
}

TEST_CASE("entries of large magnitude stay exact") {
  Integer huge = Integer(1) << 100;
  Matrix m(2, 2);
  m.at(0, 0) = huge;
  m.at(0, 1) = 0;
  m.at(1, 0) = 0;
  m.at(1, 1) = huge + 1;  // coprime to 2^100
  std::vector<Integer> f = smith_normal_form(m);
  REQUIRE(f.size() == 2);
  CHECK(f[0] == 1);
  CHECK(f[1] == huge * (huge + 1));
}

TEST_CASE("random matrices agree with the determinant-divisor oracle") {
  std::mt19937 rng(987654321);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m(6, 6);
    for (Integer& v : m.a) v = entry(rng);
    // A few singular cases: zero out a row or duplicate one.
    if (trial % 5 == 0)
      for (std::size_t j = 0; j < 6; ++j) m.at(3, j) = m.at(2, j);
    if (trial % 7 == 0)
      for (std::size_t j = 0; j < 6; ++j) m.at(5, j) = 0;
    CHECK(smith_normal_form(m) == determinant_divisor_oracle(m));
  }
}

TEST_CASE("from_sparse lays columns out by row index") {
  SparseMatrix s;
  s.rows = 3;
  s.cols = 2;
  s.columns = {{{0, Integer(5)}, {2, Integer(-1)}}, {}};
  Matrix m = Matrix::from_sparse(s);
  CHECK(m.at(0, 0) == 5);
  CHECK(m.at(2, 0) == -1);
  CHECK(m.at(1, 0) == 0);
  CHECK(m.at(0, 1) == 0);
  CHECK(smith_normal_form(m) == std::vector<Integer>{1});
}

TEST_SUITE_END();
