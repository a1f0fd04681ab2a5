#include "orbtop/homology.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "orbtop/errors.hpp"

namespace orbtop {

namespace {

// boundary1 * boundary2 over sparse columns; both stored column-major.
bool composition_is_zero(const SparseMatrix& b1, const SparseMatrix& b2) {
  for (std::size_t c = 0; c < b2.cols; ++c) {
    std::map<std::size_t, Integer> acc;
    for (const auto& [mid, coeff] : b2.columns[c])
      for (const auto& [row, v] : b1.columns[mid]) acc[row] += coeff * v;
    for (const auto& [row, v] : acc)
      if (sgn(v) != 0) return false;
  }
  return true;
}

std::vector<Integer> torsion_of(const std::vector<Integer>& factors) {
  std::vector<Integer> t;
  for (const Integer& d : factors)
    if (d > 1) t.push_back(d);
  return t;
}

}  // namespace

HomologyGroups homology(const ChainComplex& K) {
  if (!composition_is_zero(K.boundary1, K.boundary2)) throw CompositionNonzero();

  std::vector<Integer> f1 = smith_normal_form(Matrix::from_sparse(K.boundary1));
  std::vector<Integer> f2 = smith_normal_form(Matrix::from_sparse(K.boundary2));
  std::size_t n0 = K.basis0.size();
  std::size_t n1 = K.basis1.size();
  std::size_t n2 = K.basis2.size();
  std::size_t r1 = f1.size();
  std::size_t r2 = f2.size();

  HomologyGroups h;
  h.betti[0] = n0 - r1;
  h.torsion[0] = torsion_of(f1);
  h.betti[1] = n1 - r1 - r2;
  h.torsion[1] = torsion_of(f2);
  h.betti[2] = n2 - r2;  // kernel of boundary2 is free: no torsion in top degree
  return h;
}

std::string format_homology_line(const HomologyGroups& h, std::size_t d) {
  std::ostringstream out;
  out << 'H' << d << ' ';
  bool any = false;
  if (h.betti[d] > 0) {
    out << "Z^" << h.betti[d];
    any = true;
  }
  for (const Integer& t : h.torsion[d]) {
    if (any) out << " + ";
    out << "Z/" << t;
    any = true;
  }
  if (!any) out << '0';
  return out.str();
}

std::string format_homology(const HomologyGroups& h) {
  std::string out;
  for (std::size_t d = 0; d < 3; ++d) {
    out += format_homology_line(h, d);
    out += '\n';
  }
  return out;
}

// --- toph_stream ----------------------------------------------------------

namespace {

using SparseQ = std::map<Integer, Rational>;

void axpy(SparseQ& target, const Rational& scale, const SparseQ& src) {
  for (const auto& [row, v] : src) {
    Rational& slot = target[row];
    slot -= scale * v;
    if (sgn(slot) == 0) target.erase(row);
  }
}

struct BasisVector {
  SparseQ vec;                          // reduced column, pivot = smallest row
  std::map<std::uint64_t, Rational> comb;  // vec = sum comb[j] * column_j
};

}  // namespace

TophResult toph_stream(const ColumnSource& source, std::uint64_t max_cells) {
  TophResult result;
  std::map<Integer, BasisVector> basis;  // keyed by pivot row
  for (std::uint64_t index = 1; index <= max_cells; ++index) {
    SparseQ v;
    for (const auto& [row, coeff] : source(index))
      if (sgn(coeff) != 0) v[row] += Rational(coeff);
    for (auto it = v.begin(); it != v.end();)
      it = (sgn(it->second) == 0) ? v.erase(it) : std::next(it);
    std::map<std::uint64_t, Rational> comb;
    comb[index] = 1;

    // Eliminate by pivot rows; the candidate's smallest row strictly
    // increases each round, so this terminates.
    while (!v.empty()) {
      const Integer& lead = v.begin()->first;
      auto hit = basis.find(lead);
      if (hit == basis.end()) break;
      Rational scale = v.begin()->second / hit->second.vec.begin()->second;
      axpy(v, scale, hit->second.vec);
      for (const auto& [j, c] : hit->second.comb) {
        Rational& slot = comb[j];
        slot -= scale * c;
        if (sgn(slot) == 0) comb.erase(j);
      }
    }

    if (v.empty()) {
      // Dependence: sum comb[j] * column_j = 0 with comb[index] = 1.
      Integer lcm_den(1);
      for (const auto& [j, c] : comb)
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
                denominator(c).get_mpz_t());
      std::map<std::uint64_t, Integer> cleared;
      Integer g(0);
      for (const auto& [j, c] : comb) {
        Integer z = numerator(c) * (lcm_den / denominator(c));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
        cleared.emplace(j, std::move(z));
      }
      for (auto& [j, z] : cleared) z /= g;
      // Deterministic sign: make the smallest cell index positive.
      if (sgn(cleared.begin()->second) < 0)
        for (auto& [j, z] : cleared) mpz_neg(z.get_mpz_t(), z.get_mpz_t());
      result.dependence_found = true;
      result.cells_processed = index;
      result.certificate.coefficients = std::move(cleared);
      return result;
    }

    BasisVector b;
    b.vec = std::move(v);
    b.comb = std::move(comb);
    basis.emplace(b.vec.begin()->first, std::move(b));
  }
  result.dependence_found = false;
  result.cells_processed = max_cells;
  return result;
}

bool verify_certificate(const ColumnSource& source,
                        const DependenceCertificate& cert) {
  if (cert.coefficients.empty()) return false;
  std::map<Integer, Integer> acc;
  bool any_nonzero_coeff = false;
  for (const auto& [index, coeff] : cert.coefficients) {
    if (sgn(coeff) != 0) any_nonzero_coeff = true;
    for (const auto& [row, v] : source(index)) acc[row] += coeff * v;
  }
  if (!any_nonzero_coeff) return false;
  for (const auto& [row, v] : acc)
    if (sgn(v) != 0) return false;
  return true;
}

// --- finite_component -------------------------------------------------------

ComponentResult finite_component(const FunctionHandle& f, const Integer& start,
                                 std::uint64_t max_vertices) {
  if (start < 1)
    throw std::invalid_argument("finite_component: vertices are positive integers");
  ComponentResult result;
  std::set<Integer> seen{start};
  std::deque<Integer> frontier{start};
  while (!frontier.empty()) {
    if (seen.size() > max_vertices) {
      result.exceeded = true;
      return result;
    }
    Integer j = std::move(frontier.front());
    frontier.pop_front();
    std::vector<Integer> nbrs;
    if (j >= 2) nbrs.push_back(f(j));  // the edge e_{j-1} out of v_j
    for (Integer& k : f.preimage(j))
      if (k >= 2) nbrs.push_back(std::move(k));  // edges into v_j
    for (Integer& nb : nbrs)
      if (seen.insert(nb).second) frontier.push_back(std::move(nb));
  }
  if (seen.size() > max_vertices) {
    result.exceeded = true;
    return result;
  }
  result.vertices.assign(seen.begin(), seen.end());
  return result;
}

}  // namespace orbtop
