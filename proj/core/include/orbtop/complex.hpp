#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbtop/errors.hpp"
#include "orbtop/function.hpp"
#include "orbtop/numbers.hpp"
#include "orbtop/orbit.hpp"
#include "orbtop/words.hpp"

namespace orbtop {

enum class ComplexKind { P, Q, B, H };

std::string kind_name(ComplexKind k);

// A 2-cell of a presentation complex: its index, its cyclically reduced
// attaching word, and a flag for the degenerate Q(f) case (f(i) = i, i >= 2,
// whose relator reduces to the empty word; the cell is kept so that cell
// counts still match the natural indexing).
struct RelatorCell {
  Integer index;
  RelatorWord word;
  bool degenerate = false;
};

// A presentation 2-complex with one 0-cell, rule-based access to 1- and
// 2-cells, and no materialization of infinite structures. P(f) and Q(f)
// have cells indexed by the positive integers; B(n) has generators 1..n+1
// and cells 1..n; H(n) has generators and cells indexed 0..n-1.
class PresentationComplex {
 public:
  static PresentationComplex P(FunctionHandle f);
  static PresentationComplex Q(FunctionHandle f);
  static PresentationComplex B(unsigned long n);
  static PresentationComplex H(unsigned long n);

  ComplexKind kind() const { return kind_; }
  // "P collatz", "B 2", ... (kind plus parameter, as used in exports).
  std::string describe() const;

  bool finite() const { return kind_ == ComplexKind::B || kind_ == ComplexKind::H; }
  // Full index lists for the finite kinds (B/H); throws std::logic_error on
  // the lazy kinds.
  std::vector<Integer> generator_indices() const;
  std::vector<Integer> cell_indices() const;

  // The attaching data of 2-cell i. Bounds-checked for finite kinds.
  RelatorCell relator(const Integer& i) const;

  // Underlying function for P/Q kinds; throws std::logic_error otherwise.
  const FunctionHandle& function() const;
  unsigned long n() const;  // B/H kinds only

 private:
  PresentationComplex(ComplexKind kind, FunctionHandle f, unsigned long n)
      : kind_(kind), f_(std::move(f)), n_(n) {}

  ComplexKind kind_;
  FunctionHandle f_;  // P/Q only
  unsigned long n_ = 0;  // B/H only
};

// The graph Gamma(f): vertices v_i (i >= 1), one edge e_i per positive
// integer i with tail v_{i+1} and head v_{f(i+1)}.
class Graph {
 public:
  explicit Graph(FunctionHandle f) : f_(std::move(f)) {}
  const FunctionHandle& function() const { return f_; }
  // (tail, head) of edge e_i, i >= 1.
  std::pair<Integer, Integer> edge(const Integer& i) const;

 private:
  FunctionHandle f_;
};

Graph build_Gamma(FunctionHandle f);

// A finite f-closed set of positive integers, kept sorted and duplicate-free.
struct ClosedSet {
  std::vector<Integer> elements;
  bool contains(const Integer& x) const;
};

// Smallest f-closed superset of `seeds`: the union of their forward orbits,
// which is finite exactly when every orbit closes. Throws BudgetExceeded
// (no partial set) if some orbit fails to close within the budget.
ClosedSet orbit_closure(const FunctionHandle& f, const std::vector<Integer>& seeds,
                        const OrbitBudget& budget = {});

// Checks f(S) subseteq S; throws NotClosed with a witness otherwise.
void check_closed(const FunctionHandle& f, const ClosedSet& S);

// Column-major sparse integer matrix; rows per column sorted ascending.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> columns;
};

// Cellular chain complex of a finite truncation, degrees 0..2. For
// presentation complexes basis0 is the single 0-cell; for graphs basis2 is
// empty. boundary1: basis0 x basis1, boundary2: basis1 x basis2; entries of
// boundary2 are relator exponent sums.
struct ChainComplex {
  std::vector<std::string> basis0, basis1, basis2;
  SparseMatrix boundary1;
  SparseMatrix boundary2;
};

// Truncation of P(f)/Q(f) to an f-closed finite set S: 2-cells and 1-cells
// indexed by S. Throws NotClosed when S is not closed.
ChainComplex truncate(const PresentationComplex& X, const ClosedSet& S);
// Full truncation of the finite kinds B(n)/H(n).
ChainComplex truncate_full(const PresentationComplex& X);
// Graph truncation: vertices {v_i : i in S}, edges {e_{i-1} : i in S, i >= 2}.
// Requires f(i) in S for each i in S with i >= 2.
ChainComplex truncate(const Graph& G, const ClosedSet& S);

Integer euler_characteristic(const ChainComplex& K);

// Text export: header "complex <kind> <params>", then "gen <i>" lines for
// the generator slice, then "rel <i>: <signed letters>" lines (degenerate
// cells export an empty word). For lazy kinds the caller supplies the slice.
std::string export_complex(const PresentationComplex& X,
                           const std::vector<Integer>& cells);
// Header "graph Gamma <fn>", then "edge <i>: <tail> <head>" lines.
std::string export_graph(const Graph& G, const std::vector<Integer>& edges);

}  // namespace orbtop
