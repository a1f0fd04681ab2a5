#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "orbtop/complex.hpp"
#include "orbtop/coset.hpp"
#include "orbtop/numbers.hpp"

namespace orbtop {

// A finite abstract simplicial complex with string vertex labels. Faces of
// every inserted simplex are inserted automatically; simplices never repeat
// a vertex.
struct SimplicialComplex {
  std::set<std::string> vertices;
  std::set<std::array<std::string, 2>> edges;      // each sorted
  std::set<std::array<std::string, 3>> triangles;  // each sorted

  void add_vertex(const std::string& a);
  void add_edge(const std::string& a, const std::string& b);
  void add_triangle(const std::string& a, const std::string& b,
                    const std::string& c);
};

// A finite generator/relator slice of a presentation complex, the input of
// the simplicial conversion.
struct FiniteSlice {
  std::vector<Integer> generators;
  std::vector<RelatorCell> cells;
};

// Full slice of the finite kinds B(n)/H(n).
FiniteSlice full_slice(const PresentationComplex& X);
// Slice of P(f)/Q(f) over an f-closed set (cells and generators = S).
FiniteSlice closure_slice(const PresentationComplex& X, const ClosedSet& S);

// Second barycentric subdivision of the CW structure: every generator circle
// becomes the boundary of a square (vertices p, Q1, M, Q2); every 2-cell
// whose relator has length n is an n-gon contributing exactly 12n triangles.
// Subdivision vertices carry canonical labels derived from the cells they
// subdivide. Throws EmptyRelator on degenerate (empty-word) cells.
SimplicialComplex presentation_to_simplicial(const FiniteSlice& slice);

// Presentation of the fundamental group via a deterministic BFS spanning
// tree T (rooted at the smallest vertex label): generators are the non-tree
// edges, relators the triangle boundaries with tree edges deleted. Throws
// Disconnected with two witness vertices when K is not connected.
struct SimplicialPresentation {
  FinitePresentation presentation;
  // generator i (1-based) corresponds to generator_edges[i-1]
  std::vector<std::array<std::string, 2>> generator_edges;
  std::vector<std::array<std::string, 2>> tree_edges;
};

SimplicialPresentation simplicial_to_presentation(const SimplicialComplex& K);

Integer euler_characteristic(const SimplicialComplex& K);
Integer euler_characteristic(const FiniteSlice& slice);

// Oriented simplicial chain complex (vertices sorted by label; boundary of
// [a<b<c] is [b,c] - [a,c] + [a,b]).
ChainComplex simplicial_chain_complex(const SimplicialComplex& K);

// One-vertex chain complex of a finite presentation (degree-2 boundary =
// relator exponent sums); used for abelianization comparisons.
ChainComplex presentation_chain_complex(const FinitePresentation& p);

// Text format: one simplex per line -- "v <label>", "e <a> <b>",
// "t <a> <b> <c>". Labels are whitespace-free.
std::string export_simplicial(const SimplicialComplex& K);
SimplicialComplex parse_simplicial(const std::string& text);

}  // namespace orbtop
