#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "orbtop/complex.hpp"
#include "orbtop/function.hpp"
#include "orbtop/numbers.hpp"
#include "orbtop/snf.hpp"

namespace orbtop {

// H_d for d = 0, 1, 2: free rank plus torsion coefficients (each >= 2, each
// dividing the next). Exact; derived from Smith invariant factors.
struct HomologyGroups {
  std::array<std::size_t, 3> betti{0, 0, 0};
  std::array<std::vector<Integer>, 3> torsion;

  bool acyclic() const {
    return betti[0] == 1 && betti[1] == 0 && betti[2] == 0 &&
           torsion[0].empty() && torsion[1].empty() && torsion[2].empty();
  }
};

// Exact integer homology of a finite chain complex. Throws
// CompositionNonzero if boundary1 * boundary2 != 0 (a construction bug).
HomologyGroups homology(const ChainComplex& K);

// "H0 Z^1", "H1 Z^2 + Z/2 + Z/6", "H2 0" -- one line per degree d.
std::string format_homology_line(const HomologyGroups& h, std::size_t d);
std::string format_homology(const HomologyGroups& h);

// --- Streaming top-homology partial algorithm ---------------------------

// Boundary column of cell `index` as sparse (row label, coefficient) pairs.
// Row labels are arbitrary integers (vertex or generator indices).
using ColumnSource =
    std::function<std::vector<std::pair<Integer, Integer>>(std::uint64_t index)>;

// Nontrivial integer combination of boundary columns summing to zero:
// coefficients have gcd 1, keyed by cell index.
struct DependenceCertificate {
  std::map<std::uint64_t, Integer> coefficients;
};

struct TophResult {
  bool dependence_found = false;
  std::uint64_t cells_processed = 0;  // index at which the scan stopped
  DependenceCertificate certificate;  // meaningful iff dependence_found
};

// Feeds columns 1, 2, ... into an exact incremental rational elimination;
// stops at the first linear dependence (returning an integer certificate)
// or after max_cells independent columns.
TophResult toph_stream(const ColumnSource& source, std::uint64_t max_cells);

// Re-verifies a certificate by exact sparse multiply-accumulate.
bool verify_certificate(const ColumnSource& source,
                        const DependenceCertificate& cert);

// --- Finite connected component detection --------------------------------

struct ComponentResult {
  bool exceeded = false;
  std::vector<Integer> vertices;  // sorted; populated iff !exceeded
};

// Bidirectional closure of start_vertex in Gamma(f): neighbors of v_j are
// v_{f(j)} (j >= 2) and every v_k with k >= 2, f(k) = j. Stops with
// `exceeded` once the component is known to pass max_vertices vertices.
// Propagates InfinitePreimageRisk from the preimage computation.
ComponentResult finite_component(const FunctionHandle& f, const Integer& start,
                                 std::uint64_t max_vertices);

}  // namespace orbtop
