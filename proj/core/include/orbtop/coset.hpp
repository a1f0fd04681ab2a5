#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbtop/words.hpp"

namespace orbtop {

// A finite presentation with 1-based generator indices 1..generator_count.
// Relators are stored cyclically reduced; empty relators are dropped at
// construction time and recorded as warnings (they present no constraint).
struct FinitePresentation {
  int generator_count = 0;
  std::vector<std::vector<int>> relators;  // letters +g / -g, g in 1..count
  std::vector<std::string> warnings;
};

// Validates letter ranges, cyclically reduces, drops empty relators.
// Letters are encoded as signed ints; 0 is invalid.
FinitePresentation make_presentation(int generator_count,
                                     const std::vector<Word>& relators);

// Built-in families (generators re-indexed 1-based where needed):
//   H(n): a_i, i in Z/n, with a_{i+1}^{-1} a_i a_{i+1} = a_i^2
//   B(n): a_1..a_{n+1} with a_{i+1}^{-1} a_i a_{i+1} = a_i^2
//   Bkilled(n): B(n) plus the relator a_{n+1}
FinitePresentation presentation_H(unsigned long n);
FinitePresentation presentation_B(unsigned long n);
FinitePresentation presentation_B_killed(unsigned long n);

// Text format: optional '#' comments; "gens <k>" then "rel <signed letters>"
// lines (e.g. "rel -2 +1 +2 -1 -1"). Throws ParseError.
FinitePresentation parse_presentation(const std::string& text);
std::string render_presentation(const FinitePresentation& p);

struct EnumerationResult {
  bool completed = false;        // false = Exhausted
  std::uint64_t index = 0;       // live cosets on completion = group order
  std::uint64_t total_defined = 0;  // every coset ever defined, dead or live
  std::vector<std::string> warnings;
};

// Todd-Coxeter enumeration of cosets of the trivial subgroup: HLT-style
// relator tracing with gap filling, immediate coincidence handling via
// union-find, deterministic define-in-first-gap numbering. The budget counts
// total cosets ever defined (including ones later identified), so Exhausted
// is deterministic. On completion the table is re-verified by a full scan.
EnumerationResult enumerate_cosets(const FinitePresentation& p,
                                   std::uint64_t max_cosets);

enum class CertifyStatus { Certified, NotTrivial, Exhausted };

struct CertifyResult {
  CertifyStatus status = CertifyStatus::Exhausted;
  std::uint64_t index = 0;  // meaningful when the enumeration completed
  std::uint64_t total_defined = 0;
  std::vector<std::string> warnings;
};

// Certified iff enumeration completes with index 1.
CertifyResult certify_trivial(const FinitePresentation& p,
                              std::uint64_t max_cosets);

}  // namespace orbtop
