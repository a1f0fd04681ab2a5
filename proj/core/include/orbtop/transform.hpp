#pragma once

#include "orbtop/function.hpp"
#include "orbtop/numbers.hpp"

namespace orbtop {

// Image of the bijection phi: N+ -> N+ x Z/4, phi(n) = (floor((n+3)/4), n mod 4).
// Residues of Z/4 are normalized to representatives 0..3.
struct PhiPair {
  Integer m;  // first component, >= 1
  int r;      // residue class mod 4, in 0..3
};

inline bool operator==(const PhiPair& a, const PhiPair& b) {
  return a.r == b.r && a.m == b.m;
}

PhiPair phi(const Integer& n);

// The unique n in {4m-3, ..., 4m} with n congruent to r mod 4.
Integer phi_inv(const Integer& m, int r);
inline Integer phi_inv(const PhiPair& p) { return phi_inv(p.m, p.r); }

// The hat transform: a handle evaluating phi^{-1} . f~ . phi, where
// f~(m, r) = (f(m), r+1) for m >= 2 and f~ fixes the m = 1 fibre. Concretely
// hat(f)(n) = n for n <= 4 and hat(f)(n) = phi_inv(f(m), r+1) for
// phi(n) = (m, r). Implemented as a wrapper, not a re-derived GCF.
FunctionHandle hat(const FunctionHandle& f);

}  // namespace orbtop
