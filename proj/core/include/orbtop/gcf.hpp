#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbtop/errors.hpp"
#include "orbtop/numbers.hpp"

namespace orbtop {

// One affine branch g(x) = a*x + b, applied on a residue class.
struct GcfBranch {
  Rational a;
  Rational b;
};

// A generalized Collatz function: modulus m and one branch per residue
// 0..m-1. Residue representatives are 0-based; inputs are positive integers.
struct Gcf {
  unsigned long modulus = 0;
  std::vector<GcfBranch> branches;  // branches[i] applies when x = i (mod m)
  std::string name;

  bool operator==(const Gcf& other) const {
    return modulus == other.modulus && branches.size() == other.branches.size() &&
           [&] {
             for (std::size_t i = 0; i < branches.size(); ++i)
               if (branches[i].a != other.branches[i].a ||
                   branches[i].b != other.branches[i].b)
                 return false;
             return true;
           }();
  }
};

// m=2, a0=1/2, b0=0, a1=3, b1=1.
Gcf collatz_gcf();
// m=1, a0=1, b0=1.
Gcf successor_gcf();

// DSL: '#' comments; declarations separated by newlines or ';'.
//   mod <m>
//   <i>: <coeff>x + <const>
// where <coeff>/<const> are integers or (p/q) rationals; the coefficient may
// be omitted (meaning 1); the constant term may be omitted (meaning 0).
Gcf parse_gcf(const std::string& text, const std::string& name = "");

// Renders back to DSL text; parse_gcf(render_gcf(g)) == g.
std::string render_gcf(const Gcf& g);

struct ValidationReport {
  bool accepted = false;
  std::string reason;                // empty iff accepted
  int residue = -1;                  // offending branch, if any
  std::optional<Integer> witness;    // concrete x with g(x) outside N+
  std::optional<Rational> value_at_witness;
};

// Checks that g maps every positive integer to a positive integer:
// integrality over one full period of each residue class and positivity on
// the finitely many inputs where a_i*x + b_i could be < 1. Branches with
// a_i < 0 are rejected outright.
ValidationReport validate(const Gcf& g);

struct ValidationFailure : std::runtime_error {
  ValidationReport report;
  explicit ValidationFailure(ValidationReport r)
      : std::runtime_error("invalid function: " + r.reason), report(std::move(r)) {}
};

// Evaluates a validated GCF. Exact at any magnitude.
Integer eval(const Gcf& g, const Integer& x);

// All positive x with g(x) = y; at most one per branch. Throws
// InfinitePreimageRisk when some branch is constant with value y.
std::vector<Integer> preimage(const Gcf& g, const Integer& y);

}  // namespace orbtop
