#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "orbtop/complex.hpp"
#include "orbtop/function.hpp"
#include "orbtop/orbit.hpp"
#include "orbtop/transform.hpp"

namespace orbtop {

// A verified eventual cycle: iterating f from `seed` reaches `cycle`, and f
// maps each cycle element to the next (so the cycle is its own forward
// orbit and its minimal period is cycle.size()).
struct CycleCertificate {
  Integer seed;
  std::uint64_t period = 0;
  std::vector<Integer> cycle;  // min-first rotation
};

// Plain-iteration re-verification, independent of any detection bookkeeping:
// cycle values are distinct, f steps the cycle cyclically, period matches,
// and seed reaches the cycle within budget.max_steps evaluations.
bool verify_cycle_certificate(const FunctionHandle& f,
                              const CycleCertificate& cert,
                              const OrbitBudget& budget);

enum class ContractVerdict {
  CertifiedNotContractible,  // sound: a verified cycle of period > 3 exists
  NoViolationFound,          // every tested orbit closed with period <= 3
  Inconclusive               // some orbit exhausted the budget
};

enum class ConnectVerdict {
  CertifiedDisconnected,  // a verified cycle avoiding 1, or a finite
                          // component missing vertex 1
  NoViolationFound,       // every tested orbit contains 1
  Inconclusive
};

std::string to_string(ContractVerdict v);
std::string to_string(ConnectVerdict v);

struct ContractibilityReport {
  std::string function_name;
  Integer seed_lo, seed_hi;
  OrbitBudget budget;
  ContractVerdict verdict = ContractVerdict::Inconclusive;
  std::optional<CycleCertificate> certificate;  // period > 3 when present
  std::vector<Integer> exhausted_seeds;
};

struct ConnectivityReport {
  std::string function_name;
  Integer seed_lo, seed_hi;
  OrbitBudget budget;
  ConnectVerdict verdict = ConnectVerdict::Inconclusive;
  std::optional<CycleCertificate> certificate;  // cycle avoiding 1
  std::optional<std::vector<Integer>> component_certificate;  // misses 1
  std::vector<Integer> exhausted_seeds;
};

// Scans seeds in order; the first verified cycle of period > 3 certifies
// (the scan stops there). Certificates are re-verified before being
// reported. Never claims contractibility: the positive verdict only records
// that no violation was found at this scale.
ContractibilityReport decide_contractibility(const FunctionHandle& f,
                                             const Integer& seed_lo,
                                             const Integer& seed_hi,
                                             const OrbitBudget& budget = {});

// Scans seeds in order; the first verified cycle avoiding 1 certifies
// disconnection of Gamma(f). Optionally probes the component of
// `component_probe` first: a finite component missing vertex 1 also
// certifies disconnection.
ConnectivityReport decide_connectivity(
    const FunctionHandle& f, const Integer& seed_lo, const Integer& seed_hi,
    const OrbitBudget& budget = {},
    const std::optional<Integer>& component_probe = std::nullopt,
    std::uint64_t component_max_vertices = 10000);

// The reduction pipeline bundle: the hat-transformed handle plus the lazy
// complexes tied to the generalized-Collatz-problem instance of g.
struct GcpBundle {
  FunctionHandle g;
  FunctionHandle g_hat;
  PresentationComplex P_hat;  // P(g^)
  Graph Gamma;                // Gamma(g)
  PresentationComplex Q;      // Q(g)
};

GcpBundle gcp_reduce(const FunctionHandle& g);

// Desk-scale verification that every orbit of the Collatz function up to
// `upto` reaches the cycle (1, 4, 2).
struct CollatzVerification {
  Integer upto;
  OrbitBudget budget;
  ScanSummary summary;
  bool all_reach_cycle = false;
};

CollatzVerification collatz_verify(const Integer& upto,
                                   const OrbitBudget& budget = {},
                                   int threads = 1);

// Report files: header block, verdict, optional certificate block, then
// per-seed exception lines only.
void write_report(std::ostream& out, const ContractibilityReport& r);
void write_report(std::ostream& out, const ConnectivityReport& r);
void write_report(std::ostream& out, const CollatzVerification& v);

}  // namespace orbtop
