#include "orbtop/decider.hpp"

#include "orbtop/homology.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace orbtop {

bool verify_cycle_certificate(const FunctionHandle& f,
                              const CycleCertificate& cert,
                              const OrbitBudget& budget) {
  const std::size_t n = cert.cycle.size();
  if (n == 0 || cert.period != n) return false;
  std::set<Integer> distinct(cert.cycle.begin(), cert.cycle.end());
  if (distinct.size() != n) return false;
  for (const Integer& v : cert.cycle)
    if (v < 1) return false;
  // f advances the cycle cyclically; distinctness makes n the minimal period.
  for (std::size_t i = 0; i < n; ++i)
    if (f(cert.cycle[i]) != cert.cycle[(i + 1) % n]) return false;
  // The seed reaches the cycle by plain iteration.
  Integer x = cert.seed, next;
  for (std::uint64_t step = 0; step <= budget.max_steps; ++step) {
    if (distinct.count(x)) return true;
    if (bit_size(x) > budget.max_value_bits) return false;
    f.eval_into(x, next);
    mpz_swap(x.get_mpz_t(), next.get_mpz_t());
  }
  return false;
}

std::string to_string(ContractVerdict v) {
  switch (v) {
    case ContractVerdict::CertifiedNotContractible:
      return "CERTIFIED_NOT_CONTRACTIBLE";
    case ContractVerdict::NoViolationFound:
      return "NO_VIOLATION_FOUND";
    case ContractVerdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

std::string to_string(ConnectVerdict v) {
  switch (v) {
    case ConnectVerdict::CertifiedDisconnected:
      return "CERTIFIED_DISCONNECTED";
    case ConnectVerdict::NoViolationFound:
      return "NO_VIOLATION_FOUND";
    case ConnectVerdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

ContractibilityReport decide_contractibility(const FunctionHandle& f,
                                             const Integer& seed_lo,
                                             const Integer& seed_hi,
                                             const OrbitBudget& budget) {
  if (seed_lo < 1 || seed_hi < seed_lo)
    throw std::invalid_argument("decide_contractibility: bad seed range");
  ContractibilityReport rep;
  rep.function_name = f.name();
  rep.seed_lo = seed_lo;
  rep.seed_hi = seed_hi;
  rep.budget = budget;
  for (Integer seed = seed_lo; seed <= seed_hi; ++seed) {
    OrbitReport orep = classify(f, seed, budget);
    if (orep.status == OrbitStatus::BudgetExhausted) {
      rep.exhausted_seeds.push_back(seed);
      continue;
    }
    if (orep.period > 3) {
      CycleCertificate cert;
      cert.seed = seed;
      cert.period = orep.period;
      cert.cycle = orep.cycle;
      if (!verify_cycle_certificate(f, cert, budget))
        throw std::logic_error("cycle certificate failed re-verification");
      rep.certificate = std::move(cert);
      rep.verdict = ContractVerdict::CertifiedNotContractible;
      return rep;
    }
  }
  rep.verdict = rep.exhausted_seeds.empty() ? ContractVerdict::NoViolationFound
                                            : ContractVerdict::Inconclusive;
  return rep;
}

ConnectivityReport decide_connectivity(const FunctionHandle& f,
                                       const Integer& seed_lo,
                                       const Integer& seed_hi,
                                       const OrbitBudget& budget,
                                       const std::optional<Integer>& component_probe,
                                       std::uint64_t component_max_vertices) {
  if (seed_lo < 1 || seed_hi < seed_lo)
    throw std::invalid_argument("decide_connectivity: bad seed range");
  ConnectivityReport rep;
  rep.function_name = f.name();
  rep.seed_lo = seed_lo;
  rep.seed_hi = seed_hi;
  rep.budget = budget;

  if (component_probe) {
    ComponentResult comp =
        finite_component(f, *component_probe, component_max_vertices);
    if (!comp.exceeded &&
        !std::binary_search(comp.vertices.begin(), comp.vertices.end(),
                            Integer(1))) {
      rep.component_certificate = std::move(comp.vertices);
      rep.verdict = ConnectVerdict::CertifiedDisconnected;
      return rep;
    }
  }

  for (Integer seed = seed_lo; seed <= seed_hi; ++seed) {
    OrbitReport orep = classify(f, seed, budget);
    if (orep.status == OrbitStatus::BudgetExhausted) {
      rep.exhausted_seeds.push_back(seed);
      continue;
    }
    // Min-first rotation: the cycle contains 1 iff its first entry is 1.
    // A cycle avoiding 1 is itself a forward orbit avoiding 1, regardless
    // of how the scan reached it.
    if (orep.cycle.front() != 1) {
      CycleCertificate cert;
      cert.seed = seed;
      cert.period = orep.period;
      cert.cycle = orep.cycle;
      if (!verify_cycle_certificate(f, cert, budget))
        throw std::logic_error("cycle certificate failed re-verification");
      rep.certificate = std::move(cert);
      rep.verdict = ConnectVerdict::CertifiedDisconnected;
      return rep;
    }
  }
  rep.verdict = rep.exhausted_seeds.empty() ? ConnectVerdict::NoViolationFound
                                            : ConnectVerdict::Inconclusive;
  return rep;
}

GcpBundle gcp_reduce(const FunctionHandle& g) {
  if (!g.valid()) throw std::invalid_argument("gcp_reduce: invalid handle");
  FunctionHandle g_hat = hat(g);
  return GcpBundle{g, g_hat, PresentationComplex::P(g_hat), build_Gamma(g),
                   PresentationComplex::Q(g)};
}

CollatzVerification collatz_verify(const Integer& upto,
                                   const OrbitBudget& budget, int threads) {
  if (upto < 1) throw std::invalid_argument("collatz_verify: upto must be >= 1");
  CollatzVerification v;
  v.upto = upto;
  v.budget = budget;
  FunctionHandle C = FunctionHandle::collatz();
  v.summary = scan(C, Integer(1), upto, budget, {}, threads);
  v.all_reach_cycle = v.summary.exhausted.empty() &&
                      v.summary.cycle_without_one.empty() &&
                      v.summary.period_gt_3.empty() &&
                      v.summary.max_period == 3;
  return v;
}

namespace {

void write_header(std::ostream& out, const std::string& fn, const Integer& lo,
                  const Integer& hi, const OrbitBudget& b) {
  out << "function " << fn << '\n'
      << "seeds " << lo << ".." << hi << '\n'
      << "max_steps " << b.max_steps << '\n'
      << "max_value_bits " << b.max_value_bits << '\n';
}

void write_cycle_certificate(std::ostream& out, const CycleCertificate& c) {
  out << "certificate seed " << c.seed << '\n';
  out << "certificate period " << c.period << '\n';
  out << "certificate cycle";
  for (const Integer& v : c.cycle) out << ' ' << v;
  out << '\n';
}

void write_exceptions(std::ostream& out, const std::vector<Integer>& seeds) {
  for (const Integer& s : seeds) out << "exhausted " << s << '\n';
}

}  // namespace

void write_report(std::ostream& out, const ContractibilityReport& r) {
  write_header(out, r.function_name, r.seed_lo, r.seed_hi, r.budget);
  out << "verdict " << to_string(r.verdict) << '\n';
  if (r.certificate) write_cycle_certificate(out, *r.certificate);
  write_exceptions(out, r.exhausted_seeds);
}

void write_report(std::ostream& out, const ConnectivityReport& r) {
  write_header(out, r.function_name, r.seed_lo, r.seed_hi, r.budget);
  out << "verdict " << to_string(r.verdict) << '\n';
  if (r.certificate) write_cycle_certificate(out, *r.certificate);
  if (r.component_certificate) {
    out << "certificate component";
    for (const Integer& v : *r.component_certificate) out << ' ' << v;
    out << '\n';
  }
  write_exceptions(out, r.exhausted_seeds);
}

void write_report(std::ostream& out, const CollatzVerification& v) {
  out << "function collatz\n"
      << "seeds 1.." << v.upto << '\n'
      << "max_steps " << v.budget.max_steps << '\n'
      << "max_value_bits " << v.budget.max_value_bits << '\n'
      << "verdict " << (v.all_reach_cycle ? "ALL_REACH_CYCLE_1_4_2" : "EXCEPTIONS_FOUND")
      << '\n'
      << "max_preperiod " << v.summary.max_preperiod << '\n'
      << "max_value_bits_seen " << v.summary.max_value_bits << '\n';
  write_exceptions(out, v.summary.exhausted);
  for (const Integer& s : v.summary.period_gt_3) out << "period_gt_3 " << s << '\n';
  for (const Integer& s : v.summary.cycle_without_one)
    out << "cycle_without_one " << s << '\n';
}

}  // namespace orbtop
