#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orbtop/decider.hpp"
#include "orbtop/errors.hpp"
#include "orbtop/gcf.hpp"
#include "orbtop/transform.hpp"
#include "orbtop/words.hpp"

using namespace orbtop;

namespace {

FunctionHandle four_cycle() {
  return FunctionHandle::table_override(
      FunctionHandle::collatz(),
      {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, "four_cycle");
}

FunctionHandle cycle567() {
  return FunctionHandle::table_override(
      FunctionHandle::collatz(), {{5, 6}, {6, 7}, {7, 5}}, "cycle567");
}

}  // namespace

TEST_SUITE_BEGIN("decider");

TEST_CASE("certificate verification accepts the truth and nothing else") {
  FunctionHandle C = FunctionHandle::collatz();
  OrbitBudget budget;

  CycleCertificate good{Integer(27), 3, {Integer(1), Integer(4), Integer(2)}};
  CHECK(verify_cycle_certificate(C, good, budget));

  CycleCertificate wrong_period = good;
  wrong_period.period = 2;
  CHECK_FALSE(verify_cycle_certificate(C, wrong_period, budget));

  CycleCertificate not_a_cycle{Integer(27), 3,
                               {Integer(1), Integer(4), Integer(3)}};
  CHECK_FALSE(verify_cycle_certificate(C, not_a_cycle, budget));

  CycleCertificate repeated{Integer(27), 4,
                            {Integer(1), Integer(4), Integer(2), Integer(1)}};
  CHECK_FALSE(verify_cycle_certificate(C, repeated, budget));

  // Under four_cycle, 5 -> 16 -> 8 -> 4 reaches the cycle; pinning 5 to its
  // own loop makes the same certificate unreachable.
  CycleCertificate from5{Integer(5), 4,
                         {Integer(1), Integer(2), Integer(3), Integer(4)}};
  CHECK(verify_cycle_certificate(four_cycle(), from5, budget));
  FunctionHandle pinned = FunctionHandle::table_override(
      FunctionHandle::collatz(),
      {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 5}}, "pinned");
  OrbitBudget small;
  small.max_steps = 1000;
  CHECK_FALSE(verify_cycle_certificate(pinned, from5, small));

  CycleCertificate empty;
  CHECK_FALSE(verify_cycle_certificate(C, empty, budget));

  // Seed reaches the cycle only after more steps than the budget allows.
  OrbitBudget tiny;
  tiny.max_steps = 10;
  CycleCertificate far{Integer(27), 3, {Integer(1), Integer(4), Integer(2)}};
  CHECK_FALSE(verify_cycle_certificate(C, far, tiny));
}

TEST_CASE("a period-4 cycle certifies non-contractibility") {
  ContractibilityReport r =
      decide_contractibility(four_cycle(), 1, 10);
  CHECK(r.verdict == ContractVerdict::CertifiedNotContractible);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->period == 4);
  CHECK(r.certificate->cycle ==
        std::vector<Integer>{1, 2, 3, 4});
  CHECK(r.certificate->seed == 1);  // scan stops at the first violation
  CHECK(r.exhausted_seeds.empty());
  CHECK(to_string(r.verdict) == "CERTIFIED_NOT_CONTRACTIBLE");
}

TEST_CASE("budget exhaustion is inconclusive") {
  OrbitBudget budget;
  budget.max_steps = 100;
  ContractibilityReport r =
      decide_contractibility(FunctionHandle::successor(), 1, 10, budget);
  CHECK(r.verdict == ContractVerdict::Inconclusive);
  CHECK_FALSE(r.certificate.has_value());
  CHECK(r.exhausted_seeds.size() == 10);
  CHECK(to_string(r.verdict) == "INCONCLUSIVE");
}

TEST_CASE("hat transform leaves no contractibility violation") {
  FunctionHandle h = hat(FunctionHandle::collatz());
  ContractibilityReport r = decide_contractibility(h, 1, 2000);
  CHECK(r.verdict == ContractVerdict::NoViolationFound);
  CHECK(r.exhausted_seeds.empty());
  CHECK(to_string(r.verdict) == "NO_VIOLATION_FOUND");
}

TEST_CASE("a cycle avoiding 1 certifies disconnection") {
  ConnectivityReport r = decide_connectivity(cycle567(), 1, 100);
  CHECK(r.verdict == ConnectVerdict::CertifiedDisconnected);
  REQUIRE(r.certificate.has_value());
  CHECK(r.certificate->cycle == std::vector<Integer>{5, 6, 7});
  CHECK(r.certificate->seed == 3);  // 3 -> 10 -> 5 enters the stray cycle
  CHECK_FALSE(r.component_certificate.has_value());
  CHECK(to_string(r.verdict) == "CERTIFIED_DISCONNECTED");
}

TEST_CASE("collatz orbits up to 10^4 all contain 1") {
  ConnectivityReport r =
      decide_connectivity(FunctionHandle::collatz(), 1, 10000);
  CHECK(r.verdict == ConnectVerdict::NoViolationFound);
  CHECK(r.exhausted_seeds.empty());
}

TEST_CASE("a finite component missing vertex 1 certifies disconnection") {
  // g(5) = 5, g(n) = 1 elsewhere: v5 is an isolated loop component.
  FunctionHandle island = FunctionHandle::table_override(
      FunctionHandle::from_gcf(parse_gcf("mod 1\n0: 0x + 1\n", "const1")),
      {{5, 5}}, "island5");
  ConnectivityReport r = decide_connectivity(island, 5, 5, OrbitBudget{},
                                             Integer(5), 100);
  CHECK(r.verdict == ConnectVerdict::CertifiedDisconnected);
  REQUIRE(r.component_certificate.has_value());
  CHECK(*r.component_certificate == std::vector<Integer>{5});

  // A probe that exceeds the vertex budget falls back to the seed scan.
  ConnectivityReport s = decide_connectivity(cycle567(), 1, 2, OrbitBudget{},
                                             Integer(2), 100);
  CHECK_FALSE(s.component_certificate.has_value());
  CHECK(s.verdict == ConnectVerdict::NoViolationFound);

  // A probe whose infinite preimages the search cannot bound is an error.
  CHECK_THROWS_AS(decide_connectivity(island, 1, 2, OrbitBudget{}, Integer(2),
                                      100),
                  InfinitePreimageRisk);
}

TEST_CASE("scaled-budget equivalence between f and hat(f)") {
  // With budget B upstairs and 4B + 4 downstairs, an orbit of f contains 1
  // exactly when all four fibre orbits of hat(f) close up with period <= 3.
  OrbitBudget up;
  up.max_steps = 2000;
  OrbitBudget down;
  down.max_steps = 4 * up.max_steps + 4;

  std::vector<FunctionHandle> battery{
      FunctionHandle::collatz(), cycle567(), four_cycle(),
      FunctionHandle::successor()};
  for (const FunctionHandle& f : battery) {
    FunctionHandle h = hat(f);
    for (unsigned long s = 1; s <= 200; ++s) {
      bool lhs = classify(f, Integer(s), up).contains_one;
      bool rhs = true;
      for (int r = 0; r < 4; ++r) {
        Integer fibre = phi_inv(Integer(s), r);
        OrbitReport rep = classify(h, fibre, down);
        if (rep.status != OrbitStatus::CycleFound || rep.period > 3)
          rhs = false;
      }
      CHECK_MESSAGE(lhs == rhs, "function ", f.name(), " seed ", s);
    }
  }
}

TEST_CASE("the reduction bundle wires everything to the same instance") {
  FunctionHandle C = FunctionHandle::collatz();
  GcpBundle b = gcp_reduce(C);
  CHECK(b.g.name() == "collatz");
  CHECK(b.g_hat.name() == "hat:collatz");
  CHECK(format_word(b.P_hat.relator(9).word) == "-38 +9 +38 -9 -9");
  CHECK(b.Gamma.edge(1) == std::pair<Integer, Integer>{Integer(2), Integer(1)});
  CHECK(format_word(b.Q.relator(1).word) == "+1");
  CHECK(b.P_hat.describe() == "P hat:collatz");

  // The bundle of a divergent function still constructs lazily; only
  // evaluation blows the budget.
  GcpBundle s = gcp_reduce(FunctionHandle::successor());
  OrbitBudget tiny;
  tiny.max_steps = 50;
  CHECK(classify(s.g_hat, Integer(5), tiny).status ==
        OrbitStatus::BudgetExhausted);
}

TEST_CASE("collatz verification summaries") {
  CollatzVerification one = collatz_verify(1);
  CHECK(one.all_reach_cycle);
  CHECK(one.summary.total == 1);
  CHECK(one.summary.max_preperiod == 0);

  CollatzVerification v = collatz_verify(1000);
  CHECK(v.all_reach_cycle);
  CHECK(v.summary.total == 1000);
  CHECK(v.summary.cycle_found == 1000);
  CHECK(v.summary.max_period == 3);
  CHECK(v.summary.period_gt_3.empty());
  CHECK(v.summary.cycle_without_one.empty());

  // Frozen oracle: the longest preperiod among seeds 1..1000 is 176,
  // attained at 871 (the orbit enters the cycle at 4).
  CHECK(v.summary.max_preperiod == 176);
  OrbitReport r871 = classify(FunctionHandle::collatz(), 871, OrbitBudget{});
  CHECK(r871.preperiod == 176);
}

TEST_CASE("report rendering") {
  ContractibilityReport r = decide_contractibility(four_cycle(), 1, 10);
  std::ostringstream out;
  write_report(out, r);
  std::string text = out.str();
  CHECK(text.find("function four_cycle\n") != std::string::npos);
  CHECK(text.find("seeds 1..10\n") != std::string::npos);
  CHECK(text.find("verdict CERTIFIED_NOT_CONTRACTIBLE\n") != std::string::npos);
  CHECK(text.find("certificate seed 1\n") != std::string::npos);
  CHECK(text.find("certificate period 4\n") != std::string::npos);
  CHECK(text.find("certificate cycle 1 2 3 4\n") != std::string::npos);

  ConnectivityReport c = decide_connectivity(cycle567(), 1, 100);
  std::ostringstream out2;
  write_report(out2, c);
  std::string text2 = out2.str();
  CHECK(text2.find("verdict CERTIFIED_DISCONNECTED\n") != std::string::npos);
  CHECK(text2.find("certificate cycle 5 6 7\n") != std::string::npos);

  OrbitBudget budget;
  budget.max_steps = 100;
  ContractibilityReport inc =
      decide_contractibility(FunctionHandle::successor(), 1, 3, budget);
  std::ostringstream out3;
  write_report(out3, inc);
  std::string text3 = out3.str();
  CHECK(text3.find("verdict INCONCLUSIVE\n") != std::string::npos);
  CHECK(text3.find("exhausted 1\n") != std::string::npos);
  CHECK(text3.find("exhausted 3\n") != std::string::npos);

  CollatzVerification v = collatz_verify(100);
  std::ostringstream out4;
  write_report(out4, v);
  std::string text4 = out4.str();
  CHECK(text4.find("verdict ALL_REACH_CYCLE_1_4_2\n") != std::string::npos);
  CHECK(text4.find("seeds 1..100\n") != std::string::npos);
  CHECK(text4.find("max_preperiod 116\n") != std::string::npos);
}

TEST_SUITE_END();
