#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "orbtop/function.hpp"
#include "orbtop/gcf.hpp"
#include "orbtop/orbit.hpp"

using namespace orbtop;

namespace {

// Independent (mu, lambda, cycle) oracle by hashing every iterate. Only
// usable when the orbit closes quickly; that is exactly the regime the unit
// oracles live in.
struct NaiveClassification {
  std::uint64_t mu, lambda;
  std::vector<Integer> cycle;  // min-first
};

NaiveClassification naive_classify(const FunctionHandle& f, Integer x) {
  std::map<Integer, std::uint64_t> first_seen;
  std::vector<Integer> trail;
  std::uint64_t step = 0;
  while (!first_seen.count(x)) {
    first_seen[x] = step++;
    trail.push_back(x);
    x = f(x);
  }
  NaiveClassification r;
  r.mu = first_seen[x];
  r.lambda = step - r.mu;
  r.cycle.assign(trail.begin() + static_cast<long>(r.mu), trail.end());
  std::rotate(r.cycle.begin(),
              std::min_element(r.cycle.begin(), r.cycle.end()), r.cycle.end());
  return r;
}

FunctionHandle four_cycle() {
  return FunctionHandle::table_override(
      FunctionHandle::collatz(),
      {{1, 2}, {2, 3}, {3, 4}, {4, 1}}, "four_cycle");
}

}  // namespace

TEST_SUITE_BEGIN("orbit");

TEST_CASE("seed 1 sits on the cycle (1, 4, 2)") {
  OrbitReport r = classify(FunctionHandle::collatz(), 1);
  CHECK(r.status == OrbitStatus::CycleFound);
  CHECK(r.preperiod == 0);
  CHECK(r.period == 3);
  CHECK(r.cycle == std::vector<Integer>{1, 4, 2});
  CHECK(r.contains_one);
}

TEST_CASE("seed 27 has preperiod 109 onto the cycle (1, 4, 2)") {
  OrbitReport r = classify(FunctionHandle::collatz(), 27);
  CHECK(r.status == OrbitStatus::CycleFound);
  CHECK(r.preperiod == 109);
  CHECK(r.period == 3);
  CHECK(r.cycle == std::vector<Integer>{1, 4, 2});
  CHECK(r.contains_one);
  CHECK(r.max_value_bits == 14);  // peak iterate 9232
}

TEST_CASE("classification matches an independent oracle") {
  OrbitBudget budget{100000, 4096};
  for (auto f : {FunctionHandle::collatz(), four_cycle()}) {
    for (Integer seed = 1; seed <= 300; ++seed) {
      NaiveClassification expect = naive_classify(f, seed);
      OrbitReport got = classify(f, seed, budget);
      REQUIRE(got.status == OrbitStatus::CycleFound);
      CHECK(got.preperiod == expect.mu);
      CHECK(got.period == expect.lambda);
      CHECK(got.cycle == expect.cycle);

      // Re-verify the cycle by plain iteration, independent of bookkeeping.
      Integer x = seed;
      for (std::uint64_t i = 0; i < got.preperiod; ++i) x = f(x);
      Integer y = x;
      for (std::uint64_t i = 0; i < got.period; ++i) y = f(y);
      CHECK(x == y);
      // Minimality of mu: stepping one short of the preperiod must not close.
      if (got.preperiod > 0) {
        Integer u = seed;
        for (std::uint64_t i = 0; i + 1 < got.preperiod; ++i) u = f(u);
        Integer v = u;
        for (std::uint64_t i = 0; i < got.period; ++i) v = f(v);
        CHECK(u != v);
      }
    }
  }
}

TEST_CASE("divergent orbits exhaust the step budget deterministically") {
  OrbitBudget tight{100, 4096};
  OrbitReport r = classify(FunctionHandle::successor(), 1, tight);
  CHECK(r.status == OrbitStatus::BudgetExhausted);
  CHECK(r.steps_used == 100);
  CHECK(r.contains_one);  // the seed itself
  OrbitReport s = classify(FunctionHandle::successor(), 5, tight);
  CHECK_FALSE(s.contains_one);
}

TEST_CASE("value-size blowup exhausts the bit budget") {
  FunctionHandle dbl = FunctionHandle::from_gcf(parse_gcf("mod 1\n0: 2x\n", "dbl"));
  OrbitBudget budget{1000000, 64};
  OrbitReport r = classify(dbl, 3, budget);
  CHECK(r.status == OrbitStatus::BudgetExhausted);
  CHECK(r.steps_used < 100);  // bits trip long before the step budget
  CHECK(r.max_value_bits > 64);
}

TEST_CASE("large seeds classify exactly") {
  Integer seed = (Integer(1) << 80) + 1;  // odd
  OrbitReport r = classify(FunctionHandle::collatz(), seed);
  CHECK(r.status == OrbitStatus::CycleFound);
  CHECK(r.cycle == std::vector<Integer>{1, 4, 2});
}

TEST_CASE("small cycle census") {
  CHECK(small_cycle_census(FunctionHandle::collatz(), 10000, 3) ==
        std::vector<Integer>{1, 2, 4});
  CHECK(small_cycle_census(FunctionHandle::successor(), 100, 3).empty());
  FunctionHandle ident5 = FunctionHandle::table_override(
      FunctionHandle::collatz(),
      {{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}}, "ident5");
  CHECK(small_cycle_census(ident5, 10, 1) ==
        std::vector<Integer>{1, 2, 3, 4, 5});
  CHECK(small_cycle_census(four_cycle(), 10, 3).empty());
  CHECK(small_cycle_census(four_cycle(), 10, 4) ==
        std::vector<Integer>{1, 2, 3, 4});
}

TEST_CASE("scan aggregates in seed order and is thread-invariant") {
  FunctionHandle C = FunctionHandle::collatz();
  OrbitBudget budget;
  std::vector<std::string> seq_lines, par_lines;
  ScanSummary seq = scan(C, 1, 500, budget,
                         [&](const OrbitReport& r) { seq_lines.push_back(report_line(r)); },
                         1);
  ScanSummary par = scan(C, 1, 500, budget,
                         [&](const OrbitReport& r) { par_lines.push_back(report_line(r)); },
                         3);
  CHECK(seq_lines == par_lines);
  CHECK(seq_lines.size() == 500);
  CHECK(seq.total == 500);
  CHECK(seq.cycle_found == 500);
  CHECK(seq.budget_exhausted == 0);
  CHECK(seq.max_period == 3);
  CHECK(par.total == seq.total);
  CHECK(par.max_preperiod == seq.max_preperiod);
  CHECK(par.max_value_bits == seq.max_value_bits);
  CHECK(seq.period_gt_3.empty());
  CHECK(seq.cycle_without_one.empty());
  CHECK(seq.exhausted.empty());
}

TEST_CASE("scan flags exception seeds") {
  FunctionHandle f = FunctionHandle::table_override(
      FunctionHandle::collatz(), {{5, 6}, {6, 7}, {7, 5}}, "cycle567");
  ScanSummary s = scan(f, 1, 10, {});
  CHECK(s.cycle_without_one == std::vector<Integer>{3, 5, 6, 7, 9, 10});
  CHECK(s.period_gt_3.empty());

  ScanSummary t = scan(four_cycle(), 1, 4, {});
  CHECK(t.period_gt_3 == std::vector<Integer>{1, 2, 3, 4});
  CHECK(t.max_period == 4);
}

TEST_CASE("report lines are tab-separated with placeholders when exhausted") {
  OrbitReport r = classify(FunctionHandle::collatz(), 27);
  std::string line = report_line(r);
  CHECK(line.rfind("27\tCycleFound\t109\t3\ttrue\t", 0) == 0);

  OrbitReport ex = classify(FunctionHandle::successor(), 5, {50, 4096});
  CHECK(report_line(ex) == "5\tBudgetExhausted\t-\t-\tfalse\t50");
}

TEST_CASE("summary serialization") {
  ScanSummary s = scan(FunctionHandle::collatz(), 1, 6, {});
  std::ostringstream out;
  write_summary(out, s);
  CHECK(out.str() ==
        "total\t6\n"
        "cycle_found\t6\n"
        "budget_exhausted\t0\n"
        "max_preperiod\t6\n"
        "max_period\t3\n"
        "max_value_bits\t5\n"
        "period_gt_3\tnone\n"
        "cycle_without_one\tnone\n"
        "exhausted\tnone\n");
}

TEST_SUITE_END();
