#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "orbtop/function.hpp"
#include "orbtop/numbers.hpp"

namespace orbtop {

// Resource bounds for orbit exploration. max_steps caps the total number of
// function evaluations across all phases of one classification; exceeding
// either bound yields BudgetExhausted (a result, never an error).
struct OrbitBudget {
  std::uint64_t max_steps = 1000000;
  std::size_t max_value_bits = 4096;
};

enum class OrbitStatus { CycleFound, BudgetExhausted };

// Classification of one forward orbit {seed, f(seed), f^2(seed), ...}.
// On CycleFound: f^(preperiod+period)(seed) = f^preperiod(seed), period
// minimal, preperiod minimal given the period, and `cycle` holds the period
// distinct values rotated so the minimum leads.
struct OrbitReport {
  Integer seed;
  OrbitStatus status = OrbitStatus::BudgetExhausted;
  std::uint64_t preperiod = 0;  // mu; meaningful only on CycleFound
  std::uint64_t period = 0;     // lambda; meaningful only on CycleFound
  std::vector<Integer> cycle;   // min-first rotation; CycleFound only
  bool contains_one = false;    // 1 among visited iterates or on the cycle
  std::uint64_t steps_used = 0;
  std::size_t max_value_bits = 0;  // largest iterate bit-size seen
};

// Aggregate over a scan, assembled in seed order (deterministic regardless
// of worker parallelism).
struct ScanSummary {
  std::uint64_t total = 0;
  std::uint64_t cycle_found = 0;
  std::uint64_t budget_exhausted = 0;
  std::uint64_t max_preperiod = 0;  // over CycleFound reports
  std::uint64_t max_period = 0;     // over CycleFound reports
  std::size_t max_value_bits = 0;
  std::vector<Integer> period_gt_3;        // seeds with a verified period > 3
  std::vector<Integer> cycle_without_one;  // CycleFound but 1 not in orbit
  std::vector<Integer> exhausted;          // seeds that hit the budget
};

// Brent tortoise-hare cycle detection with exact preperiod/period recovery.
// Pure: the result depends only on (f, seed, budget).
OrbitReport classify(const FunctionHandle& f, const Integer& seed,
                     const OrbitBudget& budget = {});

// Classifies every seed in [lo, hi] and feeds reports to `sink` in seed
// order. `threads` <= 0 means use available hardware parallelism.
ScanSummary scan(const FunctionHandle& f, const Integer& lo, const Integer& hi,
                 const OrbitBudget& budget,
                 const std::function<void(const OrbitReport&)>& sink = {},
                 int threads = 1);

// All n <= bound with f^k(n) = n for some 1 <= k <= k_max, ascending.
std::vector<Integer> small_cycle_census(const FunctionHandle& f,
                                        const Integer& bound,
                                        std::uint64_t k_max);

// One tab-separated line: seed, status, mu, lambda, contains_one, steps_used
// (mu/lambda print as "-" when no cycle was found).
std::string report_line(const OrbitReport& report);
void write_summary(std::ostream& out, const ScanSummary& summary);

}  // namespace orbtop
