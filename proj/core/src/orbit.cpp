#include "orbtop/orbit.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>

namespace orbtop {

namespace {

// Budgeted iterate walker: counts every evaluation, tracks the largest
// iterate and whether 1 was visited. advance() returns false once either
// bound is exceeded.
struct Walker {
  const FunctionHandle& f;
  const OrbitBudget& budget;
  std::uint64_t steps = 0;
  std::size_t max_bits = 0;
  bool saw_one = false;
  Integer scratch;

  Walker(const FunctionHandle& fn, const OrbitBudget& b, const Integer& seed)
      : f(fn), budget(b) {
    note(seed);
  }

  bool note(const Integer& v) {
    std::size_t bits = bit_size(v);
    if (bits > max_bits) max_bits = bits;
    if (v == 1) saw_one = true;
    return bits <= budget.max_value_bits;
  }

  bool advance(Integer& x) {
    if (steps >= budget.max_steps) return false;
    f.eval_into(x, scratch);
    mpz_swap(x.get_mpz_t(), scratch.get_mpz_t());
    ++steps;
    return note(x);
  }
};

OrbitReport exhausted_report(const Integer& seed, const Walker& w) {
  OrbitReport rep;
  rep.seed = seed;
  rep.status = OrbitStatus::BudgetExhausted;
  rep.contains_one = w.saw_one;
  rep.steps_used = w.steps;
  rep.max_value_bits = w.max_bits;
  return rep;
}

}  // namespace

OrbitReport classify(const FunctionHandle& f, const Integer& seed,
                     const OrbitBudget& budget) {
  Walker w(f, budget, seed);
  if (bit_size(seed) > budget.max_value_bits) return exhausted_report(seed, w);

  // Brent's main loop: the hare advances one step at a time (so it visits
  // every iterate in order); the tortoise teleports to the hare at powers
  // of two. On exit `lambda` is the minimal period.
  Integer tortoise = seed;
  Integer hare = seed;
  if (!w.advance(hare)) return exhausted_report(seed, w);
  std::uint64_t power = 1, lambda = 1;
  while (tortoise != hare) {
    if (power == lambda) {
      tortoise = hare;
      power <<= 1;
      lambda = 0;
    }
    if (!w.advance(hare)) return exhausted_report(seed, w);
    ++lambda;
  }

  // Standard two-pointer walk: put the hare lambda steps ahead of the seed,
  // then advance both until they meet at f^mu(seed).
  tortoise = seed;
  hare = seed;
  for (std::uint64_t i = 0; i < lambda; ++i)
    if (!w.advance(hare)) return exhausted_report(seed, w);
  std::uint64_t mu = 0;
  while (tortoise != hare) {
    if (!w.advance(tortoise)) return exhausted_report(seed, w);
    if (!w.advance(hare)) return exhausted_report(seed, w);
    ++mu;
  }

  std::vector<Integer> cycle;
  cycle.reserve(static_cast<std::size_t>(lambda));
  cycle.push_back(tortoise);
  for (std::uint64_t i = 1; i < lambda; ++i) {
    if (!w.advance(tortoise)) return exhausted_report(seed, w);
    cycle.push_back(tortoise);
  }
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());

  OrbitReport rep;
  rep.seed = seed;
  rep.status = OrbitStatus::CycleFound;
  rep.preperiod = mu;
  rep.period = lambda;
  rep.cycle = std::move(cycle);
  rep.contains_one = w.saw_one;
  rep.steps_used = w.steps;
  rep.max_value_bits = w.max_bits;
  return rep;
}

namespace {

void absorb(ScanSummary& s, const OrbitReport& rep) {
  ++s.total;
  if (rep.max_value_bits > s.max_value_bits) s.max_value_bits = rep.max_value_bits;
  if (rep.status == OrbitStatus::CycleFound) {
    ++s.cycle_found;
    if (rep.preperiod > s.max_preperiod) s.max_preperiod = rep.preperiod;
    if (rep.period > s.max_period) s.max_period = rep.period;
    if (rep.period > 3) s.period_gt_3.push_back(rep.seed);
    if (!rep.contains_one) s.cycle_without_one.push_back(rep.seed);
  } else {
    ++s.budget_exhausted;
    s.exhausted.push_back(rep.seed);
  }
}

}  // namespace

ScanSummary scan(const FunctionHandle& f, const Integer& lo, const Integer& hi,
                 const OrbitBudget& budget,
                 const std::function<void(const OrbitReport&)>& sink,
                 int threads) {
  if (lo < 1 || hi < lo) throw std::invalid_argument("scan: empty seed range");
  ScanSummary summary;
  if (threads <= 0) {
    unsigned hc = std::thread::hardware_concurrency();
    threads = hc ? static_cast<int>(hc) : 1;
  }

  if (threads == 1) {
    for (Integer seed = lo; seed <= hi; ++seed) {
      OrbitReport rep = classify(f, seed, budget);
      absorb(summary, rep);
      if (sink) sink(rep);
    }
    return summary;
  }

  // Workers claim fixed-size blocks of consecutive seeds; the coordinator
  // emits finished blocks strictly in order, so output and summary are
  // deterministic for any thread count.
  const std::uint64_t kBlock = 1024;
  Integer span = hi - lo + 1;
  std::uint64_t blocks =
      mpz_fits_ulong_p(span.get_mpz_t())
          ? (mpz_get_ui(span.get_mpz_t()) + kBlock - 1) / kBlock
          : 0;
  if (blocks == 0) {  // astronomically large range: fall back to sequential
    for (Integer seed = lo; seed <= hi; ++seed) {
      OrbitReport rep = classify(f, seed, budget);
      absorb(summary, rep);
      if (sink) sink(rep);
    }
    return summary;
  }

  std::atomic<std::uint64_t> next_block{0};
  std::mutex mtx;
  std::condition_variable cv;
  std::map<std::uint64_t, std::vector<OrbitReport>> done;

  auto worker = [&]() {
    for (;;) {
      std::uint64_t b = next_block.fetch_add(1);
      if (b >= blocks) return;
      Integer seed = lo + Integer(b * kBlock);
      std::vector<OrbitReport> batch;
      batch.reserve(kBlock);
      for (std::uint64_t i = 0; i < kBlock && seed <= hi; ++i, ++seed)
        batch.push_back(classify(f, seed, budget));
      std::lock_guard<std::mutex> lock(mtx);
      done.emplace(b, std::move(batch));
      cv.notify_all();
    }
  };

  std::vector<std::thread> pool;
  int nworkers = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), blocks);
  pool.reserve(static_cast<std::size_t>(nworkers));
  for (int t = 0; t < nworkers; ++t) pool.emplace_back(worker);

  for (std::uint64_t b = 0; b < blocks; ++b) {
    std::vector<OrbitReport> batch;
    {
      std::unique_lock<std::mutex> lock(mtx);
      cv.wait(lock, [&] { return done.count(b) != 0; });
      batch = std::move(done[b]);
      done.erase(b);
    }
    for (const OrbitReport& rep : batch) {
      absorb(summary, rep);
      if (sink) sink(rep);
    }
  }
  for (std::thread& t : pool) t.join();
  return summary;
}

std::vector<Integer> small_cycle_census(const FunctionHandle& f,
                                        const Integer& bound,
                                        std::uint64_t k_max) {
  std::vector<Integer> hits;
  Integer x, scratch;
  for (Integer n = 1; n <= bound; ++n) {
    x = n;
    for (std::uint64_t k = 1; k <= k_max; ++k) {
      f.eval_into(x, scratch);
      mpz_swap(x.get_mpz_t(), scratch.get_mpz_t());
      if (x == n) {
        hits.push_back(n);
        break;
      }
    }
  }
  return hits;
}

std::string report_line(const OrbitReport& report) {
  std::ostringstream out;
  out << report.seed << '\t';
  if (report.status == OrbitStatus::CycleFound)
    out << "CycleFound\t" << report.preperiod << '\t' << report.period;
  else
    out << "BudgetExhausted\t-\t-";
  out << '\t' << (report.contains_one ? "true" : "false") << '\t'
      << report.steps_used;
  return out.str();
}

void write_summary(std::ostream& out, const ScanSummary& s) {
  out << "total\t" << s.total << '\n'
      << "cycle_found\t" << s.cycle_found << '\n'
      << "budget_exhausted\t" << s.budget_exhausted << '\n'
      << "max_preperiod\t" << s.max_preperiod << '\n'
      << "max_period\t" << s.max_period << '\n'
      << "max_value_bits\t" << s.max_value_bits << '\n';
  auto list = [&out](const char* label, const std::vector<Integer>& seeds) {
    out << label;
    if (seeds.empty()) {
      out << "\tnone";
    } else {
      for (const Integer& seed : seeds) out << '\t' << seed;
    }
    out << '\n';
  };
  list("period_gt_3", s.period_gt_3);
  list("cycle_without_one", s.cycle_without_one);
  list("exhausted", s.exhausted);
}

}  // namespace orbtop
