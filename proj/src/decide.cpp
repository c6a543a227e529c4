#include "obstruction/decide.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>

namespace obstruction::decide {

std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::Unconditional: return "unconditional";
    case Hypothesis::Bunyakovsky: return "Bunyakovsky";
    case Hypothesis::SchinzelH: return "Schinzel (H)";
  }
  return "?";
}

DecisionReport ispossible(unsigned k, const Int& m) {
  if (k == 0 || k % 2 == 0)
    throw std::invalid_argument("ispossible: k must be odd and positive");
  if (m == 0) throw std::domain_error("ispossible: m == 0");

  DecisionReport report;
  report.k = k;
  report.m = m;

  if (auto root = arith::integer_nth_root(m, k)) {
    report.verdict = true;
    report.shortcut = true;
    report.root = *root;
    report.hypothesis = Hypothesis::Unconditional;  // explicit solution
    return report;
  }

  auto [a, n] = arith::largest_power_divisor(m, k);
  report.a = a;
  report.b = k / a;
  report.n = n;
  report.divisors_of_a = arith::divisors(a);

  // T starts at {empty}; each prime folds in its COMBI set by symmetric
  // difference.
  std::set<DivisorSubset> t_set{0};
  Int two_an = 2 * Int(a) * n;
  for (const auto& [p, e] : arith::factorize(two_an).factors) {
    CombiResult w = combi::combi(a, report.b, n, p);
    std::set<DivisorSubset> folded;
    for (DivisorSubset t : t_set)
      for (DivisorSubset ws : w.subsets) folded.insert(t ^ ws);
    t_set = std::move(folded);
    report.per_prime.emplace_back(p, std::move(w));
  }
  report.aggregate_T = std::move(t_set);
  report.verdict = report.aggregate_T.contains(0);
  if (!report.verdict)
    report.hypothesis = Hypothesis::Unconditional;
  else if (report.a == 1)
    report.hypothesis = Hypothesis::Bunyakovsky;
  else
    report.hypothesis = Hypothesis::SchinzelH;
  return report;
}

namespace {

unsigned worker_count() {
  if (const char* env = std::getenv("OBSTRUCTION_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : std::min(hw, 8u);
}

}  // namespace

std::vector<TableEntry> table_generate(unsigned k, const Int& max,
                                       TableMode mode) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("table_generate: k must be odd and >= 3");
  std::vector<Int> candidates;
  if (mode == TableMode::FullScan) {
    for (Int m = 1; m <= max; ++m) candidates.push_back(m);
  } else {
    std::set<Int> seen;
    for (unsigned a : arith::divisors(k)) {
      if (a == 1) continue;
      for (Int n = 1;; ++n) {
        Int m;
        mpz_pow_ui(m.get_mpz_t(), n.get_mpz_t(), a);
        if (m > max) break;
        seen.insert(m);
      }
    }
    candidates.assign(seen.begin(), seen.end());
  }

  unsigned workers = std::min<std::size_t>(worker_count(), candidates.size());
  std::vector<std::vector<TableEntry>> partial(std::max(workers, 1u));
  std::atomic<std::size_t> cursor{0};
  auto run = [&](unsigned wid) {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= candidates.size()) break;
      DecisionReport r = ispossible(k, candidates[i]);
      if (!r.verdict) partial[wid].push_back({r.m, r.n, r.a});
    }
  };
  if (workers <= 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& th : pool) th.join();
  }

  std::vector<TableEntry> out;
  for (auto& part : partial)
    out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end(),
            [](const TableEntry& x, const TableEntry& y) { return x.m < y.m; });
  return out;
}

}  // namespace obstruction::decide
