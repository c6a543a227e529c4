#pragma once

#include <string>

#include "obstruction/combi.hpp"

namespace obstruction::decide {

using arith::Int;
using combi::CombiResult;
using combi::DivisorSubset;

/// Hypothesis level attached to a "representable" verdict. Verdict false is
/// always unconditional.
enum class Hypothesis { Unconditional, Bunyakovsky, SchinzelH };

std::string to_string(Hypothesis h);

/// Auditable trace of one ispossible(k, m) run.
struct DecisionReport {
  unsigned k = 1;
  Int m;
  bool verdict = false;
  Hypothesis hypothesis = Hypothesis::Unconditional;

  bool shortcut = false;  // m is a perfect k-th power
  Int root;               // the k-th root when shortcut

  // Extracted triple (only meaningful when !shortcut): a*b = k, n^a = m.
  unsigned a = 1;
  unsigned b = 1;
  Int n;
  std::vector<unsigned> divisors_of_a;

  std::vector<std::pair<Int, CombiResult>> per_prime;  // p | 2an, ascending
  std::set<DivisorSubset> aggregate_T;
};

/// Decides whether m = x^2 + y^2 + z^k is solvable over Z, for odd k >= 1
/// and m != 0. A false verdict is an unconditional proof of
/// non-representability; a true verdict is conditional on the hypothesis
/// recorded in the report.
DecisionReport ispossible(unsigned k, const Int& m);

enum class TableMode { Fast, FullScan };

struct TableEntry {
  Int m;
  Int n;       // m = n^a with a maximal
  unsigned a;  // divisor of k
};

/// All 1 <= m <= max with verdict false. Fast mode only tests proper-power
/// candidates m = n^a (a > 1, a | k); non-powers are always representable.
/// FullScan runs ispossible on every m (validation use, small max).
std::vector<TableEntry> table_generate(unsigned k, const Int& max,
                                       TableMode mode = TableMode::Fast);

}  // namespace obstruction::decide
