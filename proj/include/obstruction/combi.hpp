#pragma once

#include <cstdint>
#include <set>

#include "obstruction/cyclotomic.hpp"
#include "obstruction/hilbert.hpp"

namespace obstruction::combi {

using arith::Int;
using cyclotomic::FdFamily;

/// Subset of the positive divisors of a, as a bitmask over the ascending
/// divisor list (bit i = divisors[i]).
using DivisorSubset = std::uint32_t;

struct CombiStats {
  std::uint64_t nodes_visited = 0;
  int max_depth = 0;
};

struct CombiResult {
  std::set<DivisorSubset> subsets;
  CombiStats stats;
};

struct CombiOptions {
  bool prune = true;
  /// With prune=false the search has no natural stopping point; it runs to
  /// exactly this depth instead. With prune=true, exceeding the cap throws.
  int depth_cap = 64;
};

/// w_z: divisors d of a with (f_d(-z), -1)_p = -1.
DivisorSubset w_of_z(const FdFamily& family, const hilbert::Place& v,
                     const Int& z);

/// G_{t,z}: divisors d of a with v_p(f_d(-z)) + 1 >= t.
DivisorSubset g_of_tz(const FdFamily& family, const Int& p, int t,
                      const Int& z);

/// Pruned breadth-first search over the residue tree of z mod p^t, returning
/// C = { w_z : z >= 0, (n^a - z^{ab}, -1)_p = +1 }.
/// Preconditions: a >= 1 odd, b >= 3 odd, n nonzero and not a q-th power for
/// any prime q | b, p prime. For p = 1 mod 4 returns {empty set} immediately.
CombiResult combi(unsigned a, unsigned b, const Int& n, const Int& p,
                  const CombiOptions& options = {});

/// Human-readable divisor list for a subset mask, e.g. "{1,3}".
std::string subset_to_string(DivisorSubset mask,
                             const std::vector<unsigned>& divisors);

}  // namespace obstruction::combi
