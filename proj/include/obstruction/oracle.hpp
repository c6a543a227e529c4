#pragma once

#include <optional>

#include "obstruction/combi.hpp"

namespace obstruction::oracle {

using arith::Int;
using combi::DivisorSubset;

struct Witness {
  Int x, y, z;
};

/// Brute-force search for x^2 + y^2 + z^k = m, scanning z in the order
/// 0, -1, 1, -2, 2, ... within |z| <= z_bound. Returns the first witness
/// found, or absent.
std::optional<Witness> witness_search(unsigned k, const Int& m,
                                      unsigned long z_bound);

/// Direct finite approximation of the set C returned by combi:
/// { w_z : 0 <= z < p^depth, (n^a - z^{ab}, -1)_p = +1 }.
/// Always a subset of combi(a,b,n,p).subsets.
std::set<DivisorSubset> residue_scan_C(unsigned a, unsigned b, const Int& n,
                                       const Int& p, int depth);

/// Direct scan for 1/2 in I_p: whether some z in [0, p^depth) satisfies
/// (n^a - z^{ab}, -1)_p = +1 and (n - z^b, -1)_p = -1.
bool half_invariant_scan(unsigned a, unsigned b, const Int& n, const Int& p,
                         int depth);

}  // namespace obstruction::oracle
