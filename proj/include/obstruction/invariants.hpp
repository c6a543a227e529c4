#pragma once

#include <optional>

#include "obstruction/hilbert.hpp"

namespace obstruction::invariants {

using arith::Int;
using hilbert::Place;

enum class Status { Exact, LowerBound, NotCovered };

/// The set of local invariant values attained by v-adic integral points on
/// x^2 + y^2 + z^{ab} = n^a, as far as the closed-form case analysis
/// determines it.
struct InvariantSet {
  Place place = Place::real();
  bool has_zero = false;
  bool has_half = false;
  Status status = Status::NotCovered;
};

/// Case analysis of I_v(a, b, n). Requires n > 0 or a*b odd.
InvariantSet invariant_set(unsigned a, unsigned b, const Int& n,
                           const Place& v);

/// Least z' in [0, p-1] with p | r_p(n)^{a-1} + r_p(n)^{a-2} z'^b + ...
/// + z'^{(a-1)b}, or absent. Requires p odd and p not dividing a*b.
std::optional<unsigned long> small_root_search(const Int& p, unsigned a,
                                               unsigned b, const Int& n);

/// True iff n = 6 mod 8 and b does not divide v_p(n) for any prime
/// p = 3 mod 4 dividing a*n. True implies x^2+y^2+z^{ab} = n^a has no
/// integral solutions. Requires a, b odd >= 3.
bool check_jagy_obstruction(unsigned a, unsigned b, const Int& n);

/// True iff strong approximation "at Z" away from infinity fails for
/// x^2+y^2+z^{ab} = n^a by one of the two closed-form criteria:
/// (a >= 2, r_2(n)^a = 1 mod 4, b | v_2(n)+1), or
/// (n > 0, a even, n not a sum of two squares).
bool check_strong_approx_failure(unsigned a, unsigned b, const Int& n);

/// Existence of integral solutions to x^2+y^2+z^{ab} = m (conditional on
/// Schinzel (H) for the positive direction) for a, b primes = 1 mod 4.
bool check_abthm(unsigned a, unsigned b, const Int& m);

}  // namespace obstruction::invariants
