#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace obstruction::arith {

using Int = mpz_class;

/// Prime factorization of a nonzero integer: sign * prod(p_i^e_i) = value.
/// Primes are strictly increasing.
struct Factorization {
  Int value;
  int sign = 1;
  std::vector<std::pair<Int, unsigned>> factors;

  Int remultiply() const;
};

/// x = p^valuation * unit with p coprime to unit.
struct PAdicDecomposition {
  Int p;
  unsigned long valuation = 0;
  Int unit;
};

/// Primality test: deterministic Miller-Rabin below 2^64,
/// 40 probabilistic rounds above.
bool is_prime(const Int& x);
bool is_prime_u64(std::uint64_t x);

/// p-adic valuation and unit part of x != 0. Throws std::domain_error on
/// x == 0 and std::invalid_argument if p is not prime.
PAdicDecomposition vp_rp(const Int& x, const Int& p);

/// Valuation only, without the primality check (p assumed prime, x != 0).
unsigned long valuation(const Int& x, const Int& p);

/// Complete factorization of x != 0. Trial division up to 10^6, then
/// Pollard rho (Brent variant) on remaining composites.
Factorization factorize(const Int& x);

/// The unique integer n with n^a = m, if one exists (a odd, so unique).
std::optional<Int> integer_nth_root(const Int& m, unsigned a);

/// Largest divisor a of k such that m is an a-th power, with the root n.
/// Throws std::domain_error on m == 0.
std::pair<unsigned, Int> largest_power_divisor(const Int& m, unsigned k);

/// True iff m = x^2 + y^2 has an integer solution, decided by the parity
/// of exponents of primes congruent 3 mod 4. Requires m >= 0.
bool is_sum_of_two_squares(const Int& m);

/// Same test for |parts[0] * parts[1] * ...| with each part factored
/// separately; exponents of a prime appearing in several parts are summed.
/// Every part must be nonzero.
bool is_sum_of_two_squares_product(const std::vector<Int>& parts);

/// Positive divisors of x in ascending order.
std::vector<unsigned> divisors(unsigned x);

/// Euler phi for small arguments.
unsigned euler_phi(unsigned d);

}  // namespace obstruction::arith
