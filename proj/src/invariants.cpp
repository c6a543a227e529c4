#include "obstruction/invariants.hpp"

namespace obstruction::invariants {

namespace {

unsigned long mod_ui(const Int& x, unsigned long m) {
  Int r = x % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return mpz_get_ui(r.get_mpz_t());
}

// r_2(n)^a == 1 mod 4
bool r2_pow_is_1_mod4(const Int& n, unsigned a) {
  Int unit = n;
  unit >>= mpz_scan1(n.get_mpz_t(), 0);
  return mod_ui(unit, 4) == 1 || a % 2 == 0;
}

InvariantSet exact(const Place& v, bool zero, bool half) {
  return {v, zero, half, Status::Exact};
}

}  // namespace

InvariantSet invariant_set(unsigned a, unsigned b, const Int& n,
                           const Place& v) {
  if (a == 0 || b == 0 || n == 0)
    throw std::domain_error("invariant_set: need a, b > 0 and n != 0");
  if (n < 0 && (a % 2 == 0 || b % 2 == 0))
    throw std::domain_error("invariant_set: need n > 0 or a*b odd");

  if (v.is_real()) return exact(v, true, false);

  const Int& p = v.p();
  const bool a_odd = a % 2 == 1, b_odd = b % 2 == 1;

  if (p == 2) {
    if (a == 1 && b_odd) return exact(v, true, false);
    const bool two_bnmid =
        a >= 2 && r2_pow_is_1_mod4(n, a) && (arith::valuation(n, 2) + 1) % b == 0;
    if (a_odd && b_odd) {
      if (mod_ui(n, 8) == 6) {
        // a >= 3 here; 1/2 is attained, and for b >= 3 nothing else is.
        if (b >= 3) return exact(v, false, true);
        return {v, false, true, Status::LowerBound};
      }
      InvariantSet s{v, true, false, Status::LowerBound};
      if (two_bnmid) {
        s.has_half = true;
        s.status = Status::Exact;
      }
      return s;
    }
    if (two_bnmid) return exact(v, true, true);
    return {v, false, false, Status::NotCovered};
  }

  // Odd prime: 0 is always attained.
  if (mod_ui(p, 4) == 1) return exact(v, true, false);

  const unsigned long vpn = arith::valuation(n, p);
  if (a % 2 == 0 && vpn % 2 == 1) return exact(v, true, true);
  if (a_odd && b_odd) {
    if (Int(Int(a) * n) % p != 0) return exact(v, true, false);
    if (vpn % b != 0) return exact(v, true, false);
    if (Int(Int(a) * b) % p != 0) {
      // p does not divide a*b: full characterization applies.
      bool half = vpn % 2 == 1 && small_root_search(p, a, b, n).has_value();
      return exact(v, true, half);
    }
    return {v, true, false, Status::LowerBound};
  }
  return {v, true, false, Status::LowerBound};
}

std::optional<unsigned long> small_root_search(const Int& p, unsigned a,
                                               unsigned b, const Int& n) {
  if (p == 2 || !arith::is_prime(p))
    throw std::invalid_argument("small_root_search: p must be an odd prime");
  if (Int(Int(a) * b) % p == 0)
    throw std::invalid_argument("small_root_search: requires p coprime to ab");
  if (n == 0) throw std::domain_error("small_root_search: n == 0");
  if (a == 1) return std::nullopt;  // the sum is the single term 1

  const Int r = arith::vp_rp(n, p).unit % p;
  for (Int z = 0; z < p; ++z) {
    Int sum = 0;
    for (unsigned i = 0; i < a; ++i) {
      Int rp, zp;
      mpz_powm_ui(rp.get_mpz_t(), r.get_mpz_t(), a - 1 - i, p.get_mpz_t());
      mpz_powm_ui(zp.get_mpz_t(), z.get_mpz_t(),
                  static_cast<unsigned long>(i) * b, p.get_mpz_t());
      sum += rp * zp;
    }
    if (sum % p == 0) return mpz_get_ui(z.get_mpz_t());
  }
  return std::nullopt;
}

bool check_jagy_obstruction(unsigned a, unsigned b, const Int& n) {
  if (a < 3 || a % 2 == 0 || b < 3 || b % 2 == 0)
    throw std::invalid_argument("check_jagy_obstruction: need odd a, b >= 3");
  if (n == 0) return false;
  if (mod_ui(n, 8) != 6) return false;
  for (const auto& [p, e] : arith::factorize(Int(a) * n).factors) {
    if (mod_ui(p, 4) != 3) continue;
    if (arith::valuation(n, p) % b == 0) return false;
  }
  return true;
}

bool check_strong_approx_failure(unsigned a, unsigned b, const Int& n) {
  if (a == 0 || b == 0 || n == 0)
    throw std::domain_error("check_strong_approx_failure: bad arguments");
  if (n < 0 && (a % 2 == 0 || b % 2 == 0))
    throw std::domain_error(
        "check_strong_approx_failure: need n > 0 or a*b odd");
  if (a >= 2 && r2_pow_is_1_mod4(n, a) &&
      (arith::valuation(n, 2) + 1) % b == 0)
    return true;
  if (n > 0 && a % 2 == 0 && !arith::is_sum_of_two_squares(n)) return true;
  return false;
}

namespace {

// One bullet of the two-prime criterion: true when no obstructing root
// n = m^(1/e1), n = 6 mod 8, exists.
bool abthm_bullet(unsigned e1, unsigned e2, const Int& m) {
  auto n = arith::integer_nth_root(m, e1);
  if (!n || mod_ui(*n, 8) != 6) return true;
  for (const auto& [p, e] : arith::factorize(*n).factors) {
    if (mod_ui(p, 4) != 3) continue;
    unsigned long vpn = arith::valuation(*n, p);
    bool blocked = vpn % e2 != 0 || vpn % 2 == 0 ||
                   !small_root_search(p, e1, e2, *n).has_value();
    if (!blocked) return true;  // this prime permits a solution
  }
  return false;  // n obstructs
}

}  // namespace

bool check_abthm(unsigned a, unsigned b, const Int& m) {
  if (!arith::is_prime(Int(a)) || !arith::is_prime(Int(b)) || a % 4 != 1 ||
      b % 4 != 1)
    throw std::domain_error("check_abthm: a, b must be primes = 1 mod 4");
  if (m == 0) throw std::domain_error("check_abthm: m == 0");
  return abthm_bullet(a, b, m) && abthm_bullet(b, a, m);
}

}  // namespace obstruction::invariants
