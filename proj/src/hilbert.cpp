#include "obstruction/hilbert.hpp"

namespace obstruction::hilbert {

Place Place::prime(const Int& p) {
  if (!arith::is_prime(p)) throw std::invalid_argument("Place: not a prime");
  Place v;
  v.real_ = false;
  v.p_ = p;
  return v;
}

namespace {

// Residue of x mod m in [0, m), for possibly negative x.
unsigned long mod_ui(const Int& x, unsigned long m) {
  Int r = x % static_cast<long>(m);
  if (r < 0) r += static_cast<long>(m);
  return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

int hilbert_neg_one(const Int& a, const Place& v) {
  if (a == 0) throw std::domain_error("hilbert_neg_one: a == 0");
  if (v.is_real()) return a > 0 ? 1 : -1;
  const Int& p = v.p();
  if (p == 2) {
    Int unit = a;
    unit >>= mpz_scan1(a.get_mpz_t(), 0);
    return mod_ui(unit, 4) == 1 ? 1 : -1;
  }
  if (mod_ui(p, 4) == 1) return 1;
  return arith::valuation(a, p) % 2 == 0 ? 1 : -1;
}

int hilbert_neg_one(const Int& num, const Int& den, const Place& v) {
  // (num/den, -1) depends only on the square class, so it equals
  // (num * den, -1).
  return hilbert_neg_one(num * den, v);
}

InvariantValue invariant_of_symbol(int s) {
  if (s != 1 && s != -1)
    throw std::invalid_argument("invariant_of_symbol: symbol must be +-1");
  return s == 1 ? InvariantValue::Zero : InvariantValue::Half;
}

}  // namespace obstruction::hilbert
