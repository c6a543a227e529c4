#include "obstruction/oracle.hpp"

namespace obstruction::oracle {

namespace {

// Factor m - z^k into the algebraic parts coming from m = n^a (a | k
// maximal): n^a - z^{ab} = prod_{d | a} f_d(-z). Splitting first keeps the
// numbers handed to the factorizer small. Pure integer arithmetic; the
// telescoping division is exact by construction.
std::vector<Int> algebraic_parts(unsigned k, const Int& m, const Int& z) {
  Int zk;
  mpz_pow_ui(zk.get_mpz_t(), z.get_mpz_t(), k);
  Int total = m - zk;
  if (m == 0) return {total};
  auto [a, n] = arith::largest_power_divisor(m, k);
  if (a == 1) return {total};
  unsigned b = k / a;
  auto divs = arith::divisors(a);
  std::vector<Int> parts;
  for (std::size_t i = 0; i < divs.size(); ++i) {
    Int nd, zdb;
    mpz_pow_ui(nd.get_mpz_t(), n.get_mpz_t(), divs[i]);
    mpz_pow_ui(zdb.get_mpz_t(), z.get_mpz_t(),
               static_cast<unsigned long>(divs[i]) * b);
    Int value = nd - zdb;
    for (std::size_t j = 0; j < i; ++j) {
      if (divs[i] % divs[j] == 0) {
        if (!mpz_divisible_p(value.get_mpz_t(), parts[j].get_mpz_t()))
          return {total};  // defensive: fall back to the unsplit value
        value /= parts[j];
      }
    }
    parts.push_back(value);
  }
  return parts;
}

std::optional<Witness> two_square_split(const Int& r, const Int& z) {
  for (Int x = 0; 2 * x * x <= r; ++x) {
    Int y2 = r - x * x;
    if (mpz_perfect_square_p(y2.get_mpz_t())) {
      Int y;
      mpz_sqrt(y.get_mpz_t(), y2.get_mpz_t());
      return Witness{x, y, z};
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<Witness> witness_search(unsigned k, const Int& m,
                                      unsigned long z_bound) {
  if (k == 0 || k % 2 == 0)
    throw std::invalid_argument("witness_search: k must be odd");
  for (unsigned long i = 0; i <= z_bound; ++i) {
    for (int sgn : {-1, 1}) {
      if (i == 0 && sgn == 1) continue;  // visit z = 0 once
      Int z = sgn < 0 ? -Int(i) : Int(i);
      Int zk;
      mpz_pow_ui(zk.get_mpz_t(), z.get_mpz_t(), k);
      Int r = m - zk;
      if (r < 0) continue;
      if (r == 0) return Witness{0, 0, z};
      std::vector<Int> parts =
          m == 0 ? std::vector<Int>{r} : algebraic_parts(k, m, z);
      if (!arith::is_sum_of_two_squares_product(parts)) continue;
      if (auto w = two_square_split(r, z)) return w;
    }
  }
  return std::nullopt;
}

std::set<DivisorSubset> residue_scan_C(unsigned a, unsigned b, const Int& n,
                                       const Int& p, int depth) {
  if (depth < 1) throw std::invalid_argument("residue_scan_C: depth >= 1");
  cyclotomic::FdFamily fam = cyclotomic::make_fd_family(a, b, n);
  hilbert::Place place = hilbert::Place::prime(p);
  Int n_pow_a, bound;
  mpz_pow_ui(n_pow_a.get_mpz_t(), n.get_mpz_t(), a);
  mpz_pow_ui(bound.get_mpz_t(), p.get_mpz_t(), depth);
  std::set<DivisorSubset> out;
  const unsigned long ab = static_cast<unsigned long>(a) * b;
  for (Int z = 0; z < bound; ++z) {
    Int zab;
    mpz_pow_ui(zab.get_mpz_t(), z.get_mpz_t(), ab);
    Int value = n_pow_a - zab;
    if (value == 0) continue;
    if (hilbert::hilbert_neg_one(value, place) == 1)
      out.insert(combi::w_of_z(fam, place, z));
  }
  return out;
}

bool half_invariant_scan(unsigned a, unsigned b, const Int& n, const Int& p,
                         int depth) {
  if (n == 0) throw std::domain_error("half_invariant_scan: n == 0");
  if (p % 4 == 1) return false;  // (t, -1)_p = +1 for every t
  const unsigned long ab = static_cast<unsigned long>(a) * b;

  if (p == 2) {
    hilbert::Place v2 = hilbert::Place::prime(2);
    Int n_pow_a, bound;
    mpz_pow_ui(n_pow_a.get_mpz_t(), n.get_mpz_t(), a);
    mpz_pow_ui(bound.get_mpz_t(), p.get_mpz_t(), depth);
    for (Int z = 0; z < bound; ++z) {
      Int zb, zab;
      mpz_pow_ui(zb.get_mpz_t(), z.get_mpz_t(), b);
      mpz_pow_ui(zab.get_mpz_t(), z.get_mpz_t(), ab);
      Int lower = n - zb, full = n_pow_a - zab;
      if (lower == 0 || full == 0) continue;
      if (hilbert::hilbert_neg_one(full, v2) == 1 &&
          hilbert::hilbert_neg_one(lower, v2) == -1)
        return true;
    }
    return false;
  }

  // p = 3 mod 4: the second symbol can only be -1 when p | n - z^b, so only
  // residue classes with z^b = n mod p need lifting.
  const unsigned long E = 64;
  Int modulus;
  mpz_pow_ui(modulus.get_mpz_t(), p.get_mpz_t(), E);
  Int n_mod = n % modulus;
  if (n_mod < 0) n_mod += modulus;
  Int na_mod;
  mpz_powm_ui(na_mod.get_mpz_t(), n_mod.get_mpz_t(), a, modulus.get_mpz_t());

  std::vector<Int> roots;
  for (Int z0 = 0; z0 < p; ++z0) {
    Int zb;
    mpz_powm_ui(zb.get_mpz_t(), z0.get_mpz_t(), b, p.get_mpz_t());
    if ((n_mod - zb) % p == 0) roots.push_back(z0);
  }
  if (roots.empty()) return false;

  Int lifts = 1;
  for (int i = 1; i < depth; ++i) lifts *= p;
  for (const Int& z0 : roots) {
    for (Int j = 0; j < lifts; ++j) {
      Int z = z0 + j * p;
      Int zb, zab;
      mpz_powm_ui(zb.get_mpz_t(), z.get_mpz_t(), b, modulus.get_mpz_t());
      mpz_powm_ui(zab.get_mpz_t(), z.get_mpz_t(), ab, modulus.get_mpz_t());
      Int lower = (n_mod - zb) % modulus;
      Int full = (na_mod - zab) % modulus;
      if (lower < 0) lower += modulus;
      if (full < 0) full += modulus;
      if (lower == 0 || full == 0) {
        // Valuation at or above E, or a genuine zero: decide exactly.
        Int zbe, zabe;
        mpz_pow_ui(zbe.get_mpz_t(), z.get_mpz_t(), b);
        mpz_pow_ui(zabe.get_mpz_t(), z.get_mpz_t(), ab);
        Int na;
        mpz_pow_ui(na.get_mpz_t(), n.get_mpz_t(), a);
        Int el = n - zbe, ef = na - zabe;
        if (el == 0 || ef == 0) continue;
        hilbert::Place place = hilbert::Place::prime(p);
        if (hilbert::hilbert_neg_one(ef, place) == 1 &&
            hilbert::hilbert_neg_one(el, place) == -1)
          return true;
        continue;
      }
      if (arith::valuation(full, p) % 2 == 0 &&
          arith::valuation(lower, p) % 2 == 1)
        return true;
    }
  }
  return false;
}

}  // namespace obstruction::oracle
