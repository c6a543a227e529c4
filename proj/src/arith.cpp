#include "obstruction/arith.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace obstruction::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin_u64(u64 n, u64 a) {
  if (a % n == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  u64 x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

// Brent's cycle-detection variant of Pollard rho.
u64 rho_u64(u64 n, std::mt19937_64& rng) {
  if ((n & 1) == 0) return 2;
  while (true) {
    u64 c = rng() % (n - 2) + 1;
    u64 y = rng() % n, m = 128, g = 1, r = 1, q = 1, x = 0, ys = 0;
    while (g == 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (mulmod(ys, ys, n) + c) % n;
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      }
    }
    if (g != n) return g;
  }
}

void factor_u64(u64 n, std::map<Int, unsigned>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    out[Int(static_cast<unsigned long>(n))] += 1;
    return;
  }
  u64 d = rho_u64(n, rng);
  factor_u64(d, out, rng);
  factor_u64(n / d, out, rng);
}

// Brent rho on mpz, with batched gcds.
Int rho_mpz(const Int& n, std::mt19937_64& rng) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  gmp_randclass gr(gmp_randinit_default);
  gr.seed(static_cast<unsigned long>(rng()));
  while (true) {
    Int c = gr.get_z_range(n - 3) + 1;
    Int y = gr.get_z_range(n), g = 1, q = 1, x, ys;
    unsigned long r = 1;
    const unsigned long m = 256;
    while (g == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && g == 1; k += m) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = gcd(q, n);
      }
      r <<= 1;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(abs(x - ys), n);
      }
    }
    if (g != n) return g;
  }
}

void factor_mpz(const Int& n, std::map<Int, unsigned>& out,
                std::mt19937_64& rng) {
  if (n == 1) return;
  if (mpz_sizeinbase(n.get_mpz_t(), 2) <= 63) {
    factor_u64(mpz_get_ui(n.get_mpz_t()), out, rng);
    return;
  }
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  // Perfect powers: factor the root once and scale exponents.
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      Int root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        std::map<Int, unsigned> sub;
        factor_mpz(root, sub, rng);
        for (auto& [p, k] : sub) out[p] += k * e;
        return;
      }
    }
  }
  Int d = rho_mpz(n, rng);
  factor_mpz(d, out, rng);
  factor_mpz(n / d, out, rng);
}

const std::vector<u64>& small_primes() {
  static const std::vector<u64> primes = [] {
    const unsigned limit = 1'000'000;
    std::vector<bool> comp(limit + 1, false);
    std::vector<u64> ps;
    for (unsigned i = 2; i <= limit; ++i) {
      if (!comp[i]) {
        ps.push_back(i);
        for (unsigned long j = static_cast<unsigned long>(i) * i; j <= limit;
             j += i)
          comp[j] = true;
      }
    }
    return ps;
  }();
  return primes;
}

}  // namespace

bool is_prime_u64(u64 x) {
  if (x < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % p == 0) return x == p;
  }
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (!miller_rabin_u64(x, a)) return false;
  }
  return true;
}

bool is_prime(const Int& x) {
  if (x < 2) return false;
  if (mpz_sizeinbase(x.get_mpz_t(), 2) <= 63)
    return is_prime_u64(mpz_get_ui(x.get_mpz_t()));
  return mpz_probab_prime_p(x.get_mpz_t(), 40) != 0;
}

Int Factorization::remultiply() const {
  Int r = sign;
  for (const auto& [p, e] : factors) {
    Int pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    r *= pe;
  }
  return r;
}

unsigned long valuation(const Int& x, const Int& p) {
  Int rest;
  return mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

PAdicDecomposition vp_rp(const Int& x, const Int& p) {
  if (x == 0) throw std::domain_error("valuation of zero undefined");
  if (!is_prime(p)) throw std::invalid_argument("vp_rp: p must be prime");
  PAdicDecomposition d;
  d.p = p;
  d.valuation = mpz_remove(d.unit.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
  return d;
}

Factorization factorize(const Int& x) {
  if (x == 0) throw std::domain_error("factorize: zero has no factorization");
  Factorization f;
  f.value = x;
  f.sign = x < 0 ? -1 : 1;
  Int n = abs(x);
  std::map<Int, unsigned> found;
  for (u64 p : small_primes()) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      }
      found[Int(static_cast<unsigned long>(p))] = e;
    }
  }
  if (n > 1) {
    static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
    factor_mpz(n, found, rng);
  }
  f.factors.assign(found.begin(), found.end());
  return f;
}

std::optional<Int> integer_nth_root(const Int& m, unsigned a) {
  if (a == 0 || a % 2 == 0)
    throw std::invalid_argument("integer_nth_root: exponent must be odd");
  if (a == 1) return m;
  Int root;
  mpz_root(root.get_mpz_t(), m.get_mpz_t(), a);
  // mpz_root truncates toward zero; the exact root, if any, is within 1.
  for (Int cand = root - 1; cand <= root + 1; ++cand) {
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), cand.get_mpz_t(), a);
    if (pw == m) return cand;
  }
  return std::nullopt;
}

std::pair<unsigned, Int> largest_power_divisor(const Int& m, unsigned k) {
  if (m == 0) throw std::domain_error("largest_power_divisor: m == 0");
  auto divs = divisors(k);
  for (auto it = divs.rbegin(); it != divs.rend(); ++it) {
    if (auto n = integer_nth_root(m, *it)) return {*it, *n};
  }
  return {1, m};  // d = 1 always succeeds; unreachable fallback
}

bool is_sum_of_two_squares(const Int& m) {
  if (m < 0) throw std::domain_error("is_sum_of_two_squares: m must be >= 0");
  if (m == 0) return true;
  return is_sum_of_two_squares_product({m});
}

bool is_sum_of_two_squares_product(const std::vector<Int>& parts) {
  // Cheap parity filter: if the product of the odd parts is 3 mod 4, some
  // prime 3 mod 4 has odd total exponent.
  Int oddprod = 1;
  for (const Int& part : parts) {
    if (part == 0)
      throw std::domain_error("is_sum_of_two_squares_product: zero part");
    Int u = abs(part);
    u >>= mpz_scan1(u.get_mpz_t(), 0);
    oddprod = oddprod * u % 4;
  }
  if (oddprod % 4 == 3) return false;

  std::map<Int, unsigned> exps;
  for (const Int& part : parts) {
    Int u = abs(part);
    if (u == 1) continue;
    for (const auto& [p, e] : factorize(u).factors) {
      if (p % 4 == 3) exps[p] += e;
    }
  }
  return std::all_of(exps.begin(), exps.end(),
                     [](const auto& pe) { return pe.second % 2 == 0; });
}

std::vector<unsigned> divisors(unsigned x) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= x; ++d) {
    if (x % d == 0) {
      ds.push_back(d);
      if (d != x / d) ds.push_back(x / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

unsigned euler_phi(unsigned d) {
  unsigned result = d;
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % p == 0) {
      result -= result / p;
      while (d % p == 0) d /= p;
    }
  }
  if (d > 1) result -= result / d;
  return result;
}

}  // namespace obstruction::arith
