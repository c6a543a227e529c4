#include "obstruction/combi.hpp"

#include <sstream>
#include <vector>

namespace obstruction::combi {

DivisorSubset w_of_z(const FdFamily& family, const hilbert::Place& v,
                     const Int& z) {
  DivisorSubset mask = 0;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    Int value = family.members[i].eval(-z);
    if (value == 0)
      throw std::domain_error("w_of_z: f_d(-z) = 0 violates preconditions");
    if (hilbert::hilbert_neg_one(value, v) != 1)
      mask |= DivisorSubset(1) << i;
  }
  return mask;
}

DivisorSubset g_of_tz(const FdFamily& family, const Int& p, int t,
                      const Int& z) {
  DivisorSubset mask = 0;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (t <= 0) {
      mask |= DivisorSubset(1) << i;
      continue;
    }
    Int value = family.members[i].eval(-z);
    if (value == 0)
      throw std::domain_error("g_of_tz: f_d(-z) = 0 violates preconditions");
    if (static_cast<long>(arith::valuation(value, p)) + 1 >= t)
      mask |= DivisorSubset(1) << i;
  }
  return mask;
}

CombiResult combi(unsigned a, unsigned b, const Int& n, const Int& p,
                  const CombiOptions& options) {
  if (a % 2 == 0 || b % 2 == 0 || b < 3)
    throw std::invalid_argument("combi: need odd a >= 1 and odd b >= 3");
  if (n == 0) throw std::domain_error("combi: n == 0");
  if (!arith::is_prime(p)) throw std::invalid_argument("combi: p not prime");
  for (const auto& [q, e] : arith::factorize(b).factors) {
    if (arith::integer_nth_root(n, static_cast<unsigned>(q.get_ui())))
      throw std::invalid_argument(
          "combi: n must not be a q-th power for any prime q | b");
  }

  CombiResult result;
  if (!p.fits_ulong_p())
    throw std::invalid_argument("combi: p out of supported range");
  if (p % 4 == 1) {
    result.subsets.insert(0);
    return result;
  }

  FdFamily family = cyclotomic::make_fd_family(a, b, n);
  hilbert::Place place = hilbert::Place::prime(p);
  Int n_pow_a;
  mpz_pow_ui(n_pow_a.get_mpz_t(), n.get_mpz_t(), a);
  const unsigned long ab = static_cast<unsigned long>(a) * b;

  std::set<DivisorSubset>& w = result.subsets;
  std::vector<Int> level{Int(0)};
  Int p_pow_t = 1;  // p^t
  int t = 0;
  while (!level.empty()) {
    if (t > options.depth_cap) {
      if (!options.prune) break;  // fixed-depth exhaustive mode
      throw std::runtime_error("combi: depth cap exceeded");
    }
    result.stats.max_depth = t;
    std::vector<Int> next;
    for (const Int& z : level) {
      ++result.stats.nodes_visited;
      Int zab;
      mpz_pow_ui(zab.get_mpz_t(), z.get_mpz_t(), ab);
      if (hilbert::hilbert_neg_one(n_pow_a - zab, place) == 1)
        w.insert(w_of_z(family, place, z));
      bool expand = true;
      if (options.prune) {
        DivisorSubset g = g_of_tz(family, p, t, z);
        if (g == 0) {
          expand = false;
        } else if ((g & (g - 1)) == 0) {  // |G| == 1
          DivisorSubset wz = w_of_z(family, place, z);
          expand = !w.contains(wz & ~g) && !w.contains(wz | g);
        }
      }
      if (expand) {
        for (Int i = 0; i < p; ++i) next.push_back(z + i * p_pow_t);
      }
    }
    level = std::move(next);
    p_pow_t *= p;
    ++t;
  }
  return result;
}

std::string subset_to_string(DivisorSubset mask,
                             const std::vector<unsigned>& divisors) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (mask & (DivisorSubset(1) << i)) {
      if (!first) os << ',';
      os << divisors[i];
      first = false;
    }
  }
  os << '}';
  return os.str();
}

}  // namespace obstruction::combi
