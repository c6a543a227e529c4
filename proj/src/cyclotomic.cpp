#include "obstruction/cyclotomic.hpp"

#include <map>
#include <mutex>

namespace obstruction::cyclotomic {

IntPolynomial::IntPolynomial(std::vector<Int> coeffs)
    : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Int& IntPolynomial::coeff(std::size_t i) const {
  static const Int zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

Int IntPolynomial::eval(const Int& x) const {
  Int r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * o.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
  std::vector<Int> out(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("divide_exact: division by zero");
  if (is_zero()) return IntPolynomial();
  std::vector<Int> rem = coeffs_;
  int dq = degree() - d.degree();
  if (dq < 0) throw std::domain_error("divide_exact: nonzero remainder");
  std::vector<Int> q(dq + 1, Int(0));
  const Int& lead = d.coeffs_.back();
  for (int i = dq; i >= 0; --i) {
    Int top = rem[i + d.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw std::domain_error("divide_exact: nonzero remainder");
    q[i] = top / lead;
    for (int j = 0; j <= d.degree(); ++j)
      rem[i + j] -= q[i] * d.coeffs_[j];
  }
  for (const Int& c : rem)
    if (c != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(q));
}

IntPolynomial x_pow_minus_one(unsigned s) {
  std::vector<Int> c(s + 1, Int(0));
  c[0] = -1;
  c[s] = 1;
  return IntPolynomial(std::move(c));
}

const IntPolynomial& cyclotomic_poly(unsigned d) {
  if (d == 0) throw std::invalid_argument("cyclotomic_poly: d must be >= 1");
  static std::map<unsigned, IntPolynomial> memo;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = memo.find(d);
  if (it != memo.end()) return it->second;
  // Divisors ascend, so every proper divisor of dd is already present when
  // dd is processed.
  for (unsigned dd : arith::divisors(d)) {
    if (memo.contains(dd)) continue;
    IntPolynomial quot = x_pow_minus_one(dd);
    for (unsigned d2 : arith::divisors(dd)) {
      if (d2 != dd) quot = quot.divide_exact(memo.at(d2));
    }
    memo.emplace(dd, std::move(quot));
  }
  return memo.at(d);
}

IntPolynomial build_fd(unsigned a, unsigned b, const Int& n, unsigned d) {
  if (d == 0 || a % d != 0)
    throw std::invalid_argument("build_fd: d must divide a");
  if (n == 0) throw std::domain_error("build_fd: n == 0");
  const IntPolynomial& phi = cyclotomic_poly(d);
  unsigned deg = arith::euler_phi(d);
  // f_d(Z) = sum_i c_i * (-1)^{deg-i} * n^{deg-i} * Z^{b*i}
  std::vector<Int> out(static_cast<std::size_t>(b) * deg + 1, Int(0));
  for (unsigned i = 0; i <= deg; ++i) {
    Int npow;
    mpz_pow_ui(npow.get_mpz_t(), n.get_mpz_t(), deg - i);
    if ((deg - i) % 2 == 1) npow = -npow;
    out[static_cast<std::size_t>(b) * i] = phi.coeff(i) * npow;
  }
  return IntPolynomial(std::move(out));
}

Int eval_fd_at_neg_z(const IntPolynomial& f, const Int& z) {
  return f.eval(-z);
}

FdFamily make_fd_family(unsigned a, unsigned b, const Int& n) {
  if (a % 2 == 0 || b % 2 == 0 || b < 3)
    throw std::invalid_argument("make_fd_family: need odd a >= 1, odd b >= 3");
  if (n == 0) throw std::domain_error("make_fd_family: n == 0");
  FdFamily fam;
  fam.a = a;
  fam.b = b;
  fam.n = n;
  fam.divisors = arith::divisors(a);
  fam.members.reserve(fam.divisors.size());
  for (unsigned d : fam.divisors) fam.members.push_back(build_fd(a, b, n, d));
  return fam;
}

}  // namespace obstruction::cyclotomic
