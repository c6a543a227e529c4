#pragma once

#include "obstruction/arith.hpp"

namespace obstruction::cyclotomic {

using arith::Int;

/// Dense polynomial with arbitrary-precision integer coefficients,
/// coefficient index = degree.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Int& coeff(std::size_t i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  Int eval(const Int& x) const;

  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  /// Exact division; throws std::domain_error if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& d) const;

  bool operator==(const IntPolynomial& o) const = default;

 private:
  std::vector<Int> coeffs_;  // empty = zero polynomial
};

/// X^s - 1.
IntPolynomial x_pow_minus_one(unsigned s);

/// The d-th cyclotomic polynomial, computed by exact division of Y^d - 1
/// by the product of lower-index cyclotomic polynomials. Memoized.
const IntPolynomial& cyclotomic_poly(unsigned d);

/// f_d(Z) = (-n)^phi(d) * phi_d(-Z^b / n), expanded over Z.
/// Monic of degree b * phi(d). Requires d | a.
IntPolynomial build_fd(unsigned a, unsigned b, const Int& n, unsigned d);

/// Exact value f(-z).
Int eval_fd_at_neg_z(const IntPolynomial& f, const Int& z);

/// The factors f_d of X^{ab} + n^a, one per divisor d of a.
struct FdFamily {
  unsigned a = 1;
  unsigned b = 3;
  Int n;
  std::vector<unsigned> divisors;       // of a, ascending
  std::vector<IntPolynomial> members;   // aligned with divisors
};

FdFamily make_fd_family(unsigned a, unsigned b, const Int& n);

}  // namespace obstruction::cyclotomic
