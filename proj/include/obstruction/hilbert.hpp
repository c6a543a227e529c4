#pragma once

#include "obstruction/arith.hpp"

namespace obstruction::hilbert {

using arith::Int;

/// A place of Q: the real place or a finite prime.
class Place {
 public:
  static Place real() { return Place(); }
  static Place prime(const Int& p);

  bool is_real() const { return real_; }
  const Int& p() const { return p_; }

  bool operator==(const Place& o) const {
    return real_ == o.real_ && p_ == o.p_;
  }

 private:
  Place() : real_(true) {}
  bool real_ = true;
  Int p_;
};

/// Local invariant of the quaternion algebra (a,-1): 0 or 1/2 in Q/Z.
enum class InvariantValue { Zero, Half };

/// Hilbert symbol (a,-1)_v for a nonzero integer a.
///   real place: +1 iff a > 0
///   p = 2:      +1 iff r_2(a) == 1 mod 4
///   p == 1 mod 4: always +1
///   p == 3 mod 4: +1 iff v_p(a) even
int hilbert_neg_one(const Int& a, const Place& v);

/// Hilbert symbol (num/den, -1)_v for a nonzero rational.
int hilbert_neg_one(const Int& num, const Int& den, const Place& v);

/// +1 -> 0, -1 -> 1/2.
InvariantValue invariant_of_symbol(int s);

}  // namespace obstruction::hilbert
