#pragma once

#include <vector>

#include "rtfcheck/exactnum/rational.hpp"

namespace rtfcheck::curves {

using exactnum::BigInt;

// Point counts and a_n are checked up to max(kMinValidationBound, 2g + 2).
inline constexpr int kMinValidationBound = 12;

// A curve over F_q given by the numerator P(T) of its zeta function,
// Z(T) = P(T) / ((1 - T)(1 - qT)). Construction validates:
//   * q is a prime power,
//   * P(0) = 1 and deg P = 2g with a nonzero leading coefficient,
//   * the functional equation c_{2g-j} = q^{g-j} c_j,
//   * N_n >= 0, a_n >= 0 and integral, and |N_n - q^n - 1| <= 2g q^{n/2}
//     for n up to the validation bound.
// Violations throw InvalidZeta.
class ZetaData {
 public:
  ZetaData(long q, std::vector<BigInt> numerator);

  long q() const { return q_; }
  int genus() const { return static_cast<int>(numerator_.size() - 1) / 2; }
  const std::vector<BigInt>& numerator() const { return numerator_; }

  friend bool operator==(const ZetaData&, const ZetaData&) = default;

 private:
  long q_;
  std::vector<BigInt> numerator_;
};

bool is_prime_power(long q);

// N_n = #X(F_{q^n}) for n = 1..n_max (index 0 holds N_1).
std::vector<BigInt> point_counts(const ZetaData& z, int n_max);

// a_n = number of closed points of degree n, n = 1..n_max (index 0 holds a_1).
std::vector<BigInt> closed_point_counts(const ZetaData& z, int n_max);

// Number of effective divisors of degree d defined over F_q: the T^d
// coefficient of Z(T).
BigInt effective_divisor_count(const ZetaData& z, int d);

// An unramified double cover Y -> X, given by X and the L-polynomial of the
// associated quadratic character. Y's zeta numerator is P_X(T) * L(eta, T).
class DoubleCover {
 public:
  DoubleCover(ZetaData base, std::vector<BigInt> eta_numerator);

  const ZetaData& base() const { return base_; }
  const std::vector<BigInt>& eta_numerator() const { return eta_; }
  const ZetaData& cover() const { return cover_; }

 private:
  ZetaData base_;
  std::vector<BigInt> eta_;
  ZetaData cover_;
};

std::vector<BigInt> cover_closed_points(const DoubleCover& c, int n_max);

}  // namespace rtfcheck::curves
