#pragma once

#include <map>
#include <vector>

#include "rtfcheck/exactnum/rational.hpp"
#include "rtfcheck/permchar/partition.hpp"

namespace rtfcheck::permchar {

using exactnum::BigInt;
using exactnum::Rational;

// Number of permutations in S_n with cycle type ct: n! / z_ct.
BigInt class_size(const CycleType& ct);

// z_ct = prod(l) * prod(multiplicity!), the centralizer order.
BigInt centralizer_order(const CycleType& ct);

// psi_i(sigma): the number of sigma-stable i-subsets of {1..n}, i.e. the trace
// of sigma on the permutation module V_i. Read off as the x^i coefficient of
// prod over cycles of (1 + x^l).
BigInt subset_fix_count(const CycleType& ct, int i);

// chi_{[k,n-k]}(ct) by telescoping psi_{n-k} - psi_{n-k-1}.
BigInt two_row_character(int n, int k, const CycleType& ct);

// chi_lambda(ct) by the Murnaghan-Nakayama rule (rim-hook removal on beta
// sets). Independent of the telescoping route.
BigInt mn_character(const Partition& lambda, const CycleType& ct);

// dim rho_lambda by the hook length formula.
BigInt hook_dimension(const Partition& lambda);

// A class function on S_n, tabulated over partitions_of(n).
class ClassFunction {
 public:
  ClassFunction() = default;
  explicit ClassFunction(int n);

  int n() const { return n_; }
  const Rational& at(const CycleType& ct) const;
  void set(const CycleType& ct, Rational value);
  const std::map<CycleType, Rational>& values() const { return values_; }

  ClassFunction& operator+=(const ClassFunction& rhs);
  ClassFunction& operator-=(const ClassFunction& rhs);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

 private:
  int n_ = 0;
  std::map<CycleType, Rational> values_;
};

ClassFunction permutation_character(int n, int i);
ClassFunction two_row_class_function(int n, int k);
ClassFunction mn_class_function(const Partition& lambda);

// (1/n!) sum over classes of |class| * a * b. Both are real-valued, so no
// conjugation is needed.
Rational class_inner_product(const ClassFunction& a, const ClassFunction& b);

// <psi_i, chi_lambda>, with chi_lambda from the Murnaghan-Nakayama oracle.
// Throws InternalError if the inner product is not an integer.
BigInt irreducible_multiplicity(const Partition& lambda, int i, int n);

}  // namespace rtfcheck::permchar
