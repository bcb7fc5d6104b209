#pragma once

#include <vector>

#include "rtfcheck/permchar/partition.hpp"
#include "rtfcheck/tensorrep/linalg.hpp"
#include "rtfcheck/tensorrep/operator.hpp"

namespace rtfcheck::tensorrep {

using permchar::CycleType;
using permchar::Partition;

// Largest tensor power the brute-force paths build by default (dim 256).
inline constexpr int kDefaultTensorCap = 8;

// P_sigma for an explicit permutation in one-line notation: the factor at
// position p moves to position perm[p].
TensorOperator permutation_operator(const std::vector<int>& perm);

// P_sigma for the canonical representative of ct.
TensorOperator perm_operator(const CycleType& ct, int n);

// H(e_eps) = sum_i e_{eps with position i flipped}: the action of
// e + f = [[0,1],[1,0]] in sl2 on the tensor power.
TensorOperator yz_operator(int n);

// (dim rho / n!) sum_sigma chi_lambda(sigma) P_sigma for a two-row lambda.
TensorOperator isotypic_projector(const Partition& lambda, int n, int cap = kDefaultTensorCap);

// H restricted to the image of e_{[k,n-k]}, in the basis of pivot columns
// of the integral matrix (n!/dim) e_lambda.
struct IsotypicRestriction {
  Partition lambda;
  std::vector<SignString> basis;
  DenseMatrix<Rational> restricted;
};

IsotypicRestriction restrict_to_isotypic(int n, int k, int cap = kDefaultTensorCap);

// Exact det(t - H|image e_{[k,n-k]}), constant term first.
std::vector<Rational> isotypic_charpoly(int n, int k, int cap = kDefaultTensorCap);

// Eigenvalues of H on image(e_{[k,n-k]}) with multiplicity, ascending.
// Computed from isotypic_charpoly; throws InternalError if it does not split
// over the integers.
std::vector<long> isotypic_spectrum(int n, int k, int cap = kDefaultTensorCap);

// The arithmetic progression -(2k-n), ..., 2k-n in steps of 2, each value
// repeated dim rho_{[k,n-k]} times.
std::vector<long> expected_isotypic_spectrum(int n, int k);

// prod over the expected spectrum of (t - lambda), constant term first.
std::vector<Rational> expected_isotypic_charpoly(int n, int k);

// Tr(H^r o P_sigma) on the full tensor space by exact sparse composition.
BigInt brute_trace(int n, int r, const CycleType& ct, int cap = kDefaultTensorCap);

// Caches H^0..H^{r_max} for repeated brute_trace evaluations at a fixed n.
class BruteTracer {
 public:
  BruteTracer(int n, int r_max, int cap = kDefaultTensorCap);

  int n() const { return n_; }
  int r_max() const { return static_cast<int>(powers_.size()) - 1; }
  BigInt trace(int r, const CycleType& ct) const;

 private:
  int n_;
  std::vector<TensorOperator> powers_;
};

// sum_{k=0}^{d} [sum_{j=k-d}^{d-k} (2j)^r] chi_{[2d-k,k]}(ct), n = 2d. Uses only
// characters, so it has no size cap.
BigInt structured_trace(int n, int r, const CycleType& ct);

// sum_i (2i - n)^r psi_i(ct); for n = 2d this is 2^r sum_i (i-d)^r psi_i.
BigInt weight_formula_trace(int n, int r, const CycleType& ct);

}  // namespace rtfcheck::tensorrep
