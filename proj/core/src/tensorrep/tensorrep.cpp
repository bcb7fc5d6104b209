#include "rtfcheck/tensorrep/tensorrep.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "rtfcheck/errors.hpp"
#include "rtfcheck/permchar/characters.hpp"

namespace rtfcheck::tensorrep {

namespace {

void check_cap(int n, int cap, const char* what) {
  if (n > cap) {
    throw CapExceeded(std::string(what) + ": n=" + std::to_string(n) + " exceeds tensor cap " + std::to_string(cap));
  }
}

SignString permute_sign_string(SignString eps, const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  SignString out = 0;
  for (int p = 0; p < n; ++p) {
    const SignString bit = (eps >> (n - 1 - p)) & 1U;
    out |= bit << (n - 1 - perm[static_cast<std::size_t>(p)]);
  }
  return out;
}

// (n!/dim) e_lambda = sum_sigma chi_lambda(sigma) P_sigma, dense row-major.
std::vector<long> isotypic_integral_matrix(const Partition& lambda, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<long> m(dim * dim, 0);
  std::map<CycleType, long> chi;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    const CycleType ct = permchar::cycle_type_of(perm);
    auto it = chi.find(ct);
    if (it == chi.end()) it = chi.emplace(ct, permchar::mn_character(lambda, ct).get_si()).first;
    if (it->second == 0) continue;
    // Walk sign strings in Gray-code order so each image differs from the
    // previous one by a single moved bit.
    std::vector<SignString> target(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) target[static_cast<std::size_t>(n - 1 - p)] = SignString{1} << (n - 1 - perm[static_cast<std::size_t>(p)]);
    SignString eps = 0;
    SignString image = 0;
    m[0] += it->second;
    for (SignString step = 1; step < dim; ++step) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(step));
      eps ^= SignString{1} << bit;
      image ^= target[bit];
      m[image * dim + eps] += it->second;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return m;
}

void check_two_row(const Partition& lambda, int n) {
  if (lambda.size() != n) throw InvalidArgument("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
  if (!lambda.is_two_row()) {
    throw InvalidArgument("partition " + lambda.to_string() + " has more than two rows; its isotypic component in the tensor space is zero");
  }
}

}  // namespace

TensorOperator permutation_operator(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  permchar::cycle_type_of(perm);  // validates
  TensorOperator out(n);
  for (SignString eps = 0; eps < out.dimension(); ++eps) out.add(permute_sign_string(eps, perm), eps, Rational(1));
  return out;
}

TensorOperator perm_operator(const CycleType& ct, int n) {
  if (ct.n() != n) throw InvalidArgument("perm_operator: cycle type " + ct.to_string() + " is not in S_" + std::to_string(n));
  return permutation_operator(permchar::canonical_permutation(ct));
}

TensorOperator yz_operator(int n) {
  if (n < 1) throw InvalidArgument("yz_operator: n must be positive");
  TensorOperator out(n);
  for (SignString eps = 0; eps < out.dimension(); ++eps) {
    for (int p = 0; p < n; ++p) out.add(eps, flip_position(eps, n, p), Rational(1));
  }
  return out;
}

TensorOperator isotypic_projector(const Partition& lambda, int n, int cap) {
  check_cap(n, cap, "isotypic_projector");
  check_two_row(lambda, n);
  const std::vector<long> m = isotypic_integral_matrix(lambda, n);
  const Rational scale = Rational(permchar::hook_dimension(lambda)) / Rational(exactnum::factorial(static_cast<unsigned>(n)));
  TensorOperator out(n);
  const std::size_t dim = out.dimension();
  for (SignString r = 0; r < dim; ++r) {
    for (SignString c = 0; c < dim; ++c) {
      if (m[r * dim + c] != 0) out.add(r, c, scale * Rational(m[r * dim + c]));
    }
  }
  return out;
}

IsotypicRestriction restrict_to_isotypic(int n, int k, int cap) {
  check_cap(n, cap, "restrict_to_isotypic");
  const Partition lambda = permchar::two_row(n, k);
  const std::vector<long> m = isotypic_integral_matrix(lambda, n);
  const std::size_t dim = std::size_t{1} << n;

  // P_sigma preserves the number of minus signs, so the matrix is block
  // diagonal by weight and each block is reduced on its own.
  std::vector<std::vector<SignString>> by_weight(static_cast<std::size_t>(n) + 1);
  std::vector<std::size_t> local_index(dim);
  for (SignString eps = 0; eps < dim; ++eps) {
    auto& bucket = by_weight[static_cast<std::size_t>(std::popcount(eps))];
    local_index[eps] = bucket.size();
    bucket.push_back(eps);
  }

  std::vector<RowReduction> reductions;
  IsotypicRestriction out{lambda, {}, {}};
  std::map<SignString, std::size_t> basis_position;
  for (const auto& bucket : by_weight) {
    DenseMatrix<BigInt> block(bucket.size(), bucket.size());
    for (std::size_t r = 0; r < bucket.size(); ++r) {
      for (std::size_t c = 0; c < bucket.size(); ++c) block(r, c) = m[bucket[r] * dim + bucket[c]];
    }
    reductions.push_back(row_reduce(std::move(block)));
    for (std::size_t pc : reductions.back().pivot_columns) {
      basis_position.emplace(bucket[pc], out.basis.size());
      out.basis.push_back(bucket[pc]);
    }
  }

  // H M e_p = M H e_p = sum_i M e_{p xor i}; each column M e_q is expanded in
  // the pivot columns of its weight block using the reduced echelon form.
  const std::size_t rank = out.basis.size();
  out.restricted = DenseMatrix<Rational>(rank, rank);
  for (std::size_t col = 0; col < rank; ++col) {
    const SignString p = out.basis[col];
    for (int pos = 0; pos < n; ++pos) {
      const SignString q = flip_position(p, n, pos);
      const auto weight = static_cast<std::size_t>(std::popcount(q));
      const RowReduction& red = reductions[weight];
      for (std::size_t t = 0; t < red.rank(); ++t) {
        const Rational& coeff = red.rref(t, local_index[q]);
        if (coeff.is_zero()) continue;
        const SignString pivot = by_weight[weight][red.pivot_columns[t]];
        out.restricted(basis_position.at(pivot), col) += coeff;
      }
    }
  }
  return out;
}

std::vector<Rational> isotypic_charpoly(int n, int k, int cap) {
  return characteristic_polynomial(restrict_to_isotypic(n, k, cap).restricted);
}

std::vector<long> isotypic_spectrum(int n, int k, int cap) {
  const std::vector<Rational> poly = isotypic_charpoly(n, k, cap);
  bool complete = false;
  const auto roots = integer_roots(poly, n, &complete);
  if (!complete) throw InternalError("characteristic polynomial of H on an isotypic component does not split over Z");
  std::vector<long> out;
  for (const auto& [value, mult] : roots) out.insert(out.end(), static_cast<std::size_t>(mult), value);
  return out;
}

std::vector<long> expected_isotypic_spectrum(int n, int k) {
  const Partition lambda = permchar::two_row(n, k);
  const long top = 2L * k - n;
  const auto mult = permchar::hook_dimension(lambda).get_ui();
  std::vector<long> out;
  for (long v = -top; v <= top; v += 2) out.insert(out.end(), mult, v);
  return out;
}

std::vector<Rational> expected_isotypic_charpoly(int n, int k) {
  std::vector<Rational> poly{Rational(1)};
  for (long v : expected_isotypic_spectrum(n, k)) poly = poly_multiply(poly, {Rational(-v), Rational(1)});
  return poly;
}

BruteTracer::BruteTracer(int n, int r_max, int cap) : n_(n) {
  check_cap(n, cap, "brute_trace");
  if (r_max < 0) throw InvalidArgument("brute_trace: r must be nonnegative");
  powers_.push_back(TensorOperator::identity(n));
  if (r_max == 0) return;
  // With no tensor factors H is the zero map on the one-dimensional space.
  const TensorOperator h = n == 0 ? TensorOperator(0) : yz_operator(n);
  for (int r = 1; r <= r_max; ++r) powers_.push_back(compose(h, powers_.back()));
}

BigInt BruteTracer::trace(int r, const CycleType& ct) const {
  if (r < 0 || r > r_max()) throw InvalidArgument("brute_trace: r outside the cached range");
  return trace_of_product(powers_[static_cast<std::size_t>(r)], perm_operator(ct, n_)).to_integer();
}

BigInt brute_trace(int n, int r, const CycleType& ct, int cap) {
  if (ct.n() != n) throw InvalidArgument("brute_trace: cycle type " + ct.to_string() + " is not in S_" + std::to_string(n));
  return BruteTracer(n, r, cap).trace(r, ct);
}

BigInt structured_trace(int n, int r, const CycleType& ct) {
  if (n % 2 != 0) throw InvalidArgument("structured_trace: n must be even, got " + std::to_string(n));
  if (r < 0) throw InvalidArgument("structured_trace: r must be nonnegative");
  if (ct.n() != n) throw InvalidArgument("structured_trace: cycle type " + ct.to_string() + " is not in S_" + std::to_string(n));
  const int d = n / 2;
  BigInt total = 0;
  for (int k = 0; k <= d; ++k) {
    BigInt eigen_power_sum = 0;
    for (int j = k - d; j <= d - k; ++j) eigen_power_sum += exactnum::ipow(BigInt(2 * j), static_cast<unsigned>(r));
    if (eigen_power_sum == 0) continue;
    total += eigen_power_sum * permchar::two_row_character(n, n - k, ct);
  }
  return total;
}

BigInt weight_formula_trace(int n, int r, const CycleType& ct) {
  if (r < 0) throw InvalidArgument("weight_formula_trace: r must be nonnegative");
  if (ct.n() != n) throw InvalidArgument("weight_formula_trace: cycle type " + ct.to_string() + " is not in S_" + std::to_string(n));
  BigInt total = 0;
  for (int i = 0; i <= n; ++i) {
    total += exactnum::ipow(BigInt(2 * i - n), static_cast<unsigned>(r)) * permchar::subset_fix_count(ct, i);
  }
  return total;
}

}  // namespace rtfcheck::tensorrep
