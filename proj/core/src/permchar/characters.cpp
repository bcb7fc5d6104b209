#include "rtfcheck/permchar/characters.hpp"

#include <algorithm>
#include <set>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::permchar {

BigInt centralizer_order(const CycleType& ct) {
  BigInt z = 1;
  std::map<int, unsigned> mult;
  for (int len : ct.lengths()) {
    z *= len;
    ++mult[len];
  }
  for (const auto& [len, m] : mult) z *= exactnum::factorial(m);
  return z;
}

BigInt class_size(const CycleType& ct) {
  return exactnum::factorial(static_cast<unsigned>(ct.n())) / centralizer_order(ct);
}

BigInt subset_fix_count(const CycleType& ct, int i) {
  const int n = ct.n();
  if (i < 0 || i > n) {
    throw InvalidArgument("subset_fix_count: i=" + std::to_string(i) + " outside [0, " + std::to_string(n) + "]");
  }
  std::vector<BigInt> poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = 1;
  int degree = 0;
  for (int len : ct.lengths()) {
    for (int e = degree; e >= 0; --e) poly[static_cast<std::size_t>(e + len)] += poly[static_cast<std::size_t>(e)];
    degree += len;
  }
  return poly[static_cast<std::size_t>(i)];
}

BigInt two_row_character(int n, int k, const CycleType& ct) {
  if (ct.n() != n) throw InvalidArgument("two_row_character: cycle type is not in S_" + std::to_string(n));
  two_row(n, k);  // range check
  const int low = n - k;
  BigInt value = subset_fix_count(ct, low);
  if (low >= 1) value -= subset_fix_count(ct, low - 1);
  return value;
}

namespace {

// Beta set of lambda with `length` beads: beta_j = lambda_j + (length - 1 - j).
std::vector<int> beta_set(const Partition& lambda, int length) {
  std::vector<int> beta;
  for (int j = 0; j < length; ++j) beta.push_back(lambda[j] + (length - 1 - j));
  return beta;  // strictly decreasing
}

Partition from_beta_set(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  const int length = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int j = 0; j < length; ++j) parts.push_back(beta[static_cast<std::size_t>(j)] - (length - 1 - j));
  return Partition(std::move(parts));
}

using MnCache = std::map<std::pair<Partition, std::size_t>, BigInt>;

// Removes cycles lengths[index..] from lambda one rim hook at a time.
BigInt mn_rec(const Partition& lambda, const std::vector<int>& lengths, std::size_t index, MnCache& cache) {
  if (index == lengths.size()) return lambda.size() == 0 ? 1 : 0;
  const auto key = std::make_pair(lambda, index);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const int hook = lengths[index];
  const int beads = lambda.length();
  const std::vector<int> beta = beta_set(lambda, beads);
  const std::set<int> occupied(beta.begin(), beta.end());

  BigInt total = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) {
    const int target = beta[j] - hook;
    if (target < 0 || occupied.contains(target)) continue;
    // Height of the rim hook = number of beads strictly between target and beta[j].
    int between = 0;
    for (int b : beta) between += (b > target && b < beta[j]) ? 1 : 0;
    std::vector<int> moved = beta;
    moved[j] = target;
    const BigInt sub = mn_rec(from_beta_set(std::move(moved)), lengths, index + 1, cache);
    if (between % 2 == 0) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  cache.emplace(key, total);
  return total;
}

}  // namespace

BigInt mn_character(const Partition& lambda, const CycleType& ct) {
  if (lambda.size() != ct.n()) {
    throw InvalidArgument("mn_character: |lambda|=" + std::to_string(lambda.size()) +
                          " but cycle type has size " + std::to_string(ct.n()));
  }
  MnCache cache;
  return mn_rec(lambda, ct.lengths(), 0, cache);
}

BigInt hook_dimension(const Partition& lambda) {
  const Partition conj = lambda.conjugate();
  BigInt hooks = 1;
  for (int row = 0; row < lambda.length(); ++row) {
    for (int col = 0; col < lambda[row]; ++col) {
      hooks *= (lambda[row] - col - 1) + (conj[col] - row - 1) + 1;
    }
  }
  return exactnum::factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

ClassFunction::ClassFunction(int n) : n_(n) {
  for (const auto& p : partitions_of(n)) values_.emplace(CycleType(p), Rational(0));
}

const Rational& ClassFunction::at(const CycleType& ct) const {
  auto it = values_.find(ct);
  if (it == values_.end()) throw InvalidArgument("class function on S_" + std::to_string(n_) + " has no class " + ct.to_string());
  return it->second;
}

void ClassFunction::set(const CycleType& ct, Rational value) {
  auto it = values_.find(ct);
  if (it == values_.end()) throw InvalidArgument("class function on S_" + std::to_string(n_) + " has no class " + ct.to_string());
  it->second = std::move(value);
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& rhs) {
  if (rhs.n_ != n_) throw InvalidArgument("class functions on different groups");
  for (auto& [ct, v] : values_) v += rhs.at(ct);
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& rhs) {
  if (rhs.n_ != n_) throw InvalidArgument("class functions on different groups");
  for (auto& [ct, v] : values_) v -= rhs.at(ct);
  return *this;
}

ClassFunction permutation_character(int n, int i) {
  ClassFunction f(n);
  for (const auto& [ct, v] : f.values()) f.set(ct, Rational(subset_fix_count(ct, i)));
  return f;
}

ClassFunction two_row_class_function(int n, int k) {
  ClassFunction f(n);
  for (const auto& [ct, v] : f.values()) f.set(ct, Rational(two_row_character(n, k, ct)));
  return f;
}

ClassFunction mn_class_function(const Partition& lambda) {
  ClassFunction f(lambda.size());
  for (const auto& [ct, v] : f.values()) f.set(ct, Rational(mn_character(lambda, ct)));
  return f;
}

Rational class_inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.n() != b.n()) throw InvalidArgument("class functions on different groups");
  Rational sum;
  for (const auto& [ct, va] : a.values()) sum += Rational(class_size(ct)) * va * b.at(ct);
  return sum / Rational(exactnum::factorial(static_cast<unsigned>(a.n())));
}

BigInt irreducible_multiplicity(const Partition& lambda, int i, int n) {
  if (lambda.size() != n) throw InvalidArgument("irreducible_multiplicity: lambda is not a partition of n");
  if (i < 0 || i > n) throw InvalidArgument("irreducible_multiplicity: i out of range");
  const Rational m = class_inner_product(permutation_character(n, i), mn_class_function(lambda));
  if (!m.is_integer() || m.sign() < 0) {
    throw InternalError("multiplicity <psi_" + std::to_string(i) + ", chi_" + lambda.to_string() + "> = " + m.to_string());
  }
  return m.to_integer();
}

}  // namespace rtfcheck::permchar
