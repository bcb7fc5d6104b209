#pragma once

// Independent reference computations for tests. Nothing here calls into the
// code paths it is used to check: permutations are enumerated explicitly,
// tensor traces use plain dense integer matrices, and divisor counts come
// from labeled enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "rtfcheck/curves/shapes.hpp"
#include "rtfcheck/exactnum/rational.hpp"
#include "rtfcheck/permchar/partition.hpp"

namespace oracle {

using rtfcheck::exactnum::BigInt;
using rtfcheck::exactnum::Rational;
using rtfcheck::permchar::CycleType;

inline std::vector<int> cycles_of(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  std::vector<int> lengths;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t j = s; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

// Cycle type (as a sorted descending vector) -> number of permutations.
inline std::map<std::vector<int>, long> class_sizes_by_enumeration(int n) {
  std::map<std::vector<int>, long> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    ++out[cycles_of(perm)];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// A permutation with the given cycle lengths, laid out left to right.
inline std::vector<int> representative(const std::vector<int>& lengths) {
  std::vector<int> perm;
  int offset = 0;
  for (int len : lengths) {
    for (int j = 0; j < len; ++j) perm.push_back(offset + (j + 1) % len);
    offset += len;
  }
  return perm;
}

// Number of i-subsets S of {0..n-1} with perm(S) = S.
inline long stable_subsets(const std::vector<int>& perm, int i) {
  const int n = static_cast<int>(perm.size());
  long count = 0;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != i) continue;
    std::uint32_t image = 0;
    for (int p = 0; p < n; ++p) {
      if (mask & (1U << p)) image |= 1U << perm[static_cast<std::size_t>(p)];
    }
    count += image == mask ? 1 : 0;
  }
  return count;
}

// Number of standard Young tableaux of shape lambda, by removing corners.
inline long standard_tableaux(std::vector<int> lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  long total = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const bool corner = r + 1 == lambda.size() || lambda[r + 1] < lambda[r];
    if (!corner) continue;
    std::vector<int> smaller = lambda;
    --smaller[r];
    total += standard_tableaux(smaller);
  }
  return total;
}

// Tr(H^r P_perm) on (Q^2)^{(x)n} with dense long matrices. The sign at
// position p is bit n-1-p; P sends the factor at p to position perm[p].
inline long dense_tensor_trace(const std::vector<int>& perm, int r) {
  const int n = static_cast<int>(perm.size());
  const std::size_t dim = std::size_t{1} << n;
  std::vector<long> power(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) power[i * dim + i] = 1;
  for (int step = 0; step < r; ++step) {
    std::vector<long> next(dim * dim, 0);
    for (std::size_t row = 0; row < dim; ++row) {
      for (int p = 0; p < n; ++p) {
        const std::size_t flipped = row ^ (std::size_t{1} << p);
        for (std::size_t col = 0; col < dim; ++col) next[row * dim + col] += power[flipped * dim + col];
      }
    }
    power = std::move(next);
  }
  long trace = 0;
  for (std::size_t eps = 0; eps < dim; ++eps) {
    std::size_t image = 0;
    for (int p = 0; p < n; ++p) {
      if (eps & (std::size_t{1} << (n - 1 - p))) image |= std::size_t{1} << (n - 1 - perm[static_cast<std::size_t>(p)]);
    }
    trace += power[eps * dim + image];  // (H^r)_{eps, sigma eps} = (H^r P)_{sigma eps -> ...}
  }
  return trace;
}

// Effective divisors on labeled closed points: counts[e-1] points of degree
// e. Returns shape -> number of divisors by walking every labeled divisor.
inline std::map<rtfcheck::curves::DivisorShape, long> labeled_divisors(const std::vector<long>& counts, int degree) {
  std::vector<int> point_degrees;
  for (std::size_t e = 0; e < counts.size(); ++e) {
    for (long j = 0; j < counts[e]; ++j) point_degrees.push_back(static_cast<int>(e) + 1);
  }
  std::map<rtfcheck::curves::DivisorShape, long> out;
  std::vector<rtfcheck::curves::ShapeEntry> current;
  std::function<void(std::size_t, int)> walk = [&](std::size_t index, int remaining) {
    if (remaining == 0) {
      ++out[rtfcheck::curves::DivisorShape(current)];
      return;
    }
    if (index == point_degrees.size()) return;
    const int deg = point_degrees[index];
    walk(index + 1, remaining);
    for (int m = 1; m * deg <= remaining; ++m) {
      current.push_back({deg, m});
      walk(index + 1, remaining - m * deg);
      current.pop_back();
    }
  };
  walk(0, degree);
  return out;
}

// Sub-divisors E1 <= E with deg E1 = i, by enumerating every choice of
// 0 <= j <= m per entry.
inline long sub_divisors(const rtfcheck::curves::DivisorShape& shape, int i) {
  const auto& entries = shape.entries();
  long count = 0;
  std::function<void(std::size_t, int)> walk = [&](std::size_t index, int degree) {
    if (index == entries.size()) {
      count += degree == i ? 1 : 0;
      return;
    }
    for (int j = 0; j <= entries[index].multiplicity; ++j) walk(index + 1, degree + j * entries[index].degree);
  };
  walk(0, 0);
  return count;
}

// det(tI - A) by the Faddeev-LeVerrier recursion, constant term first.
inline std::vector<Rational> faddeev_leverrier(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> coeff(n + 1);
  coeff[n] = Rational(1);
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Rational s;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += coeff[n - k + 1];
    }
    m = std::move(next);
    Rational tr;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    }
    coeff[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return coeff;
}

}  // namespace oracle
