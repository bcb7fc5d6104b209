#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rtfcheck/errors.hpp"
#include "rtfcheck/permchar/characters.hpp"
#include "rtfcheck/tensorrep/tensorrep.hpp"

using namespace rtfcheck::tensorrep;
using rtfcheck::permchar::CycleType;
using rtfcheck::permchar::Partition;
using rtfcheck::permchar::hook_dimension;
using rtfcheck::permchar::partitions_of;
using rtfcheck::permchar::subset_fix_count;
using rtfcheck::permchar::two_row;

namespace {

DenseMatrix<Rational> random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  DenseMatrix<Rational> m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(BigInt(num(rng)), BigInt(den(rng)));
  }
  return m;
}

std::size_t gauss_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c].is_zero()) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = 0; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("permutation operator traces") {
  CHECK(perm_operator(CycleType::identity(2), 2).trace() == Rational(4));
  CHECK(perm_operator(CycleType({2}), 2).trace() == Rational(2));
  CHECK(perm_operator(CycleType({2, 1}), 3).trace() == Rational(4));
  CHECK_THROWS_AS(perm_operator(CycleType({2, 1}), 4), rtfcheck::InvalidArgument);
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : partitions_of(n)) {
      CHECK(perm_operator(CycleType(p), n).trace() == Rational(1L << p.length()));
    }
  }
}

TEST_CASE("permutation operator moves factors") {
  // n = 3, perm sends position 0 -> 1, 1 -> 2, 2 -> 0. e_{-++} has its sign
  // at position 0, so the image carries it at position 1: e_{+-+}.
  const auto p = permutation_operator({1, 2, 0});
  CHECK(p.entry(0b010, 0b100) == Rational(1));
  CHECK(p.entry(0b100, 0b010) == Rational(0));
}

TEST_CASE("the flip operator") {
  const auto h1 = yz_operator(1);
  CHECK(h1.entry(0, 1) == Rational(1));
  CHECK(h1.entry(1, 0) == Rational(1));
  CHECK(h1.entry(0, 0) == Rational(0));
  CHECK(h1.entry(1, 1) == Rational(0));

  std::vector<Rational> plus_plus(4);
  plus_plus[0] = 1;
  const auto image = yz_operator(2).apply(plus_plus);
  CHECK(image == std::vector<Rational>{0, 1, 1, 0});  // e_{+-} + e_{-+}

  for (int n = 1; n <= 8; ++n) {
    CHECK(yz_operator(n).trace().is_zero());
    CHECK(yz_operator(n).is_symmetric());
  }
  CHECK_THROWS_AS(yz_operator(0), rtfcheck::InvalidArgument);
}

TEST_CASE("the flip operator commutes with every permutation") {
  for (int n = 1; n <= 8; ++n) {
    const auto h = yz_operator(n);
    for (const auto& p : partitions_of(n)) {
      const auto perm = perm_operator(CycleType(p), n);
      CHECK(compose(h, perm) == compose(perm, h));
    }
  }
}

TEST_CASE("traces depend only on the cycle type") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto h2 = compose(yz_operator(n), yz_operator(n));
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto ct = rtfcheck::permchar::cycle_type_of(perm);
      CHECK(trace_of_product(h2, permutation_operator(perm)) == Rational(brute_trace(n, 2, ct)));
    }
  }
}

TEST_CASE("isotypic projector ranks") {
  CHECK(isotypic_projector(Partition({2}), 2).rank() == 3);
  CHECK(isotypic_projector(Partition({4}), 4).rank() == 5);
  CHECK(isotypic_projector(Partition({3, 1}), 4).rank() == 9);
  CHECK(isotypic_projector(Partition({2, 2}), 4).rank() == 2);
  CHECK_THROWS_AS(isotypic_projector(Partition({2, 1, 1}), 4), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(isotypic_projector(Partition({9}), 9), rtfcheck::CapExceeded);
}

TEST_CASE("isotypic projectors are complete orthogonal idempotents") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<TensorOperator> projectors;
    std::size_t total = 0;
    for (int k = (n + 1) / 2; k <= n; ++k) {
      projectors.push_back(isotypic_projector(two_row(n, k), n));
      const auto& e = projectors.back();
      CHECK(compose(e, e) == e);
      const std::size_t rank = e.rank();
      CHECK(BigInt(static_cast<long>(rank)) == BigInt(2 * k - n + 1) * hook_dimension(two_row(n, k)));
      total += rank;
    }
    CHECK(total == (std::size_t{1} << n));
    TensorOperator sum(n);
    for (std::size_t a = 0; a < projectors.size(); ++a) {
      sum += projectors[a];
      for (std::size_t b = 0; b < projectors.size(); ++b) {
        if (a != b) CHECK(compose(projectors[a], projectors[b]) == TensorOperator(n));
      }
    }
    CHECK(sum == TensorOperator::identity(n));
  }
}

TEST_CASE("isotypic spectra") {
  CHECK(isotypic_spectrum(2, 2) == std::vector<long>{-2, 0, 2});
  CHECK(isotypic_spectrum(2, 1) == std::vector<long>{0});
  CHECK(isotypic_spectrum(4, 3) == std::vector<long>{-2, -2, -2, 0, 0, 0, 2, 2, 2});
  CHECK(expected_isotypic_spectrum(4, 3) == std::vector<long>{-2, -2, -2, 0, 0, 0, 2, 2, 2});
  for (int n = 1; n <= 6; ++n) {
    for (int k = (n + 1) / 2; k <= n; ++k) {
      CHECK(isotypic_charpoly(n, k) == expected_isotypic_charpoly(n, k));
      CHECK(isotypic_spectrum(n, k) == expected_isotypic_spectrum(n, k));
    }
  }
  CHECK_THROWS_AS(isotypic_spectrum(4, 1), rtfcheck::InvalidArgument);
}

TEST_CASE("trace examples") {
  CHECK(brute_trace(2, 2, CycleType::identity(2)) == 8);
  CHECK(brute_trace(2, 1, CycleType::identity(2)) == 0);
  CHECK(brute_trace(4, 2, CycleType::identity(4)) == 64);
  CHECK(structured_trace(2, 2, CycleType({2})) == 8);
  CHECK(structured_trace(2, 0, CycleType({2})) == 2);
  CHECK(structured_trace(4, 2, CycleType::identity(4)) == 64);
  CHECK_THROWS_AS(structured_trace(3, 2, CycleType::identity(3)), rtfcheck::InvalidArgument);
  CHECK_THROWS_AS(brute_trace(10, 1, CycleType::identity(10)), rtfcheck::CapExceeded);
}

TEST_CASE("brute trace agrees with a dense reference") {
  for (int n = 1; n <= 6; ++n) {
    const BruteTracer tracer(n, 4);
    for (const auto& p : partitions_of(n)) {
      const auto perm = oracle::representative(p.parts());
      for (int r = 0; r <= 4; ++r) {
        const long expected = oracle::dense_tensor_trace(perm, r);
        CHECK(tracer.trace(r, CycleType(p)) == expected);
        CHECK(weight_formula_trace(n, r, CycleType(p)) == expected);
      }
    }
  }
}

TEST_CASE("the three trace formulas agree") {
  for (int d = 0; d <= 4; ++d) {
    const int n = 2 * d;
    const BruteTracer tracer(n, 6);
    for (const auto& p : partitions_of(n)) {
      const CycleType ct(p);
      for (int r = 0; r <= 6; ++r) {
        BigInt psi_sum = 0;
        for (int i = 0; i <= n; ++i) psi_sum += rtfcheck::exactnum::ipow(BigInt(i - d), static_cast<unsigned>(r)) * subset_fix_count(ct, i);
        psi_sum *= rtfcheck::exactnum::ipow(BigInt(2), static_cast<unsigned>(r));
        const BigInt brute = tracer.trace(r, ct);
        CHECK(brute == structured_trace(n, r, ct));
        CHECK(brute == psi_sum);
        if (r % 2 == 1) CHECK(brute == 0);
      }
    }
  }
}

TEST_CASE("characteristic polynomial against Faddeev-LeVerrier") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
    const auto m = random_matrix(rng, n);
    std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = m(i, j);
    }
    CHECK(characteristic_polynomial(m) == oracle::faddeev_leverrier(rows));
  }
}

TEST_CASE("fraction-free row reduction") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + static_cast<std::size_t>(trial % 5);
    const std::size_t cols = 1 + static_cast<std::size_t>((trial / 5) % 6);
    DenseMatrix<BigInt> m(rows, cols);
    std::vector<std::vector<Rational>> copy(rows, std::vector<Rational>(cols));
    // Low-rank inputs show up often: duplicate the first row now and then.
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) {
        m(i, j) = (trial % 3 == 0 && i > 0) ? m(0, j) : BigInt(entry(rng));
        copy[i][j] = m(i, j);
      }
    }
    const auto red = row_reduce(m);
    CHECK(red.rank() == gauss_rank(copy));
    for (std::size_t r = 0; r < red.rank(); ++r) {
      for (std::size_t s = 0; s < red.rank(); ++s) CHECK(red.rref(r, red.pivot_columns[s]) == Rational(r == s ? 1 : 0));
    }
    // Appending the RREF rows must not increase the rank: same row space.
    auto stacked = copy;
    for (std::size_t r = 0; r < red.rank(); ++r) {
      std::vector<Rational> row(cols);
      for (std::size_t j = 0; j < cols; ++j) row[j] = red.rref(r, j);
      stacked.push_back(row);
    }
    CHECK(gauss_rank(stacked) == red.rank());
  }
}

TEST_CASE("integer root extraction") {
  // (t - 2)^2 (t + 1)
  const std::vector<Rational> poly{4, 0, -3, 1};
  bool complete = false;
  const auto roots = integer_roots(poly, 5, &complete);
  CHECK(complete);
  CHECK(roots == std::map<long, int>{{-1, 1}, {2, 2}});
  // t^2 + 1 has no integer roots.
  integer_roots({1, 0, 1}, 5, &complete);
  CHECK_FALSE(complete);
}

TEST_CASE("tracer edge cases") {
  const BruteTracer empty(0, 3);
  CHECK(empty.trace(0, CycleType::identity(0)) == 1);
  CHECK(empty.trace(2, CycleType::identity(0)) == 0);
  CHECK_THROWS_AS(BruteTracer(2, 1).trace(2, CycleType::identity(2)), rtfcheck::InvalidArgument);
}
