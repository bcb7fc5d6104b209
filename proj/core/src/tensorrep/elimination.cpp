#include "rtfcheck/tensorrep/linalg.hpp"

#include "rtfcheck/errors.hpp"

namespace rtfcheck::tensorrep {

RowReduction row_reduce(DenseMatrix<BigInt> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  RowReduction out;

  // Bareiss forward pass: after processing pivot t, every entry below and to
  // the right is a (t+1)-minor of the input, so the division is exact.
  BigInt prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(m(pivot, c), m(row, c));
    }
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m(r, c) = m(row, col) * m(r, c) - m(r, col) * m(row, c);
        mpz_divexact(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), prev.get_mpz_t());
      }
      m(r, col) = 0;
    }
    prev = m(row, col);
    out.pivot_columns.push_back(col);
    ++row;
  }

  const std::size_t rank = out.pivot_columns.size();
  out.rref = DenseMatrix<Rational>(rank, cols);
  for (std::size_t r = 0; r < rank; ++r) {
    const Rational lead(m(r, out.pivot_columns[r]));
    for (std::size_t c = 0; c < cols; ++c) {
      if (m(r, c) != 0) out.rref(r, c) = Rational(m(r, c)) / lead;
    }
  }
  // Back substitution clears the entries above each pivot.
  for (std::size_t t = rank; t-- > 0;) {
    const std::size_t pc = out.pivot_columns[t];
    for (std::size_t r = 0; r < t; ++r) {
      const Rational factor = out.rref(r, pc);
      if (factor.is_zero()) continue;
      for (std::size_t c = pc; c < cols; ++c) {
        if (!out.rref(t, c).is_zero()) out.rref(r, c) -= factor * out.rref(t, c);
      }
    }
  }
  return out;
}

std::vector<Rational> characteristic_polynomial(DenseMatrix<Rational> a) {
  const std::size_t n = a.rows();
  if (a.cols() != n) throw InvalidArgument("characteristic_polynomial: matrix is not square");

  // Similarity transform to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m + 1;
    while (i < n && a(i, m - 1).is_zero()) ++i;
    if (a(m, m - 1).is_zero() && i == n) continue;
    if (a(m, m - 1).is_zero()) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(i, j), a(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(a(j, i), a(j, m));
    }
    const Rational pivot = a(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (a(r, m - 1).is_zero()) continue;
      const Rational u = a(r, m - 1) / pivot;
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(m, j).is_zero()) a(r, j) -= u * a(m, j);
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(j, r).is_zero()) a(j, m) += u * a(j, r);
      }
    }
  }

  // p_k = det(t - A_k) for the leading k x k block, by the Hessenberg recurrence.
  std::vector<std::vector<Rational>> p(n + 1);
  p[0] = {Rational(1)};
  for (std::size_t m = 1; m <= n; ++m) {
    std::vector<Rational> next(m + 1);
    // (t - a_mm) p_{m-1}
    for (std::size_t e = 0; e < p[m - 1].size(); ++e) {
      next[e + 1] += p[m - 1][e];
      next[e] -= a(m - 1, m - 1) * p[m - 1][e];
    }
    Rational sub_product(1);
    for (std::size_t i = m - 1; i-- > 0;) {
      sub_product *= a(i + 1, i);
      if (sub_product.is_zero()) break;
      const Rational coeff = a(i, m - 1) * sub_product;
      if (coeff.is_zero()) continue;
      for (std::size_t e = 0; e < p[i].size(); ++e) next[e] -= coeff * p[i][e];
    }
    p[m] = std::move(next);
  }
  return p[n];
}

std::vector<Rational> poly_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rational> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::map<long, int> integer_roots(std::vector<Rational> poly, long bound, bool* complete) {
  std::map<long, int> roots;
  for (long c = -bound; c <= bound && poly.size() > 1; ++c) {
    while (poly.size() > 1) {
      // Synthetic division by (t - c).
      std::vector<Rational> quotient(poly.size() - 1);
      Rational carry;
      for (std::size_t e = poly.size(); e-- > 1;) {
        carry = poly[e] + carry * Rational(c);
        quotient[e - 1] = carry;
      }
      const Rational remainder = poly[0] + carry * Rational(c);
      if (!remainder.is_zero()) break;
      poly = std::move(quotient);
      ++roots[c];
    }
  }
  if (complete) *complete = poly.size() == 1;
  return roots;
}

}  // namespace rtfcheck::tensorrep
