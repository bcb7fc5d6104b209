#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "rtfcheck/exactnum/rational.hpp"

namespace rtfcheck::tensorrep {

using exactnum::BigInt;
using exactnum::Rational;

template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Reduced row echelon form of an integer matrix. Forward elimination is
// fraction-free (Bareiss); only the final normalization of the rank x cols
// echelon block goes through rationals.
struct RowReduction {
  std::vector<std::size_t> pivot_columns;
  DenseMatrix<Rational> rref;  // rank x cols, pivot columns are unit vectors

  std::size_t rank() const { return pivot_columns.size(); }
};

RowReduction row_reduce(DenseMatrix<BigInt> m);

// Characteristic polynomial det(t - A), coefficients constant term first,
// computed by reduction to upper Hessenberg form over Q.
std::vector<Rational> characteristic_polynomial(DenseMatrix<Rational> a);

// Polynomial product, coefficients constant term first.
std::vector<Rational> poly_multiply(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Splits a monic polynomial into linear factors (t - c) with integer c in
// [-bound, bound]. Returns root -> multiplicity, or nothing if a factor of
// positive degree is left over.
std::map<long, int> integer_roots(std::vector<Rational> poly, long bound, bool* complete = nullptr);

}  // namespace rtfcheck::tensorrep
