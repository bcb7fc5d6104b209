#pragma once

#include <cstdint>
#include <vector>

#include "rtfcheck/exactnum/rational.hpp"

namespace rtfcheck::tensorrep {

using exactnum::BigInt;
using exactnum::Rational;

// Index of a basis vector e_eps of (Q^2)^{(x)n}. The sign at tensor position
// p (0 = leftmost) is bit n-1-p, with + = 0 and - = 1.
using SignString = std::uint32_t;

inline SignString flip_position(SignString eps, int n, int position) {
  return eps ^ (SignString{1} << (n - 1 - position));
}

// Exact sparse endomorphism of (Q^2)^{(x)n}. Rows hold (column, value) pairs
// sorted by column with no stored zeros.
class TensorOperator {
 public:
  struct Entry {
    SignString column;
    Rational value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };
  using Row = std::vector<Entry>;

  TensorOperator() = default;
  explicit TensorOperator(int n);  // zero operator

  static TensorOperator identity(int n);

  int n() const { return n_; }
  std::size_t dimension() const { return rows_.size(); }
  const Row& row(SignString r) const { return rows_[r]; }
  Rational entry(SignString r, SignString c) const;
  std::size_t nonzeros() const;

  // Adds value at (r, c); a sum that cancels to zero is removed.
  void add(SignString r, SignString c, const Rational& value);

  // this * v
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  Rational trace() const;

  TensorOperator& operator+=(const TensorOperator& rhs);
  TensorOperator& operator*=(const Rational& scalar);
  friend TensorOperator operator+(TensorOperator a, const TensorOperator& b) { return a += b; }
  friend TensorOperator operator*(const Rational& s, TensorOperator a) { return a *= s; }
  friend bool operator==(const TensorOperator&, const TensorOperator&) = default;

  bool is_symmetric() const;

  // Exact rank by fraction-free elimination (entries are cleared of
  // denominators row by row first).
  std::size_t rank() const;

 private:
  int n_ = 0;
  std::vector<Row> rows_;
};

// a o b: apply b first, then a.
TensorOperator compose(const TensorOperator& a, const TensorOperator& b);

// Tr(a o b) without forming the product.
Rational trace_of_product(const TensorOperator& a, const TensorOperator& b);

}  // namespace rtfcheck::tensorrep
