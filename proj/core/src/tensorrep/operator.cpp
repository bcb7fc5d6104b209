#include "rtfcheck/tensorrep/operator.hpp"

#include <algorithm>
#include <map>

#include "rtfcheck/errors.hpp"
#include "rtfcheck/tensorrep/linalg.hpp"

namespace rtfcheck::tensorrep {

namespace {

constexpr int kMaxTensorFactors = 20;

void check_size(int n) {
  if (n < 0 || n > kMaxTensorFactors) {
    throw InvalidArgument("tensor power n=" + std::to_string(n) + " outside [0, " + std::to_string(kMaxTensorFactors) + "]");
  }
}

}  // namespace

TensorOperator::TensorOperator(int n) : n_(n) {
  check_size(n);
  rows_.resize(std::size_t{1} << n);
}

TensorOperator TensorOperator::identity(int n) {
  TensorOperator out(n);
  for (SignString i = 0; i < out.dimension(); ++i) out.rows_[i].push_back({i, Rational(1)});
  return out;
}

Rational TensorOperator::entry(SignString r, SignString c) const {
  const Row& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, SignString col) { return e.column < col; });
  return (it != row.end() && it->column == c) ? it->value : Rational(0);
}

std::size_t TensorOperator::nonzeros() const {
  std::size_t count = 0;
  for (const auto& row : rows_) count += row.size();
  return count;
}

void TensorOperator::add(SignString r, SignString c, const Rational& value) {
  if (r >= dimension() || c >= dimension()) throw InvalidArgument("operator index out of range");
  if (value.is_zero()) return;
  Row& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, SignString col) { return e.column < col; });
  if (it != row.end() && it->column == c) {
    it->value += value;
    if (it->value.is_zero()) row.erase(it);
  } else {
    row.insert(it, {c, value});
  }
}

std::vector<Rational> TensorOperator::apply(const std::vector<Rational>& v) const {
  if (v.size() != dimension()) throw InvalidArgument("vector length does not match operator dimension");
  std::vector<Rational> out(dimension());
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (const auto& e : rows_[r]) {
      if (!v[e.column].is_zero()) out[r] += e.value * v[e.column];
    }
  }
  return out;
}

Rational TensorOperator::trace() const {
  Rational sum;
  for (SignString i = 0; i < dimension(); ++i) sum += entry(i, i);
  return sum;
}

TensorOperator& TensorOperator::operator+=(const TensorOperator& rhs) {
  if (rhs.n_ != n_) throw InvalidArgument("operators act on different tensor powers");
  for (SignString r = 0; r < dimension(); ++r) {
    for (const auto& e : rhs.rows_[r]) add(r, e.column, e.value);
  }
  return *this;
}

TensorOperator& TensorOperator::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  for (auto& row : rows_) {
    for (auto& e : row) e.value *= scalar;
  }
  return *this;
}

bool TensorOperator::is_symmetric() const {
  for (SignString r = 0; r < dimension(); ++r) {
    for (const auto& e : rows_[r]) {
      if (entry(e.column, r) != e.value) return false;
    }
  }
  return true;
}

std::size_t TensorOperator::rank() const {
  DenseMatrix<BigInt> m(dimension(), dimension());
  for (SignString r = 0; r < dimension(); ++r) {
    BigInt lcm = 1;
    for (const auto& e : rows_[r]) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.value.denominator().get_mpz_t());
    for (const auto& e : rows_[r]) m(r, e.column) = (e.value * Rational(lcm)).to_integer();
  }
  return row_reduce(std::move(m)).rank();
}

TensorOperator compose(const TensorOperator& a, const TensorOperator& b) {
  if (a.n() != b.n()) throw InvalidArgument("operators act on different tensor powers");
  TensorOperator out(a.n());
  std::map<SignString, Rational> acc;
  for (SignString r = 0; r < a.dimension(); ++r) {
    acc.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.column)) acc[eb.column] += ea.value * eb.value;
    }
    for (const auto& [c, v] : acc) {
      if (!v.is_zero()) out.add(r, c, v);
    }
  }
  return out;
}

Rational trace_of_product(const TensorOperator& a, const TensorOperator& b) {
  if (a.n() != b.n()) throw InvalidArgument("operators act on different tensor powers");
  Rational sum;
  for (SignString i = 0; i < a.dimension(); ++i) {
    for (const auto& ea : a.row(i)) {
      const Rational bv = b.entry(ea.column, i);
      if (!bv.is_zero()) sum += ea.value * bv;
    }
  }
  return sum;
}

}  // namespace rtfcheck::tensorrep
