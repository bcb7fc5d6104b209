#pragma once

#include <cstdint>
#include <vector>

namespace rtfcheck::rtf {

// GF(p^m) with table arithmetic. Elements are 0..size-1, read as base-p digit
// strings of polynomial coefficients (lowest degree first); 0 and 1 are the
// additive and multiplicative identities.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  // Finds a monic irreducible modulus of degree m by search. Intended for
  // small fields (size up to a few thousand).
  FiniteField(int p, int m);

  int characteristic() const { return p_; }
  int degree() const { return m_; }
  Elem size() const { return size_; }

  Elem add(Elem a, Elem b) const { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem inv(Elem a) const;  // throws InvalidArgument for 0
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, unsigned long e) const;

  // The element n * 1.
  Elem from_integer(long n) const;

  // A generator of the multiplicative group.
  Elem primitive_element() const { return primitive_; }

 private:
  int p_;
  int m_;
  Elem size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  Elem primitive_ = 1;
};

}  // namespace rtfcheck::rtf
