#include "rtfcheck/rtf/finite_field.hpp"

#include <string>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::rtf {

namespace {

using Elem = FiniteField::Elem;
using Poly = std::vector<int>;

Poly digits(Elem a, int p, int m) {
  Poly out(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(a % static_cast<Elem>(p));
    a /= static_cast<Elem>(p);
  }
  return out;
}

Elem undigits(const Poly& poly, int p) {
  Elem out = 0;
  for (std::size_t i = poly.size(); i-- > 0;) out = out * static_cast<Elem>(p) + static_cast<Elem>(poly[i]);
  return out;
}

// a * b mod (x^m + modulus_low), modulus_low holding the lower m coefficients.
Elem poly_mul_mod(Elem a, Elem b, const Poly& modulus_low, int p, int m) {
  const Poly x = digits(a, p, m);
  const Poly y = digits(b, p, m);
  Poly prod(static_cast<std::size_t>(2 * m), 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      prod[static_cast<std::size_t>(i + j)] = (prod[static_cast<std::size_t>(i + j)] + x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)]) % p;
    }
  }
  // x^m = -modulus_low
  for (int e = 2 * m - 1; e >= m; --e) {
    const int c = prod[static_cast<std::size_t>(e)];
    if (c == 0) continue;
    prod[static_cast<std::size_t>(e)] = 0;
    for (int j = 0; j < m; ++j) {
      auto& slot = prod[static_cast<std::size_t>(e - m + j)];
      slot = ((slot - c * modulus_low[static_cast<std::size_t>(j)]) % p + p) % p;
    }
  }
  prod.resize(static_cast<std::size_t>(m));
  return undigits(prod, p);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p) || m < 1) throw InvalidArgument("FiniteField: need a prime p and m >= 1");
  size_ = 1;
  for (int i = 0; i < m; ++i) size_ *= static_cast<Elem>(p);
  if (size_ > 4096) throw InvalidArgument("FiniteField: field of size " + std::to_string(size_) + " is too large for tables");

  add_.resize(size_ * size_);
  neg_.resize(size_);
  for (Elem a = 0; a < size_; ++a) {
    const Poly x = digits(a, p, m);
    Poly negx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) negx[i] = (p - x[i]) % p;
    neg_[a] = undigits(negx, p);
    for (Elem b = 0; b < size_; ++b) {
      const Poly y = digits(b, p, m);
      Poly s(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) s[i] = (x[i] + y[i]) % p;
      add_[a * size_ + b] = undigits(s, p);
    }
  }

  // A modulus is irreducible exactly when the quotient ring has no zero
  // divisors; at these sizes checking that directly is cheap.
  const Elem candidates = size_;
  bool found = false;
  for (Elem low = 0; low < candidates && !found; ++low) {
    const Poly modulus_low = digits(low, p, m);
    if (modulus_low[0] == 0 && m > 1) continue;  // divisible by x
    mul_.assign(size_ * size_, 0);
    bool field = true;
    for (Elem a = 1; a < size_ && field; ++a) {
      for (Elem b = a; b < size_; ++b) {
        const Elem prod = poly_mul_mod(a, b, modulus_low, p, m);
        if (prod == 0) {
          field = false;
          break;
        }
        mul_[a * size_ + b] = prod;
        mul_[b * size_ + a] = prod;
      }
    }
    found = field;
  }
  if (!found) throw InternalError("FiniteField: no irreducible modulus found");

  inv_.assign(size_, 0);
  for (Elem a = 1; a < size_; ++a) {
    for (Elem b = 1; b < size_; ++b) {
      if (mul(a, b) == 1) {
        inv_[a] = b;
        break;
      }
    }
  }

  for (Elem g = 1; g < size_; ++g) {
    Elem x = g;
    Elem order = 1;
    while (x != 1) {
      x = mul(x, g);
      ++order;
    }
    if (order == size_ - 1) {
      primitive_ = g;
      break;
    }
  }
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw InvalidArgument("FiniteField: zero has no inverse");
  return inv_[a];
}

FiniteField::Elem FiniteField::pow(Elem a, unsigned long e) const {
  Elem result = 1;
  Elem base = a;
  while (e) {
    if (e & 1UL) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FiniteField::Elem FiniteField::from_integer(long n) const {
  const long reduced = ((n % p_) + p_) % p_;
  return static_cast<Elem>(reduced);
}

}  // namespace rtfcheck::rtf
