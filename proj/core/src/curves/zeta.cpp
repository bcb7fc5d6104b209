#include "rtfcheck/curves/zeta.hpp"

#include <algorithm>
#include <string>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::curves {

namespace {

using exactnum::ipow;

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// Power sums s_n of the inverse roots of P, from Newton's identities written
// directly in the coefficients: s_n = -sum_{j<n} c_j s_{n-j} - n c_n.
std::vector<BigInt> power_sums(const std::vector<BigInt>& c, int n_max) {
  std::vector<BigInt> s(static_cast<std::size_t>(n_max) + 1, 0);
  const auto coeff = [&](int j) -> BigInt { return j < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(j)] : BigInt(0); };
  for (int n = 1; n <= n_max; ++n) {
    BigInt value = -BigInt(n) * coeff(n);
    for (int j = 1; j < n; ++j) value -= coeff(j) * s[static_cast<std::size_t>(n - j)];
    s[static_cast<std::size_t>(n)] = value;
  }
  return s;
}

std::vector<BigInt> raw_point_counts(long q, const std::vector<BigInt>& c, int n_max) {
  const std::vector<BigInt> s = power_sums(c, n_max);
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(ipow(BigInt(q), static_cast<unsigned>(n)) + 1 - s[static_cast<std::size_t>(n)]);
  return out;
}

std::vector<BigInt> raw_closed_points(const std::vector<BigInt>& counts) {
  std::vector<BigInt> out;
  const int n_max = static_cast<int>(counts.size());
  for (int n = 1; n <= n_max; ++n) {
    BigInt sum = 0;
    for (int m = 1; m <= n; ++m) {
      if (n % m == 0) sum += mobius(n / m) * counts[static_cast<std::size_t>(m - 1)];
    }
    if (sum % n != 0) throw InvalidZeta("closed-point count a_" + std::to_string(n) + " is not an integer");
    out.push_back(sum / n);
  }
  return out;
}

int validation_bound(int genus) { return std::max(kMinValidationBound, 2 * genus + 2); }

}  // namespace

bool is_prime_power(long q) {
  if (q < 2) return false;
  long p = 2;
  while (p * p <= q && q % p != 0) ++p;
  if (q % p != 0) return true;  // q itself is prime
  while (q % p == 0) q /= p;
  return q == 1;
}

ZetaData::ZetaData(long q, std::vector<BigInt> numerator) : q_(q), numerator_(std::move(numerator)) {
  if (!is_prime_power(q_)) throw InvalidZeta("q=" + std::to_string(q_) + " is not a prime power");
  if (numerator_.empty() || numerator_.front() != 1) throw InvalidZeta("zeta numerator must have constant term 1");
  if (numerator_.back() == 0) throw InvalidZeta("zeta numerator has a zero leading coefficient");
  const int degree = static_cast<int>(numerator_.size()) - 1;
  if (degree % 2 != 0) throw InvalidZeta("zeta numerator has odd degree " + std::to_string(degree));
  const int g = degree / 2;
  for (int j = 0; j <= g; ++j) {
    const BigInt expected = ipow(BigInt(q_), static_cast<unsigned>(g - j)) * numerator_[static_cast<std::size_t>(j)];
    if (numerator_[static_cast<std::size_t>(degree - j)] != expected) {
      throw InvalidZeta("functional equation fails at T^" + std::to_string(degree - j) + ": expected " +
                        expected.get_str() + ", got " + numerator_[static_cast<std::size_t>(degree - j)].get_str());
    }
  }
  const int bound = validation_bound(g);
  const std::vector<BigInt> counts = raw_point_counts(q_, numerator_, bound);
  for (int n = 1; n <= bound; ++n) {
    const BigInt& count = counts[static_cast<std::size_t>(n - 1)];
    if (count < 0) throw InvalidZeta("negative point count N_" + std::to_string(n));
    // |N_n - q^n - 1| <= 2g q^{n/2}, squared to stay in integers.
    const BigInt deviation = count - ipow(BigInt(q_), static_cast<unsigned>(n)) - 1;
    if (deviation * deviation > BigInt(4 * g * g) * ipow(BigInt(q_), static_cast<unsigned>(n))) {
      throw InvalidZeta("N_" + std::to_string(n) + " = " + count.get_str() + " violates the Weil bound");
    }
  }
  const std::vector<BigInt> closed = raw_closed_points(counts);
  for (std::size_t n = 0; n < closed.size(); ++n) {
    if (closed[n] < 0) throw InvalidZeta("negative closed-point count a_" + std::to_string(n + 1));
  }
}

std::vector<BigInt> point_counts(const ZetaData& z, int n_max) {
  if (n_max < 0) throw InvalidArgument("point_counts: negative bound");
  std::vector<BigInt> counts = raw_point_counts(z.q(), z.numerator(), n_max);
  for (std::size_t n = 0; n < counts.size(); ++n) {
    if (counts[n] < 0) throw InvalidZeta("negative point count N_" + std::to_string(n + 1));
  }
  return counts;
}

std::vector<BigInt> closed_point_counts(const ZetaData& z, int n_max) {
  std::vector<BigInt> closed = raw_closed_points(point_counts(z, n_max));
  for (std::size_t n = 0; n < closed.size(); ++n) {
    if (closed[n] < 0) throw InvalidZeta("negative closed-point count a_" + std::to_string(n + 1));
  }
  return closed;
}

BigInt effective_divisor_count(const ZetaData& z, int d) {
  if (d < 0) throw InvalidArgument("effective_divisor_count: negative degree");
  // 1/((1-T)(1-qT)) has T^m coefficient 1 + q + ... + q^m.
  const auto geometric = [&](int m) {
    BigInt sum = 0;
    for (int e = 0; e <= m; ++e) sum += ipow(BigInt(z.q()), static_cast<unsigned>(e));
    return sum;
  };
  BigInt total = 0;
  const int top = std::min<int>(d, static_cast<int>(z.numerator().size()) - 1);
  for (int j = 0; j <= top; ++j) total += z.numerator()[static_cast<std::size_t>(j)] * geometric(d - j);
  return total;
}

namespace {

ZetaData cover_zeta(const ZetaData& base, const std::vector<BigInt>& eta) {
  const int g = base.genus();
  if (g < 1) throw InvalidZeta("a genus-0 base has no unramified double covers");
  if (eta.empty() || eta.front() != 1) throw InvalidZeta("L(eta, T) must have constant term 1");
  if (static_cast<int>(eta.size()) - 1 != 2 * g - 2) {
    throw InvalidZeta("L(eta, T) must have degree 2g-2 = " + std::to_string(2 * g - 2) + ", got " +
                      std::to_string(eta.size() - 1));
  }
  std::vector<BigInt> product(base.numerator().size() + eta.size() - 1, 0);
  for (std::size_t i = 0; i < base.numerator().size(); ++i) {
    for (std::size_t j = 0; j < eta.size(); ++j) product[i + j] += base.numerator()[i] * eta[j];
  }
  try {
    ZetaData cover(base.q(), std::move(product));
    if (cover.genus() != 2 * g - 1) throw InvalidZeta("cover genus is not 2g-1");
    return cover;
  } catch (const InvalidZeta& e) {
    throw InvalidZeta(std::string("double cover rejected: ") + e.what());
  }
}

}  // namespace

DoubleCover::DoubleCover(ZetaData base, std::vector<BigInt> eta_numerator)
    : base_(std::move(base)), eta_(std::move(eta_numerator)), cover_(cover_zeta(base_, eta_)) {}

std::vector<BigInt> cover_closed_points(const DoubleCover& c, int n_max) { return closed_point_counts(c.cover(), n_max); }

}  // namespace rtfcheck::curves
