#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rtfcheck/rtf/finite_field.hpp"

namespace rtfcheck::rtf {

// Largest q accepted by orbit_census unless overridden.
inline constexpr long kDefaultCensusCap = 11;

// Finite-field model of the orbit invariant: F = F_q (q odd), K = F_{q^2}
// realized as one table field with F = {x : x^q = x}. K embeds in M_2(F) by
// its regular representation on the F-basis {1, theta}, where theta^2 = c is
// a non-square of F; the split algebra F + F embeds diagonally, giving the
// idempotents e = diag(1,0) and f = diag(0,1).
class QuadraticModel {
 public:
  using Elem = FiniteField::Elem;
  // Row-major [[m0, m1], [m2, m3]] with entries in F.
  using Matrix = std::array<Elem, 4>;

  explicit QuadraticModel(long q);

  long q() const { return q_; }
  const FiniteField& field() const { return k_; }

  bool in_base(Elem x) const { return conj(x) == x; }
  Elem conj(Elem x) const { return conj_[x]; }
  Elem trace(Elem x) const { return k_.add(x, conj(x)); }
  Elem norm(Elem x) const { return k_.mul(x, conj(x)); }
  Elem theta() const { return theta_; }
  Elem theta_squared() const { return c_; }

  std::vector<Elem> base_elements() const;
  std::vector<Elem> elements() const;

  // x = a + b theta with a, b in F.
  std::array<Elem, 2> coordinates(Elem x) const;

  Matrix embed_field(Elem x) const;          // alpha_1
  Matrix embed_split(Elem u, Elem v) const;  // alpha_2, requires u, v in F
  Matrix idempotent_e() const { return embed_split(1, 0); }
  Matrix idempotent_f() const { return embed_split(0, 1); }

  Matrix multiply(const Matrix& a, const Matrix& b) const;
  Matrix add(const Matrix& a, const Matrix& b) const;
  Elem determinant(const Matrix& m) const;
  // Scales so that the first nonzero entry is 1: the canonical PGL_2 representative.
  Matrix projective_normalize(const Matrix& m) const;

  // The unique (alpha, beta) in K x K with g = e alpha_1(alpha) + f alpha_1(beta).
  std::array<Elem, 2> decompose(const Matrix& g) const;

 private:
  long q_;
  FiniteField k_;
  std::vector<Elem> conj_;
  Elem theta_ = 0;
  Elem c_ = 0;
};

// xi = alpha conj(beta) / Tr(alpha conj(beta)). Throws Degenerate when the
// trace vanishes; the returned element always has trace 1.
QuadraticModel::Elem pair_invariant(const QuadraticModel& m, QuadraticModel::Elem alpha, QuadraticModel::Elem beta);

// The invariant of an invertible g in M_2(F) via its decomposition. Throws
// NonInvertible when det g = 0, Degenerate when Tr(alpha conj(beta)) = 0.
QuadraticModel::Elem quad_invariant(const QuadraticModel& m, const QuadraticModel::Matrix& g);

struct CensusRecord {
  long q = 0;
  std::uint64_t group_order = 0;          // |PGL_2(F)|
  std::uint64_t double_cosets = 0;        // |A(F)\G(F)/T(F)|
  std::uint64_t degenerate_cosets = 0;    // cosets with Tr(alpha conj(beta)) = 0
  std::uint64_t degenerate_elements = 0;  // elements of G(F) in those cosets
  std::uint64_t nondegenerate_cosets = 0;
  std::uint64_t distinct_invariants = 0;
  std::uint64_t trace_one_elements = 0;   // #{xi in K : Tr(xi) = 1}
  bool constant_on_cosets = true;
  bool all_trace_one = true;
  bool injective = false;   // distinct cosets have distinct invariants
  bool surjective = false;  // every trace-1 element is hit

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Enumerates PGL_2(F), splits it into A(F)-T(F) double cosets and maps each
// element through the invariant. Requires odd prime power q <= cap.
CensusRecord orbit_census(const QuadraticModel& m, long cap = kDefaultCensusCap);

}  // namespace rtfcheck::rtf
