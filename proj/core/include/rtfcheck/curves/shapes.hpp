#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "rtfcheck/exactnum/rational.hpp"
#include "rtfcheck/permchar/partition.hpp"

namespace rtfcheck::curves {

using exactnum::BigInt;

// Shape enumeration stops at this total degree unless overridden.
inline constexpr int kDefaultShapeDegreeCap = 12;

struct ShapeEntry {
  int degree = 1;        // degree of the closed point
  int multiplicity = 1;  // its coefficient in the divisor

  friend bool operator==(const ShapeEntry&, const ShapeEntry&) = default;
  friend auto operator<=>(const ShapeEntry&, const ShapeEntry&) = default;
};

// The multiset of (closed-point degree, multiplicity) of an effective divisor.
// Entries are kept sorted by degree, then multiplicity.
class DivisorShape {
 public:
  DivisorShape() = default;
  explicit DivisorShape(std::vector<ShapeEntry> entries);

  // "{d^m,d^m,...}", e.g. "{1^1,1^1,2^1}"; the empty shape is "{}".
  static DivisorShape parse(std::string_view text);
  std::string to_string() const;

  const std::vector<ShapeEntry>& entries() const { return entries_; }
  int total_degree() const { return total_degree_; }
  bool is_multiplicity_free() const;
  int point_count() const { return static_cast<int>(entries_.size()); }

  // prod over entries of (multiplicity + 1): the number of ways to split the
  // divisor as E1 + E2 with both parts effective and rational.
  BigInt splitting_total() const;

  friend bool operator==(const DivisorShape& a, const DivisorShape& b) { return a.entries_ == b.entries_; }
  friend auto operator<=>(const DivisorShape& a, const DivisorShape& b) { return a.entries_ <=> b.entries_; }

 private:
  std::vector<ShapeEntry> entries_;
  int total_degree_ = 0;
};

struct ShapeCount {
  DivisorShape shape;
  BigInt count;
  friend bool operator==(const ShapeCount&, const ShapeCount&) = default;
};

// All shapes of the given total degree realizable from a curve with
// counts[e-1] closed points of degree e, each paired with the number of
// rational effective divisors of that shape. Sorted by shape.
std::vector<ShapeCount> enumerate_shapes(const std::vector<BigInt>& counts, int degree,
                                         int cap = kDefaultShapeDegreeCap);

// N_i: number of rational decompositions E = E1 + E2 with deg E1 = i.
BigInt splitting_count(const DivisorShape& shape, int i);

// Frobenius cycle type on the geometric points of a reduced divisor.
// Throws MultiplicityUnsupported if any multiplicity exceeds 1.
permchar::CycleType shape_cycle_type(const DivisorShape& shape);

}  // namespace rtfcheck::curves
