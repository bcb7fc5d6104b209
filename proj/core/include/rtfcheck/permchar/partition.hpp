#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace rtfcheck::permchar {

// A partition of n: weakly decreasing positive parts. The empty partition is
// the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  // Parts are sorted into nonincreasing order; trailing zeros are dropped so
  // that [n, 0] reads as [n]. Negative parts are rejected.
  explicit Partition(std::vector<int> parts);

  // Comma-joined parts, e.g. "3,1". The empty partition is "".
  static Partition parse(std::string_view text);
  std::string to_string() const;

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  bool is_two_row() const { return length() <= 2; }
  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Conjugacy class label in S_n: the cycle lengths of a permutation.
struct CycleType {
  Partition shape;

  CycleType() = default;
  explicit CycleType(Partition p) : shape(std::move(p)) {}
  explicit CycleType(std::vector<int> lengths) : shape(std::move(lengths)) {}

  static CycleType identity(int n);
  static CycleType parse(std::string_view text) { return CycleType(Partition::parse(text)); }

  int n() const { return shape.size(); }
  int cycle_count() const { return shape.length(); }
  const std::vector<int>& lengths() const { return shape.parts(); }
  std::string to_string() const { return shape.to_string(); }

  friend bool operator==(const CycleType&, const CycleType&) = default;
  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

// All partitions of n in increasing lexicographic order of their part lists,
// so [1,...,1] comes first and [n] last.
std::vector<Partition> partitions_of(int n);

// The two-row partition [k, n-k]; requires n/2 <= k <= n.
Partition two_row(int n, int k);

// The cycle type of an explicit permutation given in one-line notation
// (perm[i] is the image of i).
CycleType cycle_type_of(const std::vector<int>& perm);

// Canonical representative of a cycle type: cycles laid out on 0..n-1 from
// left to right, longest first. Returned in one-line notation.
std::vector<int> canonical_permutation(const CycleType& ct);

}  // namespace rtfcheck::permchar
