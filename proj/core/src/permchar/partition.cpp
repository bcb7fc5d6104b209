#include "rtfcheck/permchar/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::permchar {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 0) throw InvalidArgument("partition parts must be nonnegative");
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  if (text.empty()) return Partition();
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    const auto field = text.substr(start, comma - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size() || value < 1) {
      throw InvalidArgument("bad partition '" + std::string(text) + "'");
    }
    parts.push_back(value);
    start = comma + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw InvalidArgument("partition parts must be nonincreasing: '" + std::string(text) + "'");
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int col = 0; col < (parts_.empty() ? 0 : parts_.front()); ++col) {
    int height = 0;
    for (int p : parts_) height += p > col ? 1 : 0;
    out.push_back(height);
  }
  return Partition(std::move(out));
}

CycleType CycleType::identity(int n) { return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1)); }

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw InvalidArgument("partitions_of: negative n");
  std::vector<Partition> out;
  std::vector<int> current;
  partitions_rec(n, n, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

Partition two_row(int n, int k) {
  if (n < 0 || 2 * k < n || k > n) {
    throw InvalidArgument("two_row: need n/2 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  return Partition({k, n - k});
}

CycleType cycle_type_of(const std::vector<int>& perm) {
  const auto n = perm.size();
  std::vector<char> seen(n, 0);
  for (int image : perm) {
    if (image < 0 || static_cast<std::size_t>(image) >= n || seen[static_cast<std::size_t>(image)]) {
      throw InvalidArgument("not a permutation");
    }
    seen[static_cast<std::size_t>(image)] = 1;
  }
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<int> lengths;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t j = start; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

std::vector<int> canonical_permutation(const CycleType& ct) {
  std::vector<int> perm(static_cast<std::size_t>(ct.n()));
  int offset = 0;
  for (int len : ct.lengths()) {
    for (int j = 0; j < len; ++j) perm[static_cast<std::size_t>(offset + j)] = offset + (j + 1) % len;
    offset += len;
  }
  return perm;
}

}  // namespace rtfcheck::permchar
