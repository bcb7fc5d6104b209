#include "rtfcheck/curves/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <map>

#include "rtfcheck/errors.hpp"

namespace rtfcheck::curves {

DivisorShape::DivisorShape(std::vector<ShapeEntry> entries) : entries_(std::move(entries)) {
  for (const auto& e : entries_) {
    if (e.degree < 1 || e.multiplicity < 1) throw InvalidArgument("shape entries need positive degree and multiplicity");
    total_degree_ += e.degree * e.multiplicity;
  }
  std::sort(entries_.begin(), entries_.end());
}

DivisorShape DivisorShape::parse(std::string_view text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw InvalidArgument("bad divisor shape '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(1, text.size() - 2);
  std::vector<ShapeEntry> entries;
  std::size_t start = 0;
  while (!body.empty() && start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string_view::npos) comma = body.size();
    const auto field = body.substr(start, comma - start);
    const auto caret = field.find('^');
    ShapeEntry entry;
    const auto parse_int = [&](std::string_view s, int& value) {
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      return !s.empty() && ec == std::errc() && ptr == s.data() + s.size();
    };
    if (caret == std::string_view::npos || !parse_int(field.substr(0, caret), entry.degree) ||
        !parse_int(field.substr(caret + 1), entry.multiplicity)) {
      throw InvalidArgument("bad divisor shape entry '" + std::string(field) + "'");
    }
    entries.push_back(entry);
    start = comma + 1;
  }
  return DivisorShape(std::move(entries));
}

std::string DivisorShape::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i].degree) + "^" + std::to_string(entries_[i].multiplicity);
  }
  return out + "}";
}

bool DivisorShape::is_multiplicity_free() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const ShapeEntry& e) { return e.multiplicity == 1; });
}

BigInt DivisorShape::splitting_total() const {
  BigInt total = 1;
  for (const auto& e : entries_) total *= e.multiplicity + 1;
  return total;
}

namespace {

// Multiplicity lists (nonincreasing) with the given sum and at most
// max_length parts.
void multiplicity_lists(int remaining, int max_part, int max_length, std::vector<int>& current,
                        std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == max_length) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    multiplicity_lists(remaining - p, p, max_length, current, out);
    current.pop_back();
  }
}

// Ways to give the multiplicities in `mults` to distinct points among
// `available`: available! / ((available - len)! prod_v r_v!).
BigInt placement_count(const BigInt& available, const std::vector<int>& mults) {
  std::map<int, unsigned> repeats;
  for (int m : mults) ++repeats[m];
  BigInt ways = 1;
  BigInt left = available;
  for (const auto& [value, r] : repeats) {
    BigInt choose;
    mpz_bin_ui(choose.get_mpz_t(), left.get_mpz_t(), r);
    ways *= choose;
    left -= r;
  }
  return ways;
}

struct ShapeBuilder {
  const std::vector<BigInt>& counts;
  int degree;
  std::vector<ShapeEntry> entries;
  std::vector<ShapeCount> out;

  void run(int point_degree, int remaining, const BigInt& ways) {
    if (remaining == 0) {
      out.push_back({DivisorShape(entries), ways});
      return;
    }
    if (point_degree > remaining) return;
    const BigInt& available = counts[static_cast<std::size_t>(point_degree - 1)];
    // total multiplicity t placed on points of this degree
    for (int t = remaining / point_degree; t >= 0; --t) {
      if (t == 0) {
        run(point_degree + 1, remaining, ways);
        continue;
      }
      const int max_len = available > t ? t : static_cast<int>(available.get_si());
      std::vector<std::vector<int>> lists;
      std::vector<int> current;
      multiplicity_lists(t, t, max_len, current, lists);
      for (const auto& mults : lists) {
        const std::size_t mark = entries.size();
        for (int m : mults) entries.push_back({point_degree, m});
        run(point_degree + 1, remaining - point_degree * t, ways * placement_count(available, mults));
        entries.resize(mark);
      }
    }
  }
};

}  // namespace

std::vector<ShapeCount> enumerate_shapes(const std::vector<BigInt>& counts, int degree, int cap) {
  if (degree < 0) throw InvalidArgument("enumerate_shapes: negative degree");
  if (degree > cap) {
    throw CapExceeded("enumerate_shapes: degree " + std::to_string(degree) + " exceeds shape cap " + std::to_string(cap));
  }
  if (static_cast<int>(counts.size()) < degree) {
    throw InvalidArgument("enumerate_shapes: need closed-point counts up to degree " + std::to_string(degree));
  }
  for (const auto& c : counts) {
    if (c < 0) throw InvalidArgument("enumerate_shapes: negative closed-point count");
  }
  ShapeBuilder builder{counts, degree, {}, {}};
  builder.run(1, degree, BigInt(1));
  std::vector<ShapeCount> out;
  for (auto& sc : builder.out) {
    if (sc.count != 0) out.push_back(std::move(sc));
  }
  std::sort(out.begin(), out.end(), [](const ShapeCount& a, const ShapeCount& b) { return a.shape < b.shape; });
  return out;
}

BigInt splitting_count(const DivisorShape& shape, int i) {
  const int total = shape.total_degree();
  if (i < 0 || i > total) {
    throw InvalidArgument("splitting_count: i=" + std::to_string(i) + " outside [0, " + std::to_string(total) + "]");
  }
  std::vector<BigInt> poly(static_cast<std::size_t>(total) + 1, 0);
  poly[0] = 1;
  int current = 0;
  for (const auto& e : shape.entries()) {
    std::vector<BigInt> next(poly.size(), 0);
    for (int a = 0; a <= current; ++a) {
      if (poly[static_cast<std::size_t>(a)] == 0) continue;
      for (int j = 0; j <= e.multiplicity; ++j) next[static_cast<std::size_t>(a + j * e.degree)] += poly[static_cast<std::size_t>(a)];
    }
    current += e.degree * e.multiplicity;
    poly = std::move(next);
  }
  return poly[static_cast<std::size_t>(i)];
}

permchar::CycleType shape_cycle_type(const DivisorShape& shape) {
  std::vector<int> lengths;
  for (const auto& e : shape.entries()) {
    if (e.multiplicity != 1) {
      throw MultiplicityUnsupported("shape " + shape.to_string() + " has a point of multiplicity " +
                                    std::to_string(e.multiplicity));
    }
    lengths.push_back(e.degree);
  }
  return permchar::CycleType(std::move(lengths));
}

}  // namespace rtfcheck::curves
