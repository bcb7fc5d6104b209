#include "rtfcheck/rtf/quadratic.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>

#include "rtfcheck/curves/zeta.hpp"
#include "rtfcheck/errors.hpp"

namespace rtfcheck::rtf {

namespace {

// Largest q for which the model builds its tables (|K| = q^2 <= 4096).
constexpr long kMaxModelQ = 63;

std::pair<int, int> prime_power_decomposition(long q) {
  for (int p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    int m = 0;
    while (q % p == 0) {
      q /= p;
      ++m;
    }
    return {p, m};
  }
  return {0, 0};
}

FiniteField make_quadratic_field(long q) {
  if (!curves::is_prime_power(q)) throw InvalidArgument("q=" + std::to_string(q) + " is not a prime power");
  if (q % 2 == 0) throw InvalidArgument("q=" + std::to_string(q) + " has characteristic 2; the invariant needs char != 2");
  if (q > kMaxModelQ) throw InvalidArgument("q=" + std::to_string(q) + " is too large for the table model");
  const auto [p, m] = prime_power_decomposition(q);
  return FiniteField(p, 2 * m);
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

QuadraticModel::QuadraticModel(long q) : q_(q), k_(make_quadratic_field(q)) {
  conj_.resize(k_.size());
  for (Elem x = 0; x < k_.size(); ++x) conj_[x] = k_.pow(x, static_cast<unsigned long>(q_));

  // theta: nonzero with conj(theta) = -theta, so theta^2 is a non-square of F.
  for (Elem x = 1; x < k_.size(); ++x) {
    if (conj(x) == k_.neg(x)) {
      theta_ = x;
      break;
    }
  }
  if (theta_ == 0) throw InternalError("QuadraticModel: no trace-zero element found");
  c_ = k_.mul(theta_, theta_);
  if (!in_base(c_)) throw InternalError("QuadraticModel: theta^2 is not in F");
}

std::vector<QuadraticModel::Elem> QuadraticModel::base_elements() const {
  std::vector<Elem> out;
  for (Elem x = 0; x < k_.size(); ++x) {
    if (in_base(x)) out.push_back(x);
  }
  return out;
}

std::vector<QuadraticModel::Elem> QuadraticModel::elements() const {
  std::vector<Elem> out(k_.size());
  std::iota(out.begin(), out.end(), Elem{0});
  return out;
}

std::array<QuadraticModel::Elem, 2> QuadraticModel::coordinates(Elem x) const {
  // b = (x - conj x) / (2 theta), a = x - b theta.
  const Elem two_theta = k_.add(theta_, theta_);
  const Elem b = k_.div(k_.sub(x, conj(x)), two_theta);
  const Elem a = k_.sub(x, k_.mul(b, theta_));
  return {a, b};
}

QuadraticModel::Matrix QuadraticModel::embed_field(Elem x) const {
  // Columns are the images of 1 and theta: x*1 = a + b theta, x*theta = bc + a theta.
  const auto [a, b] = coordinates(x);
  return {a, k_.mul(b, c_), b, a};
}

QuadraticModel::Matrix QuadraticModel::embed_split(Elem u, Elem v) const {
  if (!in_base(u) || !in_base(v)) throw InvalidArgument("embed_split: entries must lie in F");
  return {u, 0, 0, v};
}

QuadraticModel::Matrix QuadraticModel::multiply(const Matrix& a, const Matrix& b) const {
  return {k_.add(k_.mul(a[0], b[0]), k_.mul(a[1], b[2])), k_.add(k_.mul(a[0], b[1]), k_.mul(a[1], b[3])),
          k_.add(k_.mul(a[2], b[0]), k_.mul(a[3], b[2])), k_.add(k_.mul(a[2], b[1]), k_.mul(a[3], b[3]))};
}

QuadraticModel::Matrix QuadraticModel::add(const Matrix& a, const Matrix& b) const {
  return {k_.add(a[0], b[0]), k_.add(a[1], b[1]), k_.add(a[2], b[2]), k_.add(a[3], b[3])};
}

QuadraticModel::Elem QuadraticModel::determinant(const Matrix& m) const {
  return k_.sub(k_.mul(m[0], m[3]), k_.mul(m[1], m[2]));
}

QuadraticModel::Matrix QuadraticModel::projective_normalize(const Matrix& m) const {
  for (Elem entry : m) {
    if (entry == 0) continue;
    const Elem s = k_.inv(entry);
    return {k_.mul(m[0], s), k_.mul(m[1], s), k_.mul(m[2], s), k_.mul(m[3], s)};
  }
  throw InvalidArgument("projective_normalize: zero matrix");
}

std::array<QuadraticModel::Elem, 2> QuadraticModel::decompose(const Matrix& g) const {
  for (Elem entry : g) {
    if (!in_base(entry)) throw InvalidArgument("decompose: matrix entries must lie in F");
  }
  // e alpha_1(alpha) + f alpha_1(beta) = [[alpha_a, alpha_b c], [beta_b, beta_a]].
  const Elem alpha = k_.add(g[0], k_.mul(k_.div(g[1], c_), theta_));
  const Elem beta = k_.add(g[3], k_.mul(g[2], theta_));
  return {alpha, beta};
}

QuadraticModel::Elem pair_invariant(const QuadraticModel& m, QuadraticModel::Elem alpha, QuadraticModel::Elem beta) {
  const FiniteField& k = m.field();
  const auto product = k.mul(alpha, m.conj(beta));
  const auto tr = m.trace(product);
  if (tr == 0) throw Degenerate("Tr(alpha conj(beta)) = 0; the invariant is undefined");
  const auto xi = k.div(product, tr);
  if (m.trace(xi) != 1) throw InternalError("invariant does not have trace 1");
  return xi;
}

QuadraticModel::Elem quad_invariant(const QuadraticModel& m, const QuadraticModel::Matrix& g) {
  if (m.determinant(g) == 0) throw NonInvertible("g is not invertible");
  const auto [alpha, beta] = m.decompose(g);
  return pair_invariant(m, alpha, beta);
}

CensusRecord orbit_census(const QuadraticModel& m, long cap) {
  if (m.q() > cap) {
    throw CapExceeded("orbit_census: q=" + std::to_string(m.q()) + " exceeds census cap " + std::to_string(cap));
  }
  const FiniteField& k = m.field();
  const std::vector<QuadraticModel::Elem> base = m.base_elements();

  std::vector<QuadraticModel::Matrix> group;
  std::map<QuadraticModel::Matrix, std::size_t> index;
  for (auto a : base) {
    for (auto b : base) {
      for (auto c : base) {
        for (auto d : base) {
          const QuadraticModel::Matrix g{a, b, c, d};
          if (m.determinant(g) == 0 || m.projective_normalize(g) != g) continue;
          index.emplace(g, group.size());
          group.push_back(g);
        }
      }
    }
  }

  // A(F) modulo the centre is generated by diag(gamma, 1); T(F) by alpha_1(omega).
  QuadraticModel::Elem gamma = 0;
  for (auto x : base) {
    if (x == 0) continue;
    QuadraticModel::Elem y = x;
    long order = 1;
    while (y != 1) {
      y = k.mul(y, x);
      ++order;
    }
    if (order == m.q() - 1) {
      gamma = x;
      break;
    }
  }
  const QuadraticModel::Matrix a_gen = m.embed_split(gamma, 1);
  const QuadraticModel::Matrix t_gen = m.embed_field(k.primitive_element());

  DisjointSets cosets(group.size());
  for (std::size_t i = 0; i < group.size(); ++i) {
    cosets.unite(i, index.at(m.projective_normalize(m.multiply(a_gen, group[i]))));
    cosets.unite(i, index.at(m.projective_normalize(m.multiply(group[i], t_gen))));
  }

  CensusRecord record;
  record.q = m.q();
  record.group_order = group.size();
  std::map<std::size_t, std::optional<QuadraticModel::Elem>> coset_invariant;
  for (std::size_t i = 0; i < group.size(); ++i) {
    std::optional<QuadraticModel::Elem> inv;
    try {
      inv = quad_invariant(m, group[i]);
    } catch (const Degenerate&) {
      ++record.degenerate_elements;
    }
    if (inv && m.trace(*inv) != 1) record.all_trace_one = false;
    const std::size_t root = cosets.find(i);
    auto [it, inserted] = coset_invariant.try_emplace(root, inv);
    if (!inserted && it->second != inv) record.constant_on_cosets = false;
  }

  std::set<QuadraticModel::Elem> invariants;
  record.double_cosets = coset_invariant.size();
  for (const auto& [root, inv] : coset_invariant) {
    if (inv) {
      ++record.nondegenerate_cosets;
      invariants.insert(*inv);
    } else {
      ++record.degenerate_cosets;
    }
  }
  record.distinct_invariants = invariants.size();
  for (QuadraticModel::Elem x = 0; x < k.size(); ++x) {
    if (m.trace(x) == 1) ++record.trace_one_elements;
  }
  record.injective = record.constant_on_cosets && record.distinct_invariants == record.nondegenerate_cosets;
  record.surjective = record.distinct_invariants == record.trace_one_elements;
  return record;
}

}  // namespace rtfcheck::rtf
