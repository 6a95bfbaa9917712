#include "fincat/algebraic.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

std::string FiniteMonoid::label(std::size_t a) const {
  return a < labels.size() ? labels[a] : fmt::format("m{}", a);
}

void validate_monoid(const FiniteMonoid& m) {
  if (m.size == 0) throw Error(ErrorKind::MalformedInput, "monoid must be nonempty");
  if (m.mult.size() != m.size * m.size)
    throw Error(ErrorKind::MalformedInput, "monoid table has wrong size");
  if (m.unit >= m.size) throw Error(ErrorKind::MalformedInput, "monoid unit out of range");
  for (auto v : m.mult)
    if (v >= m.size) throw Error(ErrorKind::MalformedInput, "monoid table not closed");
  for (std::size_t a = 0; a < m.size; ++a)
    if (m(m.unit, a) != a || m(a, m.unit) != a)
      throw Error(ErrorKind::MalformedInput,
                  fmt::format("unit law fails at element {}", a));
  for (std::size_t a = 0; a < m.size; ++a)
    for (std::size_t b = 0; b < m.size; ++b)
      for (std::size_t c = 0; c < m.size; ++c)
        if (m(m(a, b), c) != m(a, m(b, c)))
          throw Error(ErrorKind::MalformedInput,
                      fmt::format("associativity fails at ({}, {}, {})", a, b, c));
}

FiniteMonoid cyclic_monoid(std::size_t n) {
  FiniteMonoid m;
  m.size = n;
  m.mult.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m.mult[a * n + b] = (a + b) % n;
  m.unit = 0;
  return m;
}

FiniteMonoid absorbing_monoid() {
  FiniteMonoid m;
  m.size = 2;
  m.mult = {0, 1, 1, 1};
  m.unit = 0;
  m.labels = {"1", "z"};
  return m;
}

FiniteMonoid boolean_matrix_monoid() {
  auto entry = [](std::size_t k, int i, int j) {
    return ((k >> (3 - (2 * i + j))) & 1u) != 0;
  };
  FiniteMonoid m;
  m.size = 16;
  m.mult.resize(256);
  for (std::size_t a = 0; a < 16; ++a)
    for (std::size_t b = 0; b < 16; ++b) {
      std::size_t r = 0;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          bool v = (entry(a, i, 0) && entry(b, 0, j)) || (entry(a, i, 1) && entry(b, 1, j));
          if (v) r |= std::size_t{1} << (3 - (2 * i + j));
        }
      m.mult[a * 16 + b] = r;
    }
  m.unit = 0b1001;
  return m;
}

FinGroup::FinGroup(std::size_t order, std::vector<std::size_t> mult, std::size_t identity,
                   std::vector<std::string> labels)
    : order_(order), mult_(std::move(mult)), identity_(identity), labels_(std::move(labels)) {
  FiniteMonoid m{order_, mult_, identity_, {}};
  try {
    validate_monoid(m);
  } catch (const Error& e) {
    throw Error(ErrorKind::InvalidGroup, e.what());
  }
  if (!labels_.empty() && labels_.size() != order_)
    throw Error(ErrorKind::InvalidGroup, "label count differs from group order");
  inverse_.assign(order_, order_);
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b)
      if ((*this)(a, b) == identity_ && (*this)(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    if (inverse_[a] == order_)
      throw Error(ErrorKind::InvalidGroup, fmt::format("element {} has no inverse", a));
  }
}

std::string FinGroup::label(std::size_t a) const {
  return a < labels_.size() ? labels_[a] : fmt::format("g{}", a);
}

FiniteMonoid FinGroup::as_monoid() const { return {order_, mult_, identity_, labels_}; }

FinGroup cyclic_group(std::size_t n) {
  auto m = cyclic_monoid(n);
  return FinGroup(n, m.mult, 0);
}

std::vector<std::vector<std::size_t>> permutations_of(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<std::vector<std::size_t>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FinGroup symmetric_group(std::size_t n) {
  auto perms = permutations_of(n);
  const std::size_t order = perms.size();
  std::vector<std::size_t> mult(order * order);
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      std::vector<std::size_t> ab(n);
      for (std::size_t i = 0; i < n; ++i) ab[i] = perms[a][perms[b][i]];
      mult[a * order + b] = static_cast<std::size_t>(
          std::find(perms.begin(), perms.end(), ab) - perms.begin());
    }
  std::vector<std::string> labels;
  for (const auto& p : perms) labels.push_back(fmt::format("[{}]", fmt::join(p, "")));
  return FinGroup(order, std::move(mult), 0, std::move(labels));
}

std::vector<std::size_t> sign_map(std::size_t n) {
  std::vector<std::size_t> out;
  for (const auto& p : permutations_of(n)) {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j] ? 1 : 0;
    out.push_back(inversions % 2);
  }
  return out;
}

bool is_group_homomorphism(const FinGroup& g, const FinGroup& h,
                           const std::vector<std::size_t>& phi) {
  if (phi.size() != g.order()) return false;
  for (auto v : phi)
    if (v >= h.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (phi[g(a, b)] != h(phi[a], phi[b])) return false;
  return true;
}

}  // namespace fincat
