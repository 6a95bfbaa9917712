#include "fincat/finvect.hpp"

#include <fmt/format.h>

#include <utility>

#include "fincat/error.hpp"

namespace fincat {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

void require_prime(std::uint64_t p) {
  // fixtures reuse a handful of moduli; remember the last one that passed
  thread_local std::uint64_t last_checked = 0;
  if (p == last_checked) return;
  if (p > (std::uint64_t{1} << 31) || !is_prime(p))
    throw Error(ErrorKind::MalformedInput, fmt::format("modulus {} is not a prime below 2^31", p));
  last_checked = p;
}

void same_modulus(const ModMatrix& a, const ModMatrix& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorKind::ModulusMismatch,
                fmt::format("GF({}) and GF({}) mixed", a.modulus(), b.modulus()));
}

}  // namespace

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p)
    : rows_(rows), cols_(cols), p_(p), entries_(rows * cols, 0) {
  require_prime(p);
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p,
                     std::vector<std::uint64_t> entries)
    : rows_(rows), cols_(cols), p_(p), entries_(std::move(entries)) {
  require_prime(p);
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} entries for a {}x{} matrix", entries_.size(), rows, cols));
  for (auto& v : entries_) v %= p;
}

void ModMatrix::set(std::size_t i, std::size_t j, std::uint64_t v) {
  entries_.at(i * cols_ + j) = v % p_;
}

void ModMatrix::add_to(std::size_t i, std::size_t j, std::uint64_t v) {
  auto& e = entries_.at(i * cols_ + j);
  e = (e + v % p_) % p_;
}

ModMatrix identity_matrix(std::size_t n, std::uint64_t p) {
  ModMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix permutation_matrix(const std::vector<std::size_t>& perm, std::uint64_t p) {
  ModMatrix m(perm.size(), perm.size(), p);
  for (std::size_t j = 0; j < perm.size(); ++j) m.set(perm[j], j, 1);
  return m;
}

ModMatrix multiply(const ModMatrix& a, const ModMatrix& b) {
  same_modulus(a, b);
  if (a.cols() != b.rows())
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("cannot compose {}x{} after {}x{}", a.rows(), a.cols(), b.rows(), b.cols()));
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> out(a.rows() * b.cols(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      std::uint64_t x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& e = out[i * b.cols() + j];
        e = (e + x * b(k, j)) % p;
      }
    }
  return ModMatrix(a.rows(), b.cols(), p, std::move(out));
}

ModMatrix add(const ModMatrix& a, const ModMatrix& b) {
  same_modulus(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw Error(ErrorKind::DimensionMismatch, "sum of differently shaped matrices");
  auto e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return ModMatrix(a.rows(), a.cols(), a.modulus(), std::move(e));
}

ModMatrix scale(const ModMatrix& a, std::uint64_t s) {
  auto e = a.entries();
  s %= a.modulus();
  for (auto& v : e) v *= s;
  return ModMatrix(a.rows(), a.cols(), a.modulus(), std::move(e));
}

ModMatrix transpose(const ModMatrix& a) {
  ModMatrix t(a.cols(), a.rows(), a.modulus());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t.set(j, i, a(i, j));
  return t;
}

ModMatrix kron(const ModMatrix& f, const ModMatrix& g) {
  same_modulus(f, g);
  const std::uint64_t p = f.modulus();
  const std::size_t r = f.rows() * g.rows();
  const std::size_t c = f.cols() * g.cols();
  std::vector<std::uint64_t> out(r * c, 0);
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      std::uint64_t x = f(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l)
          out[(i * g.rows() + k) * c + (j * g.cols() + l)] = x * g(k, l) % p;
    }
  return ModMatrix(r, c, p, std::move(out));
}

ModMatrix swap_matrix(std::size_t a, std::size_t b, std::uint64_t p) {
  std::vector<std::size_t> perm(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) perm[i * b + j] = j * a + i;
  return permutation_matrix(perm, p);
}

ModMatrix tau23(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::uint64_t p) {
  std::vector<std::size_t> perm(a * b * c * d);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j)
      for (std::size_t k = 0; k < c; ++k)
        for (std::size_t l = 0; l < d; ++l)
          perm[((i * b + j) * c + k) * d + l] = ((i * c + k) * b + j) * d + l;
  return permutation_matrix(perm, p);
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorKind::NotInvertible, "zero has no inverse mod p");
  std::uint64_t result = 1;
  std::uint64_t e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

namespace {

// Row-reduces the augmented rows in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols,
                                    std::uint64_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    const std::uint64_t inv = mod_inverse(rows[r][c], p);
    for (auto& v : rows[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t factor = rows[i][c];
      for (std::size_t k = 0; k < rows[i].size(); ++k)
        rows[i][k] = (rows[i][k] + (p - factor) * rows[r][k]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<std::uint64_t>> to_rows(const ModMatrix& a) {
  std::vector<std::vector<std::uint64_t>> rows(a.rows(), std::vector<std::uint64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = a(i, j);
  return rows;
}

}  // namespace

std::size_t rank(const ModMatrix& a) {
  auto rows = to_rows(a);
  return row_reduce(rows, a.cols(), a.modulus()).size();
}

bool is_invertible(const ModMatrix& a) { return a.rows() == a.cols() && rank(a) == a.rows(); }

LinearSolution solve_linear(const ModMatrix& a, const ModMatrix& b) {
  same_modulus(a, b);
  if (b.cols() != 1 || b.rows() != a.rows())
    throw Error(ErrorKind::DimensionMismatch, "right-hand side must be a column of matching height");
  const std::uint64_t p = a.modulus();
  auto rows = to_rows(a);
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(b(i, 0));
  auto pivots = row_reduce(rows, a.cols(), p);
  LinearSolution s;
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][a.cols()] != 0) return s;  // inconsistent
  ModMatrix x(a.cols(), 1, p);
  for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], 0, rows[i][a.cols()]);
  s.x = std::move(x);
  s.nullity = a.cols() - pivots.size();
  return s;
}

VectMonoidal finvect_structure(std::uint64_t p) {
  VectMonoidal s;
  s.name = fmt::format("FinVect(GF({}))", p);
  s.tensor_obj = [](std::size_t a, std::size_t b) { return a * b; };
  s.tensor_mor = [](const ModMatrix& f, const ModMatrix& g) { return kron(f, g); };
  s.unit = 1;
  s.assoc = [p](std::size_t a, std::size_t b, std::size_t c) { return identity_matrix(a * b * c, p); };
  s.lunit = [p](std::size_t a) { return identity_matrix(a, p); };
  s.runit = [p](std::size_t a) { return identity_matrix(a, p); };
  s.braiding = [p](std::size_t a, std::size_t b) { return swap_matrix(a, b, p); };
  s.compose = [](const ModMatrix& g, const ModMatrix& f) { return multiply(g, f); };
  s.identity = [p](std::size_t n) { return identity_matrix(n, p); };
  s.dom = [](const ModMatrix& f) { return f.cols(); };
  s.cod = [](const ModMatrix& f) { return f.rows(); };
  s.is_iso = [](const ModMatrix& f) { return is_invertible(f); };
  return s;
}

}  // namespace fincat
