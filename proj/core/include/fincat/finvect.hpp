#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "fincat/monoidal.hpp"

namespace fincat {

/// Trial division; callers validate a modulus once through ModMatrix.
bool is_prime(std::uint64_t p);

/// A matrix over GF(p). A linear map V -> W is a dim W × dim V matrix acting
/// on column vectors; tensor bases are flattened row-major, (i, j) ↦ i·m + j.
class ModMatrix {
 public:
  ModMatrix() = default;
  /// Zero matrix. Throws MalformedInput unless p is prime.
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p);
  /// Entries are reduced mod p.
  ModMatrix(std::size_t rows, std::size_t cols, std::uint64_t p, std::vector<std::uint64_t> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t operator()(std::size_t i, std::size_t j) const { return entries_.at(i * cols_ + j); }
  void set(std::size_t i, std::size_t j, std::uint64_t v);
  void add_to(std::size_t i, std::size_t j, std::uint64_t v);
  const std::vector<std::uint64_t>& entries() const noexcept { return entries_; }

  bool operator==(const ModMatrix&) const = default;
  auto operator<=>(const ModMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> entries_;
};

ModMatrix identity_matrix(std::size_t n, std::uint64_t p);
/// Column j has a 1 in row perm[j].
ModMatrix permutation_matrix(const std::vector<std::size_t>& perm, std::uint64_t p);

/// a∘b (a·b). Throws ModulusMismatch, DimensionMismatch.
ModMatrix multiply(const ModMatrix& a, const ModMatrix& b);
ModMatrix add(const ModMatrix& a, const ModMatrix& b);
ModMatrix scale(const ModMatrix& a, std::uint64_t s);
ModMatrix transpose(const ModMatrix& a);
/// Kronecker product; throws ModulusMismatch.
ModMatrix kron(const ModMatrix& f, const ModMatrix& g);

/// a⊗b -> b⊗a.
ModMatrix swap_matrix(std::size_t a, std::size_t b, std::uint64_t p);
/// a⊗b⊗c⊗d -> a⊗c⊗b⊗d.
ModMatrix tau23(std::size_t a, std::size_t b, std::size_t c, std::size_t d, std::uint64_t p);

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
std::size_t rank(const ModMatrix& a);
bool is_invertible(const ModMatrix& a);

struct LinearSolution {
  std::optional<ModMatrix> x;  // one solution (free variables set to 0), column vector
  std::size_t nullity = 0;     // dimension of the solution space when consistent
};

/// Solves a·x = b for a column vector b by Gaussian elimination.
LinearSolution solve_linear(const ModMatrix& a, const ModMatrix& b);

/// Strictified FinVect over GF(p): objects are dimensions, ⊗ is kron, and
/// α, λ, ρ are identity matrices; γ is swap_matrix.
using VectMonoidal = MonoidalStructure<std::size_t, ModMatrix>;
VectMonoidal finvect_structure(std::uint64_t p);

}  // namespace fincat
