#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fincat/algebraic.hpp"
#include "fincat/finvect.hpp"

namespace fincat {

struct AlgebraData {
  std::size_t dim = 0;
  ModMatrix mult;  // dim × dim²
  ModMatrix unit;  // dim × 1
};

struct CoalgebraData {
  std::size_t dim = 0;
  ModMatrix comult;  // dim² × dim
  ModMatrix counit;  // 1 × dim
};

struct BimonoidData {
  AlgebraData algebra;
  CoalgebraData coalgebra;
};

struct HopfData {
  BimonoidData bimonoid;
  ModMatrix antipode;  // dim × dim
};

struct DiagramResult {
  std::string name;
  bool passed = false;
  /// First differing entry (row, col) of the two composites.
  std::optional<std::pair<std::size_t, std::size_t>> counterexample;
};

struct DiagramReport {
  std::vector<DiagramResult> diagrams;

  bool ok() const noexcept;
  const DiagramResult* find(const std::string& name) const;
};

/// Associativity and both unit laws. Throws DimensionMismatch naming the edge.
DiagramReport check_algebra(const AlgebraData& a);
/// Coassociativity and both counit laws.
DiagramReport check_coalgebra(const CoalgebraData& c);
/// Algebra and coalgebra laws plus the four compatibility squares:
/// δ∘μ = (μ⊗μ)∘τ23∘(δ⊗δ), ε∘μ = ε⊗ε, δ∘η = η⊗η, ε∘η = 1.
DiagramReport check_bimonoid(const BimonoidData& b);
/// S∗1 = η∘ε = 1∗S, with ∗ the convolution of the FinVect structure.
DiagramReport check_antipode(const HopfData& h);
/// check_bimonoid followed by check_antipode.
DiagramReport check_hopf(const HopfData& h);

/// Convolution f∗g = μ∘(f⊗g)∘δ on End(B).
ModMatrix convolve(const BimonoidData& b, const ModMatrix& f, const ModMatrix& g);

struct AntipodeSolution {
  std::optional<ModMatrix> antipode;
  /// Dimension of the solution space of S∗1 = η∘ε when it is consistent.
  std::size_t nullity = 0;
};

/// Solves S∗1 = η∘ε for S as a linear system in dim² unknowns, then checks
/// 1∗S = η∘ε. Throws NotABimonoid.
AntipodeSolution solve_antipode(const BimonoidData& b);

AlgebraData field_algebra(std::uint64_t p);
CoalgebraData field_coalgebra(std::uint64_t p);

/// μ = (μ1⊗μ2)∘τ23, η = η1⊗η2. Throws ModulusMismatch.
AlgebraData tensor_of_algebras(const AlgebraData& a1, const AlgebraData& a2);
/// δ = τ23∘(δ1⊗δ2), ε = ε1⊗ε2.
CoalgebraData tensor_of_coalgebras(const CoalgebraData& c1, const CoalgebraData& c2);

/// k(G): g1⊗g2 ↦ g1g2, δ(g) = g⊗g, ε(g) = 1, S(g) = g⁻¹.
HopfData group_algebra(const FinGroup& g, std::uint64_t p);
/// Set(G, k) on the basis of point indicators f_g.
HopfData function_hopf(const FinGroup& g, std::uint64_t p);
/// k(M) with the diagonal coalgebra; a bimonoid for any finite monoid.
BimonoidData monoid_algebra(const FiniteMonoid& m, std::uint64_t p);

/// k[X]/(X^{N+1}) with δ(Xⁿ) = Σ_{i+j=n} Xⁱ⊗Xʲ and ε(Xⁿ) = [n = 0].
struct TruncatedPair {
  AlgebraData algebra;
  CoalgebraData coalgebra;
  std::vector<std::vector<std::size_t>> basis;  // words over the letters
  /// The truncated pair is not claimed to be a bialgebra.
  bool bialgebra_asserted = false;
};

TruncatedPair truncated_polynomial(std::size_t degree, std::uint64_t p);
/// Words of length <= degree in shortlex order; concatenation truncated to
/// zero above the degree, deconcatenation coproduct. Throws BudgetExceeded
/// when the total dimension exceeds `budget`.
TruncatedPair truncated_tensor_algebra(std::size_t letters, std::size_t degree, std::uint64_t p,
                                       std::size_t budget = 64);

/// f∘μ1 = μ2∘(f⊗f), f∘η1 = η2.
bool check_algebra_hom(const AlgebraData& a1, const AlgebraData& a2, const ModMatrix& f);
/// (f⊗f)∘δ1 = δ2∘f, ε2∘f = ε1.
bool check_coalgebra_hom(const CoalgebraData& c1, const CoalgebraData& c2, const ModMatrix& f);
bool check_bimonoid_hom(const BimonoidData& b1, const BimonoidData& b2, const ModMatrix& f);

/// Basis map g ↦ φ(g) of group algebras for a group homomorphism φ.
/// Throws InvalidGroup unless φ is a homomorphism.
ModMatrix group_algebra_map(const FinGroup& g, const FinGroup& h, const std::vector<std::size_t>& phi,
                            std::uint64_t p);
/// f∘S1 = S2∘f. Throws NotABimonoid unless f is a bimonoid homomorphism.
bool check_antipode_naturality(const HopfData& h1, const HopfData& h2, const ModMatrix& f);

}  // namespace fincat
