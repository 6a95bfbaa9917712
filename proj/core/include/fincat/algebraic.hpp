#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// A finite monoid given by its multiplication table; element indices are
/// 0..size-1 and mult[a * size + b] = a·b.
struct FiniteMonoid {
  std::size_t size = 0;
  std::vector<std::size_t> mult;
  std::size_t unit = 0;
  std::vector<std::string> labels;

  std::size_t operator()(std::size_t a, std::size_t b) const { return mult[a * size + b]; }
  std::string label(std::size_t a) const;

  bool operator==(const FiniteMonoid&) const = default;
};

/// Throws MalformedInput unless the table is closed, associative and unital.
void validate_monoid(const FiniteMonoid& m);

FiniteMonoid cyclic_monoid(std::size_t n);  // Z/n under addition
/// {1, z} with z·z = z: a monoid that is not a group.
FiniteMonoid absorbing_monoid();
/// The 16 boolean 2x2 matrices under boolean matrix product. Element k
/// encodes rows as bits (k & 8: m00, 4: m01, 2: m10, 1: m11).
FiniteMonoid boolean_matrix_monoid();

/// A finite group: validated multiplication table plus derived inverses.
class FinGroup {
 public:
  FinGroup() = default;
  /// Throws InvalidGroup unless the table is a group with the given identity.
  FinGroup(std::size_t order, std::vector<std::size_t> mult, std::size_t identity,
           std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t operator()(std::size_t a, std::size_t b) const { return mult_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_.at(a); }
  const std::vector<std::size_t>& table() const noexcept { return mult_; }
  const std::vector<std::size_t>& inverses() const noexcept { return inverse_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t a) const;

  FiniteMonoid as_monoid() const;

  bool operator==(const FinGroup&) const = default;

 private:
  std::size_t order_ = 0;
  std::vector<std::size_t> mult_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::string> labels_;
};

FinGroup cyclic_group(std::size_t n);
/// Permutations of {0..n-1} in lexicographic order; (p·q)(i) = p(q(i)).
FinGroup symmetric_group(std::size_t n);
/// The permutations of symmetric_group(n), element-aligned.
std::vector<std::vector<std::size_t>> permutations_of(std::size_t n);

/// Parity of each element of symmetric_group(n) as a map into cyclic_group(2).
std::vector<std::size_t> sign_map(std::size_t n);

/// True when phi: G -> H (as an element table) is a group homomorphism.
bool is_group_homomorphism(const FinGroup& g, const FinGroup& h,
                           const std::vector<std::size_t>& phi);

}  // namespace fincat
