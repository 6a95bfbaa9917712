#include "fincat/hopf.hpp"

#include <fmt/format.h>

#include <map>

#include "fincat/adjunction.hpp"
#include "fincat/error.hpp"

namespace fincat {

bool DiagramReport::ok() const noexcept {
  for (const auto& d : diagrams)
    if (!d.passed) return false;
  return true;
}

const DiagramResult* DiagramReport::find(const std::string& name) const {
  for (const auto& d : diagrams)
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

void shape(const ModMatrix& m, std::size_t rows, std::size_t cols, const char* edge) {
  if (m.rows() != rows || m.cols() != cols)
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("{} is {}x{}, expected {}x{}", edge, m.rows(), m.cols(), rows, cols));
}

DiagramResult compare(std::string name, const ModMatrix& lhs, const ModMatrix& rhs) {
  DiagramResult r{std::move(name), lhs == rhs, std::nullopt};
  if (r.passed) return r;
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    r.counterexample = std::pair<std::size_t, std::size_t>{0, 0};
    return r;
  }
  for (std::size_t i = 0; i < lhs.rows() && !r.counterexample; ++i)
    for (std::size_t j = 0; j < lhs.cols(); ++j)
      if (lhs(i, j) != rhs(i, j)) {
        r.counterexample = std::pair{i, j};
        break;
      }
  return r;
}

void require_algebra_shape(const AlgebraData& a) {
  shape(a.mult, a.dim, a.dim * a.dim, "mult");
  shape(a.unit, a.dim, 1, "unit");
}

void require_coalgebra_shape(const CoalgebraData& c) {
  shape(c.comult, c.dim * c.dim, c.dim, "comult");
  shape(c.counit, 1, c.dim, "counit");
}

void require_same_dim(const BimonoidData& b) {
  if (b.algebra.dim != b.coalgebra.dim)
    throw Error(ErrorKind::DimensionMismatch, "algebra and coalgebra dimensions differ");
}

}  // namespace

DiagramReport check_algebra(const AlgebraData& a) {
  require_algebra_shape(a);
  const auto p = a.mult.modulus();
  const auto id = identity_matrix(a.dim, p);
  DiagramReport r;
  r.diagrams.push_back(compare("associativity", multiply(a.mult, kron(a.mult, id)),
                               multiply(a.mult, kron(id, a.mult))));
  r.diagrams.push_back(compare("left-unit", multiply(a.mult, kron(a.unit, id)), id));
  r.diagrams.push_back(compare("right-unit", multiply(a.mult, kron(id, a.unit)), id));
  return r;
}

DiagramReport check_coalgebra(const CoalgebraData& c) {
  require_coalgebra_shape(c);
  const auto p = c.comult.modulus();
  const auto id = identity_matrix(c.dim, p);
  DiagramReport r;
  r.diagrams.push_back(compare("coassociativity", multiply(kron(c.comult, id), c.comult),
                               multiply(kron(id, c.comult), c.comult)));
  r.diagrams.push_back(compare("left-counit", multiply(kron(c.counit, id), c.comult), id));
  r.diagrams.push_back(compare("right-counit", multiply(kron(id, c.counit), c.comult), id));
  return r;
}

DiagramReport check_bimonoid(const BimonoidData& b) {
  require_same_dim(b);
  auto r = check_algebra(b.algebra);
  for (auto& d : check_coalgebra(b.coalgebra).diagrams) r.diagrams.push_back(std::move(d));
  const auto& a = b.algebra;
  const auto& c = b.coalgebra;
  const std::size_t n = a.dim;
  const auto p = a.mult.modulus();
  r.diagrams.push_back(
      compare("comult-mult", multiply(c.comult, a.mult),
              multiply(kron(a.mult, a.mult), multiply(tau23(n, n, n, n, p), kron(c.comult, c.comult)))));
  r.diagrams.push_back(compare("counit-mult", multiply(c.counit, a.mult), kron(c.counit, c.counit)));
  r.diagrams.push_back(compare("comult-unit", multiply(c.comult, a.unit), kron(a.unit, a.unit)));
  r.diagrams.push_back(compare("counit-unit", multiply(c.counit, a.unit), identity_matrix(1, p)));
  return r;
}

ModMatrix convolve(const BimonoidData& b, const ModMatrix& f, const ModMatrix& g) {
  require_same_dim(b);
  auto s = finvect_structure(b.algebra.mult.modulus());
  ComonoidObject<std::size_t, ModMatrix> c{b.coalgebra.dim, b.coalgebra.comult, b.coalgebra.counit};
  MonoidObject<std::size_t, ModMatrix> m{b.algebra.dim, b.algebra.mult, b.algebra.unit};
  return convolution(s, c, m, f, g);
}

DiagramReport check_antipode(const HopfData& h) {
  const auto& b = h.bimonoid;
  require_same_dim(b);
  shape(h.antipode, b.algebra.dim, b.algebra.dim, "antipode");
  const auto id = identity_matrix(b.algebra.dim, b.algebra.mult.modulus());
  const auto unit = multiply(b.algebra.unit, b.coalgebra.counit);
  DiagramReport r;
  r.diagrams.push_back(compare("antipode-left", convolve(b, h.antipode, id), unit));
  r.diagrams.push_back(compare("antipode-right", convolve(b, id, h.antipode), unit));
  return r;
}

DiagramReport check_hopf(const HopfData& h) {
  auto r = check_bimonoid(h.bimonoid);
  for (auto& d : check_antipode(h).diagrams) r.diagrams.push_back(std::move(d));
  return r;
}

AntipodeSolution solve_antipode(const BimonoidData& b) {
  if (!check_bimonoid(b).ok()) throw Error(ErrorKind::NotABimonoid, "bimonoid laws fail");
  const std::size_t n = b.algebra.dim;
  const auto p = b.algebra.mult.modulus();
  const auto id = identity_matrix(n, p);
  const auto target = multiply(b.algebra.unit, b.coalgebra.counit);

  // S ↦ S∗1 is linear; column k of the system is the image of the k-th
  // elementary matrix, flattened row-major.
  ModMatrix system(n * n, n * n, p);
  for (std::size_t k = 0; k < n * n; ++k) {
    ModMatrix e(n, n, p);
    e.set(k / n, k % n, 1);
    auto image = convolve(b, e, id);
    for (std::size_t i = 0; i < n * n; ++i) system.set(i, k, image.entries()[i]);
  }
  ModMatrix rhs(n * n, 1, p);
  for (std::size_t i = 0; i < n * n; ++i) rhs.set(i, 0, target.entries()[i]);

  AntipodeSolution out;
  auto sol = solve_linear(system, rhs);
  if (!sol.x) return out;
  out.nullity = sol.nullity;
  ModMatrix s(n, n, p, sol.x->entries());
  if (convolve(b, id, s) != target) return out;
  out.antipode = std::move(s);
  return out;
}

AlgebraData field_algebra(std::uint64_t p) {
  return {1, identity_matrix(1, p), identity_matrix(1, p)};
}

CoalgebraData field_coalgebra(std::uint64_t p) {
  return {1, identity_matrix(1, p), identity_matrix(1, p)};
}

AlgebraData tensor_of_algebras(const AlgebraData& a1, const AlgebraData& a2) {
  require_algebra_shape(a1);
  require_algebra_shape(a2);
  if (a1.mult.modulus() != a2.mult.modulus())
    throw Error(ErrorKind::ModulusMismatch, "tensor of algebras over different fields");
  const auto p = a1.mult.modulus();
  const std::size_t n1 = a1.dim, n2 = a2.dim;
  return {n1 * n2, multiply(kron(a1.mult, a2.mult), tau23(n1, n2, n1, n2, p)),
          kron(a1.unit, a2.unit)};
}

CoalgebraData tensor_of_coalgebras(const CoalgebraData& c1, const CoalgebraData& c2) {
  require_coalgebra_shape(c1);
  require_coalgebra_shape(c2);
  if (c1.comult.modulus() != c2.comult.modulus())
    throw Error(ErrorKind::ModulusMismatch, "tensor of coalgebras over different fields");
  const auto p = c1.comult.modulus();
  const std::size_t n1 = c1.dim, n2 = c2.dim;
  return {n1 * n2, multiply(tau23(n1, n1, n2, n2, p), kron(c1.comult, c2.comult)),
          kron(c1.counit, c2.counit)};
}

HopfData group_algebra(const FinGroup& g, std::uint64_t p) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty group");
  ModMatrix mult(n, n * n, p), unit(n, 1, p), comult(n * n, n, p), counit(1, n, p), s(n, n, p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.set(g(a, b), a * n + b, 1);
    comult.set(a * n + a, a, 1);
    counit.set(0, a, 1);
    s.set(g.inverse(a), a, 1);
  }
  unit.set(g.identity(), 0, 1);
  return {{{n, mult, unit}, {n, comult, counit}}, s};
}

HopfData function_hopf(const FinGroup& g, std::uint64_t p) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::InvalidGroup, "empty group");
  ModMatrix mult(n, n * n, p), unit(n, 1, p), comult(n * n, n, p), counit(1, n, p), s(n, n, p);
  for (std::size_t a = 0; a < n; ++a) {
    mult.set(a, a * n + a, 1);
    unit.set(a, 0, 1);
    for (std::size_t b = 0; b < n; ++b) comult.set(a * n + b, g(a, b), 1);
    s.set(g.inverse(a), a, 1);
  }
  counit.set(0, g.identity(), 1);
  return {{{n, mult, unit}, {n, comult, counit}}, s};
}

BimonoidData monoid_algebra(const FiniteMonoid& m, std::uint64_t p) {
  validate_monoid(m);
  const std::size_t n = m.size;
  ModMatrix mult(n, n * n, p), unit(n, 1, p), comult(n * n, n, p), counit(1, n, p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mult.set(m(a, b), a * n + b, 1);
    comult.set(a * n + a, a, 1);
    counit.set(0, a, 1);
  }
  unit.set(m.unit, 0, 1);
  return {{n, mult, unit}, {n, comult, counit}};
}

TruncatedPair truncated_polynomial(std::size_t degree, std::uint64_t p) {
  const std::size_t n = degree + 1;
  ModMatrix mult(n, n * n, p), unit(n, 1, p), comult(n * n, n, p), counit(1, n, p);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      mult.set(i + j, i * n + j, 1);
      comult.set(i * n + j, i + j, 1);
    }
  }
  unit.set(0, 0, 1);
  counit.set(0, 0, 1);
  TruncatedPair out{{n, mult, unit}, {n, comult, counit}, {}, false};
  for (std::size_t i = 0; i < n; ++i) out.basis.emplace_back(i, 0);
  return out;
}

TruncatedPair truncated_tensor_algebra(std::size_t letters, std::size_t degree, std::uint64_t p,
                                       std::size_t budget) {
  std::size_t dim = 1, layer = 1;
  for (std::size_t k = 1; k <= degree; ++k) {
    if (letters != 0 && layer > budget / letters)
      throw Error(ErrorKind::BudgetExceeded, fmt::format("tensor algebra dimension exceeds {}", budget));
    layer *= letters;
    dim += layer;
    if (dim > budget)
      throw Error(ErrorKind::BudgetExceeded, fmt::format("tensor algebra dimension exceeds {}", budget));
  }
  auto words = words_up_to(letters, degree);
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = i;
  const std::size_t n = words.size();

  ModMatrix mult(n, n * n, p), unit(n, 1, p), comult(n * n, n, p), counit(1, n, p);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      if (words[u].size() + words[v].size() > degree) continue;
      auto uv = words[u];
      uv.insert(uv.end(), words[v].begin(), words[v].end());
      mult.set(index.at(uv), u * n + v, 1);
    }
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t cut = 0; cut <= words[w].size(); ++cut) {
      std::vector<std::size_t> head(words[w].begin(), words[w].begin() + static_cast<std::ptrdiff_t>(cut));
      std::vector<std::size_t> tail(words[w].begin() + static_cast<std::ptrdiff_t>(cut), words[w].end());
      comult.add_to(index.at(head) * n + index.at(tail), w, 1);
    }
  unit.set(0, 0, 1);
  counit.set(0, 0, 1);
  return {{n, mult, unit}, {n, comult, counit}, std::move(words), false};
}

bool check_algebra_hom(const AlgebraData& a1, const AlgebraData& a2, const ModMatrix& f) {
  require_algebra_shape(a1);
  require_algebra_shape(a2);
  shape(f, a2.dim, a1.dim, "f");
  return multiply(f, a1.mult) == multiply(a2.mult, kron(f, f)) && multiply(f, a1.unit) == a2.unit;
}

bool check_coalgebra_hom(const CoalgebraData& c1, const CoalgebraData& c2, const ModMatrix& f) {
  require_coalgebra_shape(c1);
  require_coalgebra_shape(c2);
  shape(f, c2.dim, c1.dim, "f");
  return multiply(kron(f, f), c1.comult) == multiply(c2.comult, f) &&
         multiply(c2.counit, f) == c1.counit;
}

bool check_bimonoid_hom(const BimonoidData& b1, const BimonoidData& b2, const ModMatrix& f) {
  return check_algebra_hom(b1.algebra, b2.algebra, f) &&
         check_coalgebra_hom(b1.coalgebra, b2.coalgebra, f);
}

ModMatrix group_algebra_map(const FinGroup& g, const FinGroup& h, const std::vector<std::size_t>& phi,
                            std::uint64_t p) {
  if (!is_group_homomorphism(g, h, phi))
    throw Error(ErrorKind::InvalidGroup, "map is not a group homomorphism");
  ModMatrix m(h.order(), g.order(), p);
  for (std::size_t a = 0; a < g.order(); ++a) m.set(phi[a], a, 1);
  return m;
}

bool check_antipode_naturality(const HopfData& h1, const HopfData& h2, const ModMatrix& f) {
  if (!check_bimonoid_hom(h1.bimonoid, h2.bimonoid, f))
    throw Error(ErrorKind::NotABimonoid, "map is not a bimonoid homomorphism");
  return multiply(f, h1.antipode) == multiply(h2.antipode, f);
}

}  // namespace fincat
