#include "fincat/finset.hpp"

#include <set>

#include <fmt/format.h>

#include "fincat/error.hpp"

namespace fincat {

void validate_finset(const FinSetObj& s) {
  if (s.labels.empty()) return;
  if (s.labels.size() != s.size)
    throw Error(ErrorKind::MalformedInput,
                fmt::format("{} labels for a set of size {}", s.labels.size(), s.size));
  std::set<std::string> seen(s.labels.begin(), s.labels.end());
  if (seen.size() != s.labels.size())
    throw Error(ErrorKind::MalformedInput, "repeated element label");
}

FinFunction::FinFunction(std::size_t dom, std::size_t cod, std::vector<std::size_t> table)
    : dom_(dom), cod_(cod), table_(std::move(table)) {
  if (table_.size() != dom_)
    throw Error(ErrorKind::IndexOutOfRange,
                fmt::format("function table has {} entries for domain size {}", table_.size(),
                            dom_));
  for (std::size_t i = 0; i < dom_; ++i)
    if (table_[i] >= cod_)
      throw Error(ErrorKind::IndexOutOfRange,
                  fmt::format("entry {} maps to {} outside codomain size {}", i, table_[i], cod_));
}

FinFunction identity_function(std::size_t n) {
  std::vector<std::size_t> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = i;
  return FinFunction(n, n, std::move(t));
}

FinFunction constant_function(std::size_t dom, std::size_t cod, std::size_t value) {
  return FinFunction(dom, cod, std::vector<std::size_t>(dom, value));
}

FinFunction empty_function(std::size_t cod) { return FinFunction(0, cod, {}); }

FinFunction compose(const FinFunction& g, const FinFunction& f) {
  if (f.cod() != g.dom())
    throw Error(ErrorKind::BoundaryMismatch,
                fmt::format("cannot compose {}->{} after {}->{}", g.dom(), g.cod(), f.dom(),
                            f.cod()));
  std::vector<std::size_t> t(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) t[i] = g(f(i));
  return FinFunction(f.dom(), g.cod(), std::move(t));
}

FunctionClass classify_function(const FinFunction& f) {
  std::vector<std::size_t> hits(f.cod(), 0);
  for (std::size_t y : f.table()) ++hits[y];
  FunctionClass c{true, true, false};
  for (std::size_t h : hits) {
    if (h > 1) c.injective = false;
    if (h == 0) c.surjective = false;
  }
  c.bijective = c.injective && c.surjective;
  return c;
}

FinFunction inverse_function(const FinFunction& f) {
  if (!classify_function(f).bijective)
    throw Error(ErrorKind::NotInvertible, "function is not a bijection");
  std::vector<std::size_t> t(f.cod());
  for (std::size_t x = 0; x < f.dom(); ++x) t[f(x)] = x;
  return FinFunction(f.cod(), f.dom(), std::move(t));
}

std::size_t power_size(std::size_t base, std::size_t exponent, std::size_t budget) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > budget / base)
      throw Error(ErrorKind::BudgetExceeded,
                  fmt::format("{}^{} exceeds budget {}", base, exponent, budget));
    r *= base;
  }
  if (r > budget)
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("{}^{} exceeds budget {}", base, exponent, budget));
  return r;
}

// --- products and coproducts -------------------------------------------------

std::pair<FinFunction, FinFunction> product_projections(std::size_t nx, std::size_t ny) {
  std::vector<std::size_t> p1(nx * ny), p2(nx * ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) {
      p1[pair_index(x, y, ny)] = x;
      p2[pair_index(x, y, ny)] = y;
    }
  return {FinFunction(nx * ny, nx, std::move(p1)), FinFunction(nx * ny, ny, std::move(p2))};
}

std::pair<FinFunction, FinFunction> coproduct_injections(std::size_t nx, std::size_t ny) {
  std::vector<std::size_t> i1(nx), i2(ny);
  for (std::size_t x = 0; x < nx; ++x) i1[x] = x;
  for (std::size_t y = 0; y < ny; ++y) i2[y] = nx + y;
  return {FinFunction(nx, nx + ny, std::move(i1)), FinFunction(ny, nx + ny, std::move(i2))};
}

FinFunction product_map(const FinFunction& f, const FinFunction& g) {
  std::vector<std::size_t> t(f.dom() * g.dom());
  for (std::size_t a = 0; a < f.dom(); ++a)
    for (std::size_t b = 0; b < g.dom(); ++b)
      t[pair_index(a, b, g.dom())] = pair_index(f(a), g(b), g.cod());
  return FinFunction(f.dom() * g.dom(), f.cod() * g.cod(), std::move(t));
}

FinFunction coproduct_map(const FinFunction& f, const FinFunction& g) {
  std::vector<std::size_t> t;
  t.reserve(f.dom() + g.dom());
  for (std::size_t a = 0; a < f.dom(); ++a) t.push_back(f(a));
  for (std::size_t b = 0; b < g.dom(); ++b) t.push_back(f.cod() + g(b));
  return FinFunction(f.dom() + g.dom(), f.cod() + g.cod(), std::move(t));
}

FinFunction pairing(const FinFunction& f, const FinFunction& g) {
  if (f.dom() != g.dom()) throw Error(ErrorKind::BoundaryMismatch, "pairing: domains differ");
  std::vector<std::size_t> t(f.dom());
  for (std::size_t a = 0; a < f.dom(); ++a) t[a] = pair_index(f(a), g(a), g.cod());
  return FinFunction(f.dom(), f.cod() * g.cod(), std::move(t));
}

FinFunction copairing(const FinFunction& f, const FinFunction& g) {
  if (f.cod() != g.cod())
    throw Error(ErrorKind::BoundaryMismatch, "copairing: codomains differ");
  std::vector<std::size_t> t(f.table());
  t.insert(t.end(), g.table().begin(), g.table().end());
  return FinFunction(f.dom() + g.dom(), f.cod(), std::move(t));
}

FinFunction product_swap(std::size_t nx, std::size_t ny) {
  std::vector<std::size_t> t(nx * ny);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y) t[pair_index(x, y, ny)] = pair_index(y, x, nx);
  return FinFunction(nx * ny, nx * ny, std::move(t));
}

FinFunction coproduct_swap(std::size_t nx, std::size_t ny) {
  std::vector<std::size_t> t(nx + ny);
  for (std::size_t x = 0; x < nx; ++x) t[x] = ny + x;
  for (std::size_t y = 0; y < ny; ++y) t[nx + y] = y;
  return FinFunction(nx + ny, nx + ny, std::move(t));
}

FinFunction product_associator(std::size_t nx, std::size_t ny, std::size_t nz) {
  std::vector<std::size_t> t(nx * ny * nz);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t z = 0; z < nz; ++z)
        t[pair_index(pair_index(x, y, ny), z, nz)] = pair_index(x, pair_index(y, z, nz), ny * nz);
  return FinFunction(nx * ny * nz, nx * ny * nz, std::move(t));
}

FinFunction coproduct_associator(std::size_t nx, std::size_t ny, std::size_t nz) {
  return identity_function(nx + ny + nz);
}

// --- exponentials ------------------------------------------------------------

std::size_t exponential_size(std::size_t nx, std::size_t nz, std::size_t budget) {
  return power_size(nz, nx, budget);
}

std::size_t encode_table(const std::vector<std::size_t>& table, std::size_t nz) {
  std::size_t code = 0;
  for (std::size_t v : table) code = code * nz + v;
  return code;
}

std::vector<std::size_t> decode_table(std::size_t code, std::size_t nx, std::size_t nz) {
  std::vector<std::size_t> t(nx, 0);
  for (std::size_t i = nx; i > 0; --i) {
    t[i - 1] = code % nz;
    code /= nz;
  }
  return t;
}

FinFunction curry(const FinFunction& f, std::size_t nx, std::size_t ny, std::size_t budget) {
  if (f.dom() != nx * ny)
    throw Error(ErrorKind::BoundaryMismatch,
                fmt::format("curry: domain {} is not {}x{}", f.dom(), nx, ny));
  const std::size_t nz = f.cod();
  const std::size_t ne = exponential_size(nx, nz, budget);
  std::vector<std::size_t> t(ny);
  std::vector<std::size_t> column(nx);
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t x = 0; x < nx; ++x) column[x] = f(pair_index(x, y, ny));
    t[y] = encode_table(column, nz);
  }
  return FinFunction(ny, ne, std::move(t));
}

FinFunction uncurry(const FinFunction& g, std::size_t nx, std::size_t nz, std::size_t budget) {
  const std::size_t ne = exponential_size(nx, nz, budget);
  if (g.cod() != ne)
    throw Error(ErrorKind::BoundaryMismatch,
                fmt::format("uncurry: codomain {} is not {}^{}", g.cod(), nz, nx));
  const std::size_t ny = g.dom();
  std::vector<std::size_t> t(nx * ny);
  for (std::size_t y = 0; y < ny; ++y) {
    auto column = decode_table(g(y), nx, nz);
    for (std::size_t x = 0; x < nx; ++x) t[pair_index(x, y, ny)] = column[x];
  }
  return FinFunction(nx * ny, nz, std::move(t));
}

FinFunction evaluation(std::size_t nx, std::size_t nz, std::size_t budget) {
  const std::size_t ne = exponential_size(nx, nz, budget);
  std::vector<std::size_t> t(nx * ne);
  for (std::size_t h = 0; h < ne; ++h) {
    auto table = decode_table(h, nx, nz);
    for (std::size_t x = 0; x < nx; ++x) t[pair_index(x, h, ne)] = table[x];
  }
  return FinFunction(nx * ne, nz, std::move(t));
}

FinFunction exponential_map(const FinFunction& h, std::size_t nx, std::size_t budget) {
  const std::size_t na = exponential_size(nx, h.dom(), budget);
  const std::size_t nb = exponential_size(nx, h.cod(), budget);
  std::vector<std::size_t> t(na);
  for (std::size_t c = 0; c < na; ++c) {
    auto table = decode_table(c, nx, h.dom());
    for (auto& v : table) v = h(v);
    t[c] = encode_table(table, h.cod());
  }
  return FinFunction(na, nb, std::move(t));
}

// --- power sets --------------------------------------------------------------

namespace {

std::size_t subset_count(std::size_t n, std::size_t max_bits) {
  if (n > max_bits || n >= 64)
    throw Error(ErrorKind::BudgetExceeded,
                fmt::format("power set of a {}-element set exceeds 2^{}", n, max_bits));
  return std::size_t{1} << n;
}

}  // namespace

FinFunction powerset(Variance variance, const FinFunction& f, std::size_t max_bits) {
  if (variance == Variance::Contravariant) {
    const std::size_t nd = subset_count(f.dom(), max_bits);
    const std::size_t nc = subset_count(f.cod(), max_bits);
    std::vector<std::size_t> t(nc);
    for (std::size_t s = 0; s < nc; ++s) {
      std::size_t pre = 0;
      for (std::size_t x = 0; x < f.dom(); ++x)
        if ((s >> f(x)) & 1U) pre |= std::size_t{1} << x;
      t[s] = pre;
    }
    return FinFunction(nc, nd, std::move(t));
  }
  const std::size_t nd = subset_count(f.dom(), max_bits);
  const std::size_t nc = subset_count(f.cod(), max_bits);
  std::vector<std::size_t> t(nd);
  for (std::size_t s = 0; s < nd; ++s) {
    std::size_t img = 0;
    for (std::size_t x = 0; x < f.dom(); ++x)
      if ((s >> x) & 1U) img |= std::size_t{1} << f(x);
    t[s] = img;
  }
  return FinFunction(nd, nc, std::move(t));
}

FinFunction singleton(std::size_t n) {
  const std::size_t np = subset_count(n, 63);
  std::vector<std::size_t> t(n);
  for (std::size_t x = 0; x < n; ++x) t[x] = std::size_t{1} << x;
  return FinFunction(n, np, std::move(t));
}

FinFunction powerset_union(std::size_t n, std::size_t max_bits) {
  const std::size_t np = subset_count(n, max_bits);
  const std::size_t npp = subset_count(np, max_bits);
  std::vector<std::size_t> t(npp);
  for (std::size_t fam = 0; fam < npp; ++fam) {
    std::size_t u = 0;
    for (std::size_t s = 0; s < np; ++s)
      if ((fam >> s) & 1U) u |= s;
    t[fam] = u;
  }
  return FinFunction(npp, np, std::move(t));
}

}  // namespace fincat
