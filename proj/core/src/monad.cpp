#include "fincat/monad.hpp"

#include <fmt/format.h>

#include <random>

#include "fincat/error.hpp"

namespace fincat {

namespace {

void require_endofunctor(const FinFunctor& t) {
  if (!same_category(t.source(), t.target()))
    throw Error(ErrorKind::BoundaryMismatch, "monad functor is not an endofunctor");
}

bool natural(const NatTrans& t) { return validate_nat_trans(t).ok(); }

}  // namespace

MonadReport check_monad(const MonadData& m) {
  require_endofunctor(m.t);
  auto tt = compose(m.t, m.t);
  if (!(m.mult.from() == tt) || !(m.mult.to() == m.t))
    throw Error(ErrorKind::BoundaryMismatch, "multiplication must be TT => T");
  if (!(m.unit.from() == identity_functor(m.t.source())) || !(m.unit.to() == m.t))
    throw Error(ErrorKind::BoundaryMismatch, "unit must be 1 => T");
  const FinCategory& k = *m.t.source();
  MonadReport r;
  r.natural = natural(m.mult) && natural(m.unit);
  for (ObjId x : k.objects()) {
    ObjId tx = m.t(x);
    MorId mu = m.mult[x];
    if (k.compose(mu, m.t(mu)) != k.compose(mu, m.mult[tx])) r.associativity_failures.push_back(x);
    if (k.compose(mu, m.unit[tx]) != k.identity(tx)) r.left_unit_failures.push_back(x);
    if (k.compose(mu, m.t(m.unit[x])) != k.identity(tx)) r.right_unit_failures.push_back(x);
  }
  return r;
}

MonadReport check_comonad(const ComonadData& c) {
  require_endofunctor(c.t);
  auto tt = compose(c.t, c.t);
  if (!(c.comult.from() == c.t) || !(c.comult.to() == tt))
    throw Error(ErrorKind::BoundaryMismatch, "comultiplication must be T => TT");
  if (!(c.counit.from() == c.t) || !(c.counit.to() == identity_functor(c.t.source())))
    throw Error(ErrorKind::BoundaryMismatch, "counit must be T => 1");
  const FinCategory& k = *c.t.source();
  MonadReport r;
  r.natural = natural(c.comult) && natural(c.counit);
  for (ObjId x : k.objects()) {
    ObjId tx = c.t(x);
    MorId delta = c.comult[x];
    if (k.compose(c.t(delta), delta) != k.compose(c.comult[tx], delta))
      r.associativity_failures.push_back(x);
    if (k.compose(c.counit[tx], delta) != k.identity(tx)) r.left_unit_failures.push_back(x);
    if (k.compose(c.t(c.counit[x]), delta) != k.identity(tx)) r.right_unit_failures.push_back(x);
  }
  return r;
}

MonadData identity_monad(const CategoryRef& c) {
  auto id = identity_functor(c);
  return {id, identity_nat(id), identity_nat(id)};
}

MonadData monad_from_adjunction(const AdjunctionData& a) {
  if (!check_triangles(a).ok())
    throw Error(ErrorKind::TrianglesFailed, "monad requested from a non-adjunction");
  auto t = compose(a.h, a.f);
  auto mult = whisker_left(a.h, whisker_right(a.counit, a.f));
  return {t, NatTrans(compose(t, t), t, mult.components()),
          NatTrans(identity_functor(a.f.source()), t, a.unit.components())};
}

ComonadData comonad_from_adjunction(const AdjunctionData& a) {
  if (!check_triangles(a).ok())
    throw Error(ErrorKind::TrianglesFailed, "comonad requested from a non-adjunction");
  auto t = compose(a.f, a.h);
  auto comult = whisker_left(a.f, whisker_right(a.unit, a.h));
  return {t, NatTrans(t, compose(t, t), comult.components()),
          NatTrans(t, identity_functor(a.f.target()), a.counit.components())};
}

SetMonadReport check_set_monad(const SetMonad& m, std::size_t bound, std::size_t naturality_bound) {
  SetMonadReport r;
  for (std::size_t n = 0; n <= bound; ++n) {
    const std::size_t tn = m.t(n);
    auto mu = m.mult(n);
    auto id = identity_function(tn);
    if (compose(mu, m.t(mu)) != compose(mu, m.mult(tn))) r.associativity_failures.push_back(n);
    if (compose(mu, m.unit(tn)) != id) r.left_unit_failures.push_back(n);
    if (compose(mu, m.t(m.unit(n))) != id) r.right_unit_failures.push_back(n);
  }
  r.mult_naturality_failure = check_set_naturality(compose(m.t, m.t), m.t, m.mult, naturality_bound);
  r.unit_naturality_failure =
      check_set_naturality(identity_endofunctor(), m.t, m.unit, naturality_bound);
  return r;
}

SetMonadReport check_set_comonad(const SetComonad& c, std::size_t bound,
                                 std::size_t naturality_bound) {
  SetMonadReport r;
  for (std::size_t n = 0; n <= bound; ++n) {
    const std::size_t tn = c.t(n);
    auto delta = c.comult(n);
    auto id = identity_function(tn);
    if (compose(c.t(delta), delta) != compose(c.comult(tn), delta))
      r.associativity_failures.push_back(n);
    if (compose(c.counit(tn), delta) != id) r.left_unit_failures.push_back(n);
    if (compose(c.t(c.counit(n)), delta) != id) r.right_unit_failures.push_back(n);
  }
  r.mult_naturality_failure =
      check_set_naturality(c.t, compose(c.t, c.t), c.comult, naturality_bound);
  r.unit_naturality_failure =
      check_set_naturality(c.t, identity_endofunctor(), c.counit, naturality_bound);
  return r;
}

SetMonad monad_from_adjunction(const SetAdjunction& a) {
  SetNat mult = [a](std::size_t n) { return a.h(a.counit(a.f(n))); };
  return {compose(a.h, a.f), mult, a.unit};
}

SetComonad comonad_from_adjunction(const SetAdjunction& a) {
  SetNat comult = [a](std::size_t n) { return a.f(a.unit(a.h(n))); };
  return {compose(a.f, a.h), comult, a.counit};
}

SetMonad powerset_monad(std::size_t max_bits) {
  SetNat mult = [max_bits](std::size_t n) { return powerset_union(n, max_bits); };
  SetNat unit = [](std::size_t n) { return singleton(n); };
  return {covariant_powerset_functor(max_bits), mult, unit};
}

SampledMonadReport sample_powerset_associativity(std::size_t n, std::size_t samples,
                                                 std::uint64_t seed) {
  if (n > 4)
    throw Error(ErrorKind::BudgetExceeded, fmt::format("P(P(P({}))) samples are too wide", n));
  const std::size_t p1 = std::size_t{1} << n;   // |P(n)|, families are p1-bit masks
  const std::size_t p2 = std::size_t{1} << p1;  // |P(P(n))|, samples are p2-bit masks
  const std::size_t words = (p2 + 63) / 64;
  std::mt19937_64 rng(seed);

  auto union_of = [](std::uint64_t family, std::size_t width) {
    std::uint64_t out = 0;
    for (std::size_t s = 0; s < width; ++s)
      if (family >> s & 1) out |= s;
    return out;
  };

  SampledMonadReport r;
  std::vector<std::uint64_t> sample(words);
  for (std::size_t i = 0; i < samples; ++i) {
    for (auto& w : sample) w = rng();
    if (p2 < 64) sample[0] &= (std::uint64_t{1} << p2) - 1;
    // μ∘Tμ: replace each family by its union, then take the union
    std::uint64_t images = 0;
    // μ∘μT: merge the families, then take the union
    std::uint64_t merged = 0;
    for (std::size_t fam = 0; fam < p2; ++fam) {
      if (!(sample[fam / 64] >> (fam % 64) & 1)) continue;
      images |= std::uint64_t{1} << union_of(fam, p1);
      merged |= fam;
    }
    ++r.samples;
    if (union_of(images, p1) != union_of(merged, p1)) {
      ++r.failures;
      if (!r.first_failure) r.first_failure = sample;
    }
  }
  return r;
}

}  // namespace fincat
