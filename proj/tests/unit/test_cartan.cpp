#include <doctest.h>

#include <algorithm>
#include <random>

#include "odac/cartan.hpp"
#include "odac/construct.hpp"

using namespace odac;

namespace {

std::vector<RingElem> unit_vec(const RingPtr& ring, std::size_t len, std::size_t k) {
  std::vector<RingElem> v(len, ring->zero());
  v[k] = ring->one();
  return v;
}

Submodule full(const AlgebraSpec& spec) {
  Submodule s{spec, {}, ""};
  for (std::size_t i = 0; i < spec.rank(); ++i)
    s.generators.push_back(unit_vec(spec.ring, spec.rank(), i));
  return s;
}

}  // namespace

TEST_CASE("is_abelian") {
  RingPtr z5 = Ring::zm(5);
  AlgebraSpec sl3(Family::sl, 3, z5);
  StructureConstants sc(sl3);
  // diagonal subalgebra: the h_i live at the tail of the basis
  Submodule diag{sl3, {unit_vec(z5, 8, 6), unit_vec(z5, 8, 7)}, ""};
  CHECK(is_abelian(diag, sc));

  AlgebraSpec sl2(Family::sl, 2, z5);
  StructureConstants sc2(sl2);
  CHECK_FALSE(is_abelian(full(sl2), sc2));

  AlgebraSpec so6(Family::so, 6, z5);
  StructureConstants sc6(so6);
  Decomposition d = construct_so_even(3, z5);
  for (const auto& comp : d.components) CHECK(is_abelian(comp, sc6));
}

TEST_CASE("normalizer of the zero and full submodules") {
  RingPtr z5 = Ring::zm(5);
  AlgebraSpec sl2(Family::sl, 2, z5);
  StructureConstants sc(sl2);
  Submodule zero{sl2, {}, ""};
  CHECK(submodule_equal(normalizer(zero, sc), full(sl2)));
  CHECK(submodule_equal(normalizer(full(sl2), sc), full(sl2)));
}

TEST_CASE("normalizer of the restricted sp components is the component") {
  RingPtr z3 = Ring::zm(3);
  Decomposition d = construct_sp_restricted(1, z3);
  StructureConstants sc(d.algebra);
  for (const auto& comp : d.components)
    CHECK(submodule_equal(normalizer(comp, sc), comp));
}

TEST_CASE("normalizer contains the submodule for subalgebras") {
  std::mt19937_64 rng(3);
  RingPtr z9 = Ring::zm(9);
  AlgebraSpec so5(Family::so, 5, z9);
  StructureConstants sc(so5);
  for (int t = 0; t < 5; ++t) {
    Submodule h{so5, {unit_vec(z9, sc.rank(), rng() % sc.rank())}, ""};
    Submodule n = normalizer(h, sc);
    RowSpace nspace(generator_matrix(n));
    for (const auto& g : h.generators) CHECK(nspace.contains(g));
  }
}

TEST_CASE("is_nilpotent") {
  RingPtr z5 = Ring::zm(5);
  AlgebraSpec sl2(Family::sl, 2, z5);
  StructureConstants sc(sl2);
  // abelian: one step
  Submodule h{sl2, {unit_vec(z5, 3, 2)}, ""};
  CHECK(is_nilpotent(h, sc));
  // the full algebra has a stabilizing series
  CHECK_FALSE(is_nilpotent(full(sl2), sc));
  // span{e, f} is not closed
  Submodule ef{sl2, {unit_vec(z5, 3, 0), unit_vec(z5, 3, 1)}, ""};
  CHECK_THROWS_AS(is_nilpotent(ef, sc), Error);

  // strictly upper triangular inside gl_3: e01, e02, e12
  AlgebraSpec gl3(Family::gl, 3, z5);
  StructureConstants sc3(gl3);
  Submodule upper{gl3, {unit_vec(z5, 9, 1), unit_vec(z5, 9, 2), unit_vec(z5, 9, 5)}, ""};
  CHECK(is_nilpotent(upper, sc3));
}

TEST_CASE("is_cartan") {
  RingPtr z3 = Ring::zm(3);
  Decomposition d = construct_sl_pauli(1, z3);
  StructureConstants sc(d.algebra);
  // the last component is the infinity line
  CHECK(d.components.back().label == "H_inf");
  CHECK(is_cartan(d.components.back(), sc));

  AlgebraSpec sl2(Family::sl, 2, z3);
  StructureConstants sc2(sl2);
  Submodule zero{sl2, {}, ""};
  CHECK_FALSE(is_cartan(zero, sc2));
  // span{e} normalizes to span{e, h}
  Submodule e{sl2, {unit_vec(z3, 3, 0)}, ""};
  CHECK_FALSE(is_cartan(e, sc2));
}

TEST_CASE("verify_odac accepts the even so construction") {
  RingPtr z3 = Ring::zm(3);
  Decomposition d = construct_so_even(4, z3);  // so_8
  StructureConstants sc(d.algebra);
  OdacReport report = verify_odac(d.components, sc);
  CHECK(report.is_odac);
  CHECK(report.failures.empty());
}

TEST_CASE("verify_odac rejects a single non-abelian component") {
  RingPtr z5 = Ring::zm(5);
  AlgebraSpec sl2(Family::sl, 2, z5);
  StructureConstants sc(sl2);
  OdacReport report = verify_odac({full(sl2)}, sc);
  CHECK_FALSE(report.is_odac);
  REQUIRE_FALSE(report.failures.empty());
  CHECK(report.failures[0].kind == OdacFailure::Kind::NotAbelian);
}

TEST_CASE("verify_odac flags a moved generator") {
  RingPtr z3 = Ring::zm(3);
  Decomposition d = construct_so_even(3, z3);
  StructureConstants sc(d.algebra);
  auto mutated = d.components;
  mutated[1].generators.push_back(mutated[0].generators.back());
  mutated[0].generators.pop_back();
  OdacReport report = verify_odac(mutated, sc);
  CHECK_FALSE(report.is_odac);
  bool has_witness = false;
  for (const auto& f : report.failures) has_witness |= !f.detail.empty();
  CHECK(has_witness);
}

TEST_CASE("verify_odac is order-independent") {
  RingPtr z5 = Ring::zm(5);
  Decomposition d = construct_sp_restricted(1, z5);
  StructureConstants sc(d.algebra);
  auto comps = d.components;
  CHECK(verify_odac(comps, sc).is_odac);
  std::reverse(comps.begin(), comps.end());
  CHECK(verify_odac(comps, sc).is_odac);
  std::swap(comps[0], comps[2]);
  CHECK(verify_odac(comps, sc).is_odac);
}

TEST_CASE("generator orthogonality extends to random elements") {
  std::mt19937_64 rng(11);
  RingPtr z9 = Ring::zm(9);
  Decomposition d = construct_sp_restricted(1, z9);
  StructureConstants sc(d.algebra);
  for (int t = 0; t < 40; ++t) {
    std::size_t i = rng() % d.components.size();
    std::size_t j = rng() % d.components.size();
    if (i == j) continue;
    auto combine = [&](const Submodule& s) {
      std::vector<RingElem> v(sc.rank(), z9->zero());
      for (const auto& g : s.generators) {
        RingElem c = z9->elem_at(rng() % 9);
        for (std::size_t k = 0; k < sc.rank(); ++k) v[k] += c * g[k];
      }
      return v;
    };
    CHECK(sc.killing(combine(d.components[i]), combine(d.components[j])).is_zero());
  }
}

TEST_CASE("closed killing path agrees on so decompositions") {
  RingPtr z7 = Ring::zm(7);
  Decomposition d = construct_so_odd(3, z7);
  StructureConstants sc(d.algebra);
  CHECK(verify_odac(d.components, sc, KillingKind::Generic).is_odac);
  CHECK(verify_odac(d.components, sc, KillingKind::Closed).is_odac);
}
