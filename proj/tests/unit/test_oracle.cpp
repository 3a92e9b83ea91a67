#include <doctest.h>

#include <random>

#include "odac/construct.hpp"
#include "oracle.hpp"

using namespace odac;

namespace {

std::vector<RingElem> unit_vec(const RingPtr& ring, std::size_t len, std::size_t k) {
  std::vector<RingElem> v(len, ring->zero());
  v[k] = ring->one();
  return v;
}

}  // namespace

TEST_CASE("brute_count_Q matches the closed count and the enumeration") {
  CHECK(oracle::brute_count_Q(0) == 3);
  CHECK(oracle::brute_count_Q(1) == 10);
  CHECK(oracle::brute_count_Q(2) == 36);
  CHECK(oracle::brute_count_Q(3) == 136);
  for (unsigned m = 0; m <= 4; ++m) {
    SympBasis basis{BinaryField(m)};
    CHECK(oracle::brute_count_Q(m) == enumerate_Q(basis).size());
  }
}

TEST_CASE("brute_normalizer agrees with the linear-algebra normalizer") {
  std::mt19937_64 rng(2);
  for (const auto& ring : {Ring::zm(3), Ring::zm(4), Ring::zm(5), Ring::gf(2, 2)}) {
    AlgebraSpec sl2(Family::sl, 2, ring);
    StructureConstants sc(sl2);
    // single basis vectors
    for (std::size_t k = 0; k < sc.rank(); ++k) {
      Submodule h{sl2, {unit_vec(ring, sc.rank(), k)}, ""};
      CHECK(submodule_equal(oracle::brute_normalizer(h, sc), normalizer(h, sc)));
    }
    // random 2-generator submodules
    for (int t = 0; t < 3; ++t) {
      Submodule h{sl2, {}, ""};
      for (int g = 0; g < 2; ++g) {
        std::vector<RingElem> v(sc.rank());
        for (auto& e : v) e = ring->elem_at(rng() % ring->size());
        h.generators.push_back(std::move(v));
      }
      CHECK(submodule_equal(oracle::brute_normalizer(h, sc), normalizer(h, sc)));
    }
  }
}

TEST_CASE("brute_normalizer trivial cases") {
  RingPtr z3 = Ring::zm(3);
  AlgebraSpec sl2(Family::sl, 2, z3);
  StructureConstants sc(sl2);
  Submodule zero{sl2, {}, ""};
  Submodule whole{sl2, {unit_vec(z3, 3, 0), unit_vec(z3, 3, 1), unit_vec(z3, 3, 2)}, ""};
  CHECK(submodule_equal(oracle::brute_normalizer(zero, sc), whole));
  CHECK(submodule_equal(oracle::brute_normalizer(whole, sc), whole));
}

TEST_CASE("budgets are hard limits") {
  AlgebraSpec big(Family::sl, 4, Ring::zm(9));
  StructureConstants sc(big);
  Submodule h{big, {unit_vec(big.ring, sc.rank(), 0)}, ""};
  oracle::SearchBudget tiny;
  tiny.max_module_elements = 100;
  CHECK_THROWS_AS(oracle::brute_normalizer(h, sc, tiny), Error);
  CHECK_THROWS_AS(oracle::brute_odac_search(big, {}), Error);
}

TEST_CASE("exhaustive search verdicts on sl_2") {
  CHECK_FALSE(oracle::brute_odac_search(AlgebraSpec(Family::sl, 2, Ring::zm(2)), {}));
  CHECK(oracle::brute_odac_search(AlgebraSpec(Family::sl, 2, Ring::zm(3)), {}));
  CHECK_FALSE(oracle::brute_odac_search(AlgebraSpec(Family::sl, 2, Ring::zm(4)), {}));
}

TEST_CASE("search verdicts are consistent with the necessary condition") {
  for (std::uint64_t m : {2u, 3u, 4u}) {
    RingPtr ring = Ring::zm(m);
    bool found = oracle::brute_odac_search(AlgebraSpec(Family::sl, 2, ring), {});
    if (found) CHECK(necessary_check_sl(2, ring).pass);
    if (!necessary_check_sl(2, ring).pass) CHECK_FALSE(found);
  }
}
