#include <doctest.h>

#include "cfhom/chain_complex.hpp"
#include "cfhom/error.hpp"
#include "cfhom/smith.hpp"

using namespace cfhom;

namespace {

ChainComplex rp2() { return ChainComplex(0, {1, 1, 1}, {IntMatrix(1, 1), IntMatrix::from_rows({{2}})}); }
ChainComplex times(long m) { return ChainComplex(0, {1, 1}, {IntMatrix::from_rows({{m}})}); }
ChainComplex point() { return ChainComplex(0, {1}, {}); }

GradedCardinalities cards(int base, std::vector<Integer> v) { return GradedCardinalities{base, std::move(v)}; }

const std::vector<long> kModuli{2, 3, 4, 5, 8, 9};

}  // namespace

TEST_CASE("validate complex") {
  CHECK_NOTHROW(ChainComplex(0, {1, 1, 1}, {IntMatrix(1, 1), IntMatrix::from_rows({{2}})}));
  CHECK_NOTHROW(times(3));
  CHECK_THROWS_WITH_AS(ChainComplex(0, {1, 1, 1}, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{1}})}),
                       doctest::Contains("not a complex"), Error);
  CHECK_THROWS_WITH_AS(ChainComplex(0, {1, 2}, {IntMatrix::from_rows({{1}})}), doctest::Contains("shape error"),
                       Error);
  CHECK_THROWS_WITH_AS(ChainComplex(0, {1, 1}, {}), doctest::Contains("shape error"), Error);
  // 2 * 2 = 4 vanishes mod 4 but not over Z.
  const std::vector<IntMatrix> two{IntMatrix::from_rows({{2}}), IntMatrix::from_rows({{2}})};
  CHECK_NOTHROW(ChainComplex(0, {1, 1, 1}, two, 4));
  CHECK_THROWS_WITH_AS(ChainComplex(3, {1, 1, 1}, two), doctest::Contains("through degree 4"), Error);
}

TEST_CASE("integral homology") {
  const auto h = integral_homology(rp2());
  CHECK(h.at(0) == FGAbelianGroup::free(1));
  CHECK(h.at(1) == FGAbelianGroup::cyclic(2));
  CHECK(h.at(2).is_trivial());
  CHECK(h.at(7).is_trivial());

  const auto h4 = integral_homology(times(4));
  CHECK(h4.at(0) == FGAbelianGroup::cyclic(4));
  CHECK(h4.at(1).is_trivial());

  const auto hz = integral_homology(ChainComplex(0, {2, 3}, {IntMatrix(2, 3)}));
  CHECK(hz.at(0) == FGAbelianGroup::free(2));
  CHECK(hz.at(1) == FGAbelianGroup::free(3));

  CHECK_THROWS_WITH_AS(integral_homology(rp2().reduced_mod(2)), doctest::Contains("wrong ring"), Error);
}

TEST_CASE("mod q homology") {
  const auto h = mod_q_homology(rp2(), 2);
  for (int d = 0; d <= 2; ++d) CHECK(h.at(d) == FGAbelianGroup::cyclic(2));
  const auto h8 = mod_q_homology(times(4), 8);
  CHECK(h8.at(0) == FGAbelianGroup::cyclic(4));
  CHECK(h8.at(1) == FGAbelianGroup::cyclic(4));
  // All differentials vanish mod 2.
  const auto hz = mod_q_homology(ChainComplex(0, {2, 1, 3}, {IntMatrix::from_rows({{4}, {6}}), IntMatrix(1, 3)}), 2);
  CHECK(hz.at(0) == FGAbelianGroup::from_cyclic_orders(0, {2, 2}));
  CHECK(hz.at(1) == FGAbelianGroup::cyclic(2));
  CHECK(hz.at(2) == FGAbelianGroup::from_cyclic_orders(0, {2, 2, 2}));
}

TEST_CASE("brute force oracle") {
  CHECK(brute_force_mod_q_homology(rp2(), 2) == cards(0, {2, 2, 2}));
  CHECK(brute_force_mod_q_homology(times(4), 4) == cards(0, {4, 4}));
  const auto zero = brute_force_mod_q_homology(ChainComplex(0, {0, 0}, {IntMatrix(0, 0)}), 5);
  CHECK(zero.at(0) == 1);
  CHECK(zero.at(1) == 1);
  CHECK_THROWS_WITH_AS(brute_force_mod_q_homology(ChainComplex(0, {7}, {}), 9),
                       doctest::Contains("instance too large for oracle"), Error);
}

TEST_CASE("chain-level cardinalities agree with UCT and the oracle") {
  RandomComplexParams params;
  params.torsion_primes = {2, 3};
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto c = random_complex(params, seed);
    for (long q : kModuli) {
      const auto uct = cardinalities_of(mod_q_homology(c, q));
      const auto brute = brute_force_mod_q_homology(c, q);
      const auto lattice = mod_q_cardinalities(c, q);
      for (int d = c.base_degree() - 1; d <= c.top_degree() + 1; ++d) {
        CHECK(uct.at(d) == brute.at(d));
        CHECK(lattice.at(d) == brute.at(d));
      }
    }
  }
}

TEST_CASE("random complexes") {
  RandomComplexParams params;
  params.torsion_primes = {2, 3};
  SUBCASE("deterministic in the seed") {
    CHECK(random_complex(params, 99) == random_complex(params, 99));
  }
  SUBCASE("torsion supported on the chosen primes") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto h = integral_homology(random_complex(params, seed));
      for (const auto& g : h.groups)
        for (Integer d : g.invariant_factors()) {
          mpz_remove(d.get_mpz_t(), d.get_mpz_t(), Integer(2).get_mpz_t());
          mpz_remove(d.get_mpz_t(), d.get_mpz_t(), Integer(3).get_mpz_t());
          CHECK(d == 1);
        }
    }
  }
  SUBCASE("no torsion primes means free homology") {
    RandomComplexParams free_params;
    for (std::uint64_t seed = 0; seed < 50; ++seed)
    {
      const auto h = integral_homology(random_complex(free_params, seed));
      for (const auto& g : h.groups) CHECK(g.invariant_factors().empty());
    }
  }
  SUBCASE("Euler characteristic") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto c = random_complex(params, seed);
      const auto h = integral_homology(c);
      long chain = 0, homology = 0;
      for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
        const long sign = (d % 2 == 0) ? 1 : -1;
        chain += sign * static_cast<long>(c.rank(d));
        homology += sign * static_cast<long>(h.at(d).free_rank());
      }
      CHECK(chain == homology);
    }
  }
  SUBCASE("ranks respect the cap") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto c = random_complex(params, seed);
      for (auto r : c.ranks()) CHECK(r <= params.max_rank);
    }
  }
}

TEST_CASE("chain maps and cones") {
  SUBCASE("commutation is checked") {
    const auto c = times(2);
    // f_0 = 1, f_1 = 0 breaks f d = d f.
    CHECK_THROWS_WITH_AS(ChainMap(c, c, {IntMatrix::from_rows({{1}}), IntMatrix::from_rows({{0}})}),
                         doctest::Contains("does not commute with boundaries"), Error);
  }
  SUBCASE("cone of the identity is acyclic") {
    for (const auto& c : {point(), rp2(), times(6)}) {
      const auto cone = mapping_cone(ChainMap::identity(c));
      for (const auto& g : integral_homology(cone).groups) CHECK(g.is_trivial());
    }
  }
  SUBCASE("cone of multiplication by 2 on Z") {
    const auto cone = mapping_cone(ChainMap::scalar(point(), 2));
    const auto h = integral_homology(cone);
    CHECK(h.at(0) == FGAbelianGroup::cyclic(2));
    CHECK(h.at(1).is_trivial());
  }
  SUBCASE("cone of the zero map splits") {
    const auto src = rp2();
    const auto tgt = times(4);
    const auto h = integral_homology(mapping_cone(ChainMap::zero(src, tgt)));
    const auto hs = integral_homology(src);
    const auto ht = integral_homology(tgt);
    for (int d = -1; d <= 4; ++d) CHECK(h.at(d) == ht.at(d).direct_sum(hs.at(d - 1)));
  }
}

TEST_CASE("long exact sequence cardinalities") {
  SUBCASE("multiplication by 2, q = 4") {
    const auto report = les_cardinality_check(ChainMap::scalar(point(), 2), 4);
    CHECK(report.all_hold());
    bool saw0 = false, saw1 = false;
    for (const auto& d : report.degrees) {
      if (d.degree == 0) {
        saw0 = true;
        CHECK(d.cone == 2);
        CHECK(d.cokernel == 2);
        CHECK(d.kernel == 1);
      }
      if (d.degree == 1) {
        saw1 = true;
        CHECK(d.cone == 2);
        CHECK(d.cokernel == 1);
        CHECK(d.kernel == 2);
      }
    }
    CHECK(saw0);
    CHECK(saw1);
  }
  SUBCASE("identity") {
    for (const auto& d : les_cardinality_check(ChainMap::identity(rp2()), 9).degrees) {
      CHECK(d.cone == 1);
      CHECK(d.cokernel == 1);
      CHECK(d.kernel == 1);
    }
  }
  SUBCASE("zero map") {
    const auto src = rp2();
    const auto tgt = times(4);
    const auto hs = cardinalities_of(mod_q_homology(src, 4));
    const auto ht = cardinalities_of(mod_q_homology(tgt, 4));
    const auto report = les_cardinality_check(ChainMap::zero(src, tgt), 4);
    CHECK(report.all_hold());
    for (const auto& d : report.degrees) CHECK(d.cone == ht.at(d.degree) * hs.at(d.degree - 1));
  }
  SUBCASE("random chain maps") {
    RandomComplexParams params;
    params.torsion_primes = {2, 3};
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto s = random_complex(params, 2 * seed);
      const auto t = random_complex(params, 2 * seed + 1);
      const auto f = random_chain_map(s, t, seed);
      for (long q : {2, 3, 4, 9}) CHECK(les_cardinality_check(f, q).all_hold());
    }
  }
}

TEST_CASE("shifted base degree") {
  const ChainComplex c(-2, {1, 1}, {IntMatrix::from_rows({{3}})});
  const auto h = integral_homology(c);
  CHECK(h.at(-2) == FGAbelianGroup::cyclic(3));
  CHECK(h.at(-1).is_trivial());
  CHECK(brute_force_mod_q_homology(c, 3).at(-1) == 3);
}
