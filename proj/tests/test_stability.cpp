#include <doctest.h>

#include "cfhom/error.hpp"
#include "cfhom/stability.hpp"

using namespace cfhom;

namespace {

ManifoldDescriptor manifold(int dim, bool orientable, bool surface) {
  ManifoldDescriptor m;
  m.dim = dim;
  m.orientable = orientable;
  m.surface = surface;
  m.open = true;
  return m;
}

// Odd-dimensional family whose H_i only changes outside the integral stable
// range i <= k / 2: H_1 = Z/2 + Z^min(k, 2), H_2 = Z/3 from k = 4 on.
HomologyFamily eventually_constant(long last) {
  HomologyFamily f;
  f.manifold = manifold(3, true, false);
  for (long k = 0; k <= last; ++k) {
    f.set(1, k, FGAbelianGroup::cyclic(2).direct_sum(FGAbelianGroup::free(std::min(k, 2L))));
    f.set(2, k, FGAbelianGroup::cyclic(k < 4 ? 1 : 3));
  }
  return f;
}

}  // namespace

TEST_CASE("stable range") {
  const auto three = manifold(3, true, false);
  const auto orientable_surface = manifold(2, true, true);
  const auto mobius = manifold(2, false, true);
  CHECK(stable_range(10, three, RingDescriptor::mod_q(3)) == 10);
  CHECK(stable_range(10, orientable_surface, RingDescriptor::char_zero_field()) == 9);
  CHECK(stable_range(10, mobius, RingDescriptor::char_zero_field()) == 10);
  CHECK(stable_range(9, three, RingDescriptor::integers()) == 4);
  CHECK(stable_range(10, three, RingDescriptor::mod_q(4)) == 5);
  CHECK(stable_range(10, three, RingDescriptor::two_inverted()) == 10);
  CHECK(stable_range(10, orientable_surface, RingDescriptor::mod_q(3)) == 5);
  CHECK_THROWS_AS(stable_range(-1, three, RingDescriptor::integers()), Error);

  SUBCASE("never below k/2") {
    const std::vector<RingDescriptor> rings{RingDescriptor::integers(), RingDescriptor::mod_q(2),
                                            RingDescriptor::mod_q(9), RingDescriptor::char_zero_field(),
                                            RingDescriptor::two_inverted()};
    for (int dim = 1; dim <= 5; ++dim)
      for (bool orientable : {true, false})
        for (const auto& ring : rings)
          for (long k = 0; k <= 40; ++k) {
            const auto m = manifold(dim, orientable, dim == 2);
            CHECK(stable_range(k, m, ring) >= k / 2);
          }
  }
}

TEST_CASE("ring descriptors") {
  CHECK(RingDescriptor::parse("Z").kind() == RingDescriptor::Kind::integers);
  CHECK(RingDescriptor::parse("Q").kind() == RingDescriptor::Kind::char_zero_field);
  CHECK(RingDescriptor::parse("Z[1/2]").two_is_unit());
  CHECK(RingDescriptor::parse("Z/12").modulus() == 12);
  CHECK(RingDescriptor::parse("Z/12").to_string() == "Z/12");
  CHECK_THROWS_AS(RingDescriptor::parse("Z/1"), Error);
  CHECK_THROWS_AS(RingDescriptor::parse("R"), Error);
}

TEST_CASE("sphere fixture") {
  CHECK(sphere_h1(2) == FGAbelianGroup::cyclic(2));
  CHECK(sphere_h1(5) == FGAbelianGroup::cyclic(8));
  CHECK_THROWS_WITH_AS(sphere_h1(1), doctest::Contains("outside fixture domain"), Error);
  const auto f = sphere_family(2, 10);
  CHECK(f.manifold.euler == 2);
  CHECK(*f.find(1, 10) == FGAbelianGroup::cyclic(18));
  CHECK(f.find(1, 11) == nullptr);
  CHECK(f.lookup(0, 4) == FGAbelianGroup::free(1));
}

TEST_CASE("periodicity in even dimensions") {
  const auto f = sphere_family(2, 60);
  SUBCASE("k = 3, m = 2, d = 4") {
    const auto rep = check_periodicity_even(f, 2, 4, {3, 3}, {1, 1});
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].status == CheckStatus::pass);
    CHECK(rep.entries[0].lhs == FGAbelianGroup::cyclic(4));
  }
  SUBCASE("m = 1, d = 2 holds for every k") {
    const auto rep = check_periodicity_even(f, 1, 2, {2, 50}, {1, 1});
    CHECK(rep.entries.size() == 49);
    CHECK(rep.ok());
    CHECK(rep.count(CheckStatus::skipped) == 0);
  }
  SUBCASE("d must divide 2m") {
    CHECK_THROWS_WITH_AS(check_periodicity_even(f, 1, 4, {2, 50}, {1, 1}),
                         doctest::Contains("hypothesis violation: d does not divide 2m"), Error);
  }
  SUBCASE("odd manifolds are rejected") {
    CHECK_THROWS_WITH_AS(check_periodicity_even(eventually_constant(5), 1, 2, {0, 3}, {1, 1}),
                         doctest::Contains("wrong parity"), Error);
  }
  SUBCASE("missing data is skipped") {
    const auto rep = check_periodicity_even(f, 2, 4, {55, 60}, {1, 1});
    CHECK(rep.count(CheckStatus::pass) == 4);
    CHECK(rep.count(CheckStatus::skipped) == 2);
    CHECK(rep.entries.back().note.find("skipped: missing data") == 0);
  }
  SUBCASE("entries beyond the stable range are not compared") {
    const auto rep = check_periodicity_even(f, 2, 4, {2, 5}, {0, 3});
    for (const auto& e : rep.entries) CHECK(e.degree <= e.k / 2);
    CHECK(rep.outside_stable_range > 0);
  }
  SUBCASE("the underlying groups do change without the hypothesis") {
    // k = 3 vs k = 4 with d = 4: Z/4 against Z/2.
    const auto a = tensor_tor_with_zq(sphere_h1(3), 4).tensor;
    const auto b = tensor_tor_with_zq(sphere_h1(4), 4).tensor;
    CHECK(a != b);
  }
}

TEST_CASE("integral stability in odd dimensions") {
  SUBCASE("constant family passes") {
    HomologyFamily f;
    f.manifold = manifold(3, true, false);
    for (long k = 0; k <= 30; ++k) f.set(1, k, FGAbelianGroup::cyclic(2));
    const auto rep = check_stability_odd(f, {0, 29}, {0, 3});
    CHECK(rep.ok());
    CHECK(rep.count(CheckStatus::pass) > 0);
  }
  SUBCASE("eventually constant family passes in the stable range") {
    const auto rep = check_stability_odd(eventually_constant(40), {0, 39}, {1, 2});
    CHECK(rep.count(CheckStatus::fail) == 0);
    CHECK(rep.count(CheckStatus::pass) == rep.entries.size());
    // Outside the stable range the family does change.
    const auto f = eventually_constant(40);
    CHECK(*f.find(2, 3) != *f.find(2, 4));
  }
  SUBCASE("a planted defect is located exactly") {
    auto f = eventually_constant(40);
    f.set(1, 21, FGAbelianGroup::free(2));
    const auto rep = check_stability_odd(f, {0, 39}, {1, 2});
    std::vector<std::pair<int, long>> fails;
    for (const auto& e : rep.entries)
      if (e.status == CheckStatus::fail) fails.emplace_back(e.degree, e.k);
    CHECK(fails == std::vector<std::pair<int, long>>{{1, 20}, {1, 21}});
  }
  SUBCASE("missing k + 1") {
    auto f = eventually_constant(10);
    const auto rep = check_stability_odd(f, {10, 10}, {1, 1});
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].status == CheckStatus::skipped);
    CHECK(rep.entries[0].note == "skipped: missing data for H_1 at k = 11");
  }
  SUBCASE("even manifolds are rejected") {
    CHECK_THROWS_WITH_AS(check_stability_odd(sphere_family(2, 5), {2, 4}, {1, 1}), doctest::Contains("wrong parity"),
                         Error);
  }
}

TEST_CASE("isomorphism type census") {
  const auto f = sphere_family(2, 120);
  SUBCASE("odd primes give two types split by p | 2k - 2") {
    for (long p : {3, 5, 7}) {
      const auto rep = iso_type_census(f, 1, p, 1, {2, 100});
      REQUIRE(rep.types.size() == 2);
      CHECK(rep.skipped.empty());
      for (const auto& t : rep.types) {
        REQUIRE(t.valuation_classes.size() == 1);
        const bool divisible = *t.valuation_classes.begin() == 1;
        CHECK(t.group == (divisible ? FGAbelianGroup::cyclic(p) : FGAbelianGroup{}));
        for (long k : t.ks) CHECK(((2 * k - 2) % p == 0) == divisible);
      }
    }
  }
  SUBCASE("p = 2, r = 1 gives one type") {
    const auto rep = iso_type_census(f, 1, 2, 1, {2, 100});
    REQUIRE(rep.types.size() == 1);
    // Z/2 from the tensor term, nothing from Tor(H_0 = Z, Z/2).
    CHECK(rep.types[0].group == FGAbelianGroup::cyclic(2));
    CHECK(rep.types[0].ks.size() == 99);
  }
  SUBCASE("at most r + 1 types") {
    for (long p : {2, 3, 5})
      for (unsigned r = 1; r <= 4; ++r) CHECK(iso_type_census(f, 1, p, r, {2, 100}).types.size() <= r + 1);
  }
  SUBCASE("constant family") {
    HomologyFamily c;
    c.manifold = manifold(2, true, true);
    c.manifold.euler = 1;
    for (long k = 0; k <= 20; ++k) c.set(1, k, FGAbelianGroup::cyclic(6));
    CHECK(iso_type_census(c, 1, 3, 2, {2, 20}).types.size() == 1);
  }
  SUBCASE("needs the Euler characteristic") {
    HomologyFamily c;
    c.manifold = manifold(2, true, true);
    CHECK_THROWS_WITH_AS(iso_type_census(c, 1, 3, 1, {2, 20}), doctest::Contains("descriptor incomplete"), Error);
  }
}

TEST_CASE("projective spaces") {
  const auto h2 = integral_homology(projective_space_complex(2));
  CHECK(h2.at(0) == FGAbelianGroup::free(1));
  CHECK(h2.at(1) == FGAbelianGroup::cyclic(2));
  CHECK(h2.at(2).is_trivial());
  const auto h3 = integral_homology(projective_space_complex(3));
  CHECK(h3.at(3) == FGAbelianGroup::free(1));
  const auto h1 = integral_homology(projective_space_complex(1));
  CHECK(h1.at(0) == FGAbelianGroup::free(1));
  CHECK(h1.at(1) == FGAbelianGroup::free(1));
  CHECK_THROWS_WITH_AS(projective_space_complex(0), doctest::Contains("invalid dimension"), Error);
}

TEST_CASE("Browder bracket") {
  SUBCASE("derivation expansion") {
    for (unsigned m = 1; m <= 6; ++m) {
      const auto e = expand_bracket_with_power(m);
      REQUIRE(e.size() == 1);
      CHECK(e.begin()->first == BrowderMonomial{m - 1, 1});
      CHECK(e.begin()->second == m);
    }
  }
  SUBCASE("examples") {
    const auto a = browder_vanishing(3, 1, 0);
    CHECK(a.vanishes);
    CHECK(a.top_homology.is_trivial());
    CHECK(a.witness.find("H_2(RP^2; Z) = 0") != std::string::npos);
    CHECK(browder_vanishing(2, 3, 6).vanishes);
    const auto c = browder_vanishing(2, 1, 4);
    CHECK_FALSE(c.vanishes);
    CHECK(c.coefficient == 2);
  }
  SUBCASE("even n: vanishing exactly when d | 2m") {
    for (int n : {2, 4, 6})
      for (unsigned m = 1; m <= 5; ++m)
        for (long d = 2; d <= 12; ++d) CHECK(browder_vanishing(n, m, d).vanishes == ((2 * m) % d == 0));
  }
  SUBCASE("odd n always vanishes") {
    for (int n : {3, 5, 7, 9})
      for (unsigned m = 1; m <= 5; ++m) {
        CHECK(browder_vanishing(n, m, 0).vanishes);
        CHECK(integral_homology(projective_space_complex(n - 1)).at(n - 1).is_trivial());
      }
  }
  SUBCASE("invalid arguments") {
    CHECK_THROWS_AS(browder_vanishing(2, 1, 1), Error);
    CHECK_THROWS_AS(browder_vanishing(2, 1, -3), Error);
    CHECK_THROWS_AS(browder_vanishing(1, 1, 0), Error);
    CHECK_THROWS_AS(browder_vanishing(2, 0, 0), Error);
  }
}
