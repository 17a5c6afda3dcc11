// Acceptance run: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cfhom/chain_complex.hpp"
#include "cfhom/error.hpp"
#include "cfhom/modpr.hpp"
#include "cfhom/smith.hpp"
#include "cfhom/stability.hpp"
#include "cfhom/transfer.hpp"
#include "support/oracles.hpp"

using namespace cfhom;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RandomComplexParams corpus_params() {
  RandomComplexParams params;
  params.degrees = 4;
  params.max_rank = 4;
  params.torsion_primes = {2, 3};
  params.max_exponent = 2;
  return params;
}

std::vector<ChainComplex> corpus(std::size_t n, std::uint64_t seed) {
  std::vector<ChainComplex> out;
  out.reserve(n);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    auto params = corpus_params();
    params.degrees = 1 + rng() % 4;
    out.push_back(random_complex(params, rng()));
  }
  return out;
}

bool divisibility_chain(const IntMatrix& d) {
  const std::size_t n = std::min(d.rows(), d.cols());
  if (!d.is_diagonal()) return false;
  bool seen_zero = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& x = d(i, i);
    if (x < 0) return false;
    if (x == 0) {
      seen_zero = true;
      continue;
    }
    if (seen_zero) return false;
    if (i + 1 < n && d(i + 1, i + 1) != 0 && d(i + 1, i + 1) % x != 0) return false;
  }
  return true;
}

Outcome snf_suite() {
  const auto start = Clock::now();
  std::mt19937_64 rng(20240501);
  std::size_t small = 0;
  for (int i = 0; i < 500; ++i) {
    const std::size_t cap = i % 4 == 0 ? 6 : 20;
    const std::size_t rows = 1 + rng() % cap;
    const std::size_t cols = 1 + rng() % cap;
    const IntMatrix a = oracle::random_matrix(rng, rows, cols, 50);
    const auto snf = smith_normal_form(a);
    if (snf.U * a * snf.V != snf.D) return {false, "U A V != D for matrix " + std::to_string(i)};
    if (abs(snf.U.determinant()) != 1 || abs(snf.V.determinant()) != 1)
      return {false, "transform not unimodular for matrix " + std::to_string(i)};
    if (!divisibility_chain(snf.D)) return {false, "divisibility chain broken for matrix " + std::to_string(i)};
    if (rows <= 6 && cols <= 6) {
      ++small;
      if (invariant_factors(a) != oracle::invariant_factors_by_minors(a))
        return {false, "minors oracle disagrees on matrix " + std::to_string(i)};
    }
  }
  const double t = seconds_since(start);
  Outcome o{t < 60.0, "500 matrices, " + std::to_string(small) + " against the minors oracle, " +
                          std::to_string(t).substr(0, 5) + " s"};
  return o;
}

Outcome oracle_equivalence() {
  const Integer qs[] = {2, 3, 4, 5, 8, 9};
  std::size_t comparisons = 0;
  std::size_t mismatches = 0;
  for (const auto& c : corpus(200, 7)) {
    for (const auto& q : qs) {
      const auto uct = cardinalities_of(mod_q_homology(c, q));
      const auto brute = brute_force_mod_q_homology(c, q);
      for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
        ++comparisons;
        if (uct.at(d) != brute.at(d)) ++mismatches;
      }
    }
  }
  return {mismatches == 0, std::to_string(comparisons) + " degree comparisons, " + std::to_string(mismatches) +
                               " mismatches"};
}

Outcome round_trip() {
  const std::pair<long, unsigned> levels[] = {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}};
  std::size_t mod_checks = 0;
  std::size_t integral_checks = 0;
  std::size_t mismatches = 0;
  std::size_t with_torsion = 0;
  for (const auto& c : corpus(200, 7)) {
    for (const auto& [p, r] : levels) {
      const Integer q = power(p, r);
      const auto expected = mod_q_homology(c, q);
      const auto got = reconstruct_mod_pr(cardinality_table(c, p, r));
      for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
        ++mod_checks;
        if (expected.at(d) != got.at(d)) ++mismatches;
      }
    }
    const std::vector<CardinalityTable> tables{cardinality_table(c, 2, 3), cardinality_table(c, 3, 3)};
    const auto expected = integral_homology(c);
    for (const auto& g : expected.groups)
      if (!g.invariant_factors().empty()) {
        ++with_torsion;
        break;
      }
    const auto got = reconstruct_integral(tables);
    for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
      ++integral_checks;
      if (expected.at(d) != got.at(d)) ++mismatches;
    }
  }
  return {mismatches == 0, std::to_string(mod_checks) + " mod p^r and " + std::to_string(integral_checks) +
                               " integral degree comparisons over " + std::to_string(with_torsion) +
                               " complexes with torsion, " + std::to_string(mismatches) + " mismatches"};
}

Outcome min_matrix_determinants() {
  for (unsigned r = 1; r <= 20; ++r) {
    const auto det = min_matrix(r).determinant();
    if (det != 1) return {false, "det = " + to_string(det) + " at r = " + std::to_string(r)};
  }
  return {true, "r = 1..20"};
}

Outcome cone_identity() {
  const Integer qs[] = {2, 3, 4, 9};
  std::mt19937_64 rng(99);
  std::size_t degrees = 0;
  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    auto params = corpus_params();
    params.degrees = 1 + rng() % 3;
    params.max_rank = 3;
    params.base_degree = static_cast<int>(rng() % 2);
    const auto source = random_complex(params, rng());
    params.base_degree = static_cast<int>(rng() % 2);
    const auto target = random_complex(params, rng());
    const auto f = random_chain_map(source, target, rng());
    for (const auto& q : qs) {
      const auto report = les_cardinality_check(f, q);
      for (const auto& d : report.degrees) {
        ++degrees;
        if (!d.holds) ++failures;
      }
    }
  }
  return {failures == 0, "200 maps, " + std::to_string(degrees) + " degree checks, " + std::to_string(failures) +
                             " failures"};
}

Outcome sphere_periodicity() {
  const auto family = sphere_family(2, 56);
  std::size_t passes = 0;
  for (long m = 1; m <= 6; ++m) {
    for (long d = 2; d <= 2 * m; ++d) {
      if ((2 * m) % d != 0) continue;
      const auto report = check_periodicity_even(family, m, d, {2, 50}, {1, 1});
      if (report.count(CheckStatus::pass) != 49 || report.count(CheckStatus::fail) != 0)
        return {false, "m = " + std::to_string(m) + ", d = " + std::to_string(d) + " not a full pass"};
      passes += report.count(CheckStatus::pass);
    }
  }
  bool rejected = false;
  try {
    check_periodicity_even(family, 1, 4, {2, 50}, {1, 1});
  } catch (const Error& e) {
    rejected = std::string(e.what()).find("hypothesis violation") != std::string::npos;
  }
  if (!rejected) return {false, "m = 1, d = 4 not rejected"};
  const auto at3 = tensor_tor_with_zq(sphere_h1(3), 4).tensor;
  const auto at4 = tensor_tor_with_zq(sphere_h1(4), 4).tensor;
  if (at3 == at4) return {false, "negative control groups agree"};
  return {true, std::to_string(passes) + " comparisons pass; m = 1, d = 4 rejected; H_1(C_3; Z/4) = " +
                    at3.to_string() + " vs H_1(C_4; Z/4) = " + at4.to_string()};
}

Outcome census() {
  const auto family = sphere_family(2, 100);
  for (long p : {3L, 5L, 7L}) {
    const auto report = iso_type_census(family, 1, p, 1, {2, 100});
    if (report.types.size() != 2) return {false, "p = " + std::to_string(p) + ": not 2 types"};
    for (const auto& type : report.types) {
      std::set<bool> divides;
      for (long k : type.ks) divides.insert((2 * k - 2) % p == 0);
      if (divides.size() != 1) return {false, "p = " + std::to_string(p) + ": type mixes divisibility classes"};
    }
  }
  const auto two = iso_type_census(family, 1, 2, 3, {2, 100});
  if (two.types.size() > 4) return {false, "p = 2, r = 3: " + std::to_string(two.types.size()) + " types"};
  return {true, "2 types for p = 3, 5, 7; " + std::to_string(two.types.size()) + " types for p = 2, r = 3"};
}

Outcome browder() {
  for (int n : {3, 5, 7, 9}) {
    const auto result = browder_vanishing(n, 1, 0);
    if (!result.top_homology.is_trivial() || !result.vanishes)
      return {false, "n = " + std::to_string(n) + ": top homology nonzero"};
  }
  std::size_t cases = 0;
  for (int n : {2, 4, 6})
    for (unsigned m = 1; m <= 5; ++m)
      for (long d = 2; d <= 12; ++d) {
        ++cases;
        const bool expected = (2 * static_cast<long>(m)) % d == 0;
        if (browder_vanishing(n, m, d).vanishes != expected)
          return {false, "n = " + std::to_string(n) + ", m = " + std::to_string(m) + ", d = " + std::to_string(d)};
      }
  return {true, "odd n vanish; " + std::to_string(cases) + " even cases match d | 2m"};
}

Outcome dold() {
  const auto start = Clock::now();
  const auto reports = dold_sweep(4, 5);
  std::size_t basis = 0;
  for (const auto& r : reports) {
    if (!r.ok())
      return {false, "mismatch at ground " + std::to_string(r.ground_size) + ", k = " + std::to_string(r.k) +
                         ", l = " + std::to_string(r.l)};
    basis += r.basis_elements;
  }
  const double t = seconds_since(start);
  return {t < 10.0, std::to_string(reports.size()) + " parameter sets, " + std::to_string(basis) +
                        " basis configurations, " + std::to_string(t).substr(0, 5) + " s"};
}

FGAbelianGroup random_group(std::mt19937_64& rng) {
  std::vector<Integer> orders;
  const std::size_t t = rng() % 3;
  for (std::size_t i = 0; i < t; ++i) orders.emplace_back(static_cast<long>(2 + rng() % 6));
  return FGAbelianGroup::from_cyclic_orders(rng() % 3, orders);
}

Outcome checker_self_tests() {
  std::mt19937_64 rng(5);
  ManifoldDescriptor three;
  three.dim = 3;
  three.open = true;
  const IntRange ks{0, 40};
  const IntRange degrees{1, 4};
  std::size_t families = 0;
  for (int trial = 0; trial < 50; ++trial) {
    HomologyFamily family{three, {}};
    for (int i = degrees.first; i <= degrees.last; ++i) {
      // Arbitrary below k = 2i, constant from there on.
      const auto stable = random_group(rng);
      for (long k = ks.first; k <= ks.last + 1; ++k) family.set(i, k, k >= 2 * i ? stable : random_group(rng));
    }
    const auto clean = check_stability_odd(family, ks, degrees);
    if (!clean.ok() || clean.count(CheckStatus::skipped) != 0)
      return {false, "eventually constant family " + std::to_string(trial) + " rejected"};

    const int bad_degree = degrees.first + static_cast<int>(rng() % 4);
    const long bad_k = 2 * bad_degree + 1 + static_cast<long>(rng() % (ks.last - 2 * bad_degree));
    auto defect = family;
    defect.set(bad_degree, bad_k, family.find(bad_degree, bad_k)->direct_sum(FGAbelianGroup::cyclic(2)));
    std::set<std::pair<int, long>> failed;
    for (const auto& e : check_stability_odd(defect, ks, degrees).entries)
      if (e.status == CheckStatus::fail) failed.insert({e.degree, e.k});
    const std::set<std::pair<int, long>> expected{{bad_degree, bad_k - 1}, {bad_degree, bad_k}};
    if (failed != expected)
      return {false, "planted defect at (" + std::to_string(bad_degree) + ", " + std::to_string(bad_k) +
                         ") not pinpointed"};
    ++families;
  }

  ManifoldDescriptor surface;
  surface.surface = true;
  auto mobius = surface;
  mobius.orientable = false;
  const bool ranges = stable_range(10, three, RingDescriptor::mod_q(3)) == 10 &&
                      stable_range(10, surface, RingDescriptor::char_zero_field()) == 9 &&
                      stable_range(10, mobius, RingDescriptor::char_zero_field()) == 10 &&
                      stable_range(9, three, RingDescriptor::integers()) == 4;
  if (!ranges) return {false, "stable range examples"};
  return {true, std::to_string(families) + " synthetic families with planted defects; stable range examples"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"Smith normal form suite", snf_suite},
      {"mod-q homology against brute force", oracle_equivalence},
      {"cardinality round trip", round_trip},
      {"min-matrix determinants", min_matrix_determinants},
      {"cone cardinality identity", cone_identity},
      {"S^2 periodicity", sphere_periodicity},
      {"isomorphism type census", census},
      {"Browder vanishing", browder},
      {"Dold identity sweep", dold},
      {"checker self-tests", checker_self_tests},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2d  %-36s %s  (%s)\n", index, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
