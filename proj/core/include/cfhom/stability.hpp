#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cfhom/abelian_group.hpp"
#include "cfhom/chain_complex.hpp"

namespace cfhom {

struct ManifoldDescriptor {
  int dim = 2;
  bool orientable = true;
  bool surface = false;
  bool open = false;
  std::optional<long> euler;  ///< Euler characteristic, when known
  bool finite_type = true;

  /// Throws unless dim >= 1 and (surface implies dim == 2).
  void validate() const;
};

/// Coefficient ring of a homology computation, as far as the stable range
/// cares about it.
class RingDescriptor {
 public:
  enum class Kind { integers, mod_q, char_zero_field, two_inverted };

  static RingDescriptor integers() { return RingDescriptor(Kind::integers, 0); }
  static RingDescriptor mod_q(const Integer& q);
  static RingDescriptor char_zero_field() { return RingDescriptor(Kind::char_zero_field, 0); }
  static RingDescriptor two_inverted() { return RingDescriptor(Kind::two_inverted, 0); }
  /// "Z", "Q", "Z[1/2]" or "Z/q".
  static RingDescriptor parse(const std::string& text);

  Kind kind() const noexcept { return kind_; }
  const Integer& modulus() const noexcept { return q_; }
  bool two_is_unit() const;
  std::string to_string() const;

 private:
  RingDescriptor(Kind kind, Integer q) : kind_(kind), q_(std::move(q)) {}
  Kind kind_;
  Integer q_;
};

/// Integral groups H_i(C_k(M)) indexed by degree i, then particle count k.
///
/// M is connected, so a missing H_0 entry is read as Z by the checkers.
struct HomologyFamily {
  ManifoldDescriptor manifold;
  std::map<int, std::map<long, FGAbelianGroup>> degrees;

  const FGAbelianGroup* find(int degree, long k) const;
  /// Stored group, Z for an absent H_0, 0 in negative degrees, else nullopt.
  std::optional<FGAbelianGroup> lookup(int degree, long k) const;
  void set(int degree, long k, FGAbelianGroup group);
};

struct IntRange {
  long first = 0;
  long last = -1;
};

/// Degrees i for which stabilization C_k -> C_{k+1} of an open manifold is
/// an isomorphism on H_i(-; R):
///   k      if 2 is a unit in R and dim >= 3
///   k      if R is a field of characteristic zero and M a non-orientable surface
///   k - 1  if R is a field of characteristic zero and M an orientable surface
///   k / 2  otherwise, rounded down
/// The k - 1 branch is clamped below by floor(k / 2), which only matters for k <= 1.
long stable_range(long k, const ManifoldDescriptor& manifold, const RingDescriptor& ring);

/// H_1(C_k(S^2)) = Z/(2k - 2), for k >= 2.
FGAbelianGroup sphere_h1(long k);

/// Degree-1 family of M = S^2: H_1 = Z/(2k - 2) for k in [first, last].
HomologyFamily sphere_family(long first, long last);

enum class CheckStatus { pass, fail, skipped };

struct CheckEntry {
  int degree = 0;
  long k = 0;
  long k_other = 0;
  CheckStatus status = CheckStatus::skipped;
  FGAbelianGroup lhs;  ///< group at k
  FGAbelianGroup rhs;  ///< group at k_other
  std::string note;
};

struct CheckReport {
  std::vector<CheckEntry> entries;  ///< sorted by (degree, k)
  std::size_t outside_stable_range = 0;

  std::size_t count(CheckStatus status) const;
  bool ok() const { return count(CheckStatus::fail) == 0; }
};

/// H_i(C_k; Z/d) vs H_i(C_{k+m}; Z/d) for even-dimensional M, d | 2m and
/// i <= stable_range(k, M, Z/d). Mod-d groups come from the integral family
/// by the universal coefficient theorem.
CheckReport check_periodicity_even(const HomologyFamily& family, long m, const Integer& d,
                                   IntRange k_range, IntRange degree_range);

/// H_i(C_k; Z) vs H_i(C_{k+1}; Z) for odd-dimensional M and
/// i <= stable_range(k, M, Z).
CheckReport check_stability_odd(const HomologyFamily& family, IntRange k_range, IntRange degree_range);

struct CensusType {
  FGAbelianGroup group;                 ///< H_i(C_k; Z/p^r)
  std::vector<long> ks;
  std::set<unsigned> valuation_classes;  ///< min(v_p(2k - chi), r) over ks
};

struct CensusReport {
  int degree = 0;
  Integer p;
  unsigned r = 1;
  std::vector<CensusType> types;  ///< in order of first appearance
  std::vector<long> skipped;      ///< k without data or outside the stable range
};

/// Partitions k by the isomorphism type of H_i(C_k; Z/p^r) in the stable range.
CensusReport iso_type_census(const HomologyFamily& family, int degree, const Integer& p, unsigned r,
                             IntRange k_range);

/// Cellular chains of RP^m: Z in degrees 0..m, d_i = 1 + (-1)^i.
ChainComplex projective_space_complex(int m);

/// Monomial P^a * phi(P, P)^b in the Pontryagin ring with the Browder bracket.
struct BrowderMonomial {
  unsigned point_power = 0;
  unsigned bracket_count = 0;
  auto operator<=>(const BrowderMonomial&) const = default;
};
using BrowderExpression = std::map<BrowderMonomial, Integer>;

/// phi(P, P^m) expanded with the derivation rule
/// phi(P, x y) = phi(P, x) y + x phi(P, y). Requires m >= 1.
BrowderExpression expand_bracket_with_power(unsigned m);

struct BrowderResult {
  bool vanishes = false;
  Integer coefficient;          ///< multiple of the top class of RP^{n-1} hit by phi(P, P^m)
  FGAbelianGroup top_homology;  ///< H_{n-1}(RP^{n-1}; Z)
  std::string witness;
};

/// Whether phi(P, P^m) vanishes in H_{n-1}(C_2(R^n); Z/d) (d = 0 means Z).
BrowderResult browder_vanishing(int n, unsigned m, const Integer& d);

}  // namespace cfhom
