#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cfhom/abelian_group.hpp"
#include "cfhom/chain_complex.hpp"
#include "cfhom/int_matrix.hpp"

namespace cfhom {

/// Elementary complex over Z/p^level, placed with its lower end in degree
/// `shift`. Type s == level is Z/p^level alone; type s < level is
/// [Z/p^level --p^s--> Z/p^level] in degrees shift + 1 -> shift.
struct ElementaryComplex {
  Integer p;
  unsigned level = 1;
  unsigned type = 1;
  int shift = 0;

  ChainComplex to_complex() const;
};

/// Multiplicities a_i^(s) of elementary complexes of type s in degree i,
/// at a fixed prime p and level r.
class DecompositionProfile {
 public:
  DecompositionProfile(Integer p, unsigned level);

  const Integer& p() const noexcept { return p_; }
  unsigned level() const noexcept { return level_; }

  std::size_t count(int degree, unsigned type) const;
  void add(int degree, unsigned type, std::size_t n = 1);

  /// Nonzero entries keyed by (degree, type).
  const std::map<std::pair<int, unsigned>, std::size_t>& counts() const noexcept { return counts_; }
  bool empty() const noexcept { return counts_.empty(); }
  int min_degree() const;
  int max_degree() const;

  /// The direct sum of all elementary complexes in the profile.
  ChainComplex to_complex(int base_degree, int top_degree) const;

  friend bool operator==(const DecompositionProfile&, const DecompositionProfile&) = default;

 private:
  Integer p_;
  unsigned level_;
  std::map<std::pair<int, unsigned>, std::size_t> counts_;
};

/// Cardinalities #H_i(C (x) Z/p^w) for every degree i and level w <= max_level.
struct CardinalityTable {
  Integer p;
  unsigned max_level = 1;
  std::map<int, std::map<unsigned, Integer>> values;  ///< degree -> level -> cardinality

  /// Missing entries read as 1.
  Integer at(int degree, unsigned level) const;
  /// Same table restricted to levels <= level.
  CardinalityTable truncated(unsigned level) const;
  friend bool operator==(const CardinalityTable&, const CardinalityTable&) = default;
};

/// r x r matrix with (w, s) entry min(w, s). Unimodular for every r >= 1.
IntMatrix min_matrix(unsigned r);

/// Splits a complex over Z/p^r into elementary complexes, up to contractible
/// summands.
///
/// Pivots are taken in order of increasing p-adic valuation across all
/// differentials; unit pivots cancel contractible pairs and pivots p^s,
/// 1 <= s < r, become A^(s) summands. What remains with zero differential
/// contributes A^(r). Throws "unsupported ring" unless the modulus is a prime
/// power, and throws when the complex is not a sum of elementary complexes
/// (which cannot happen for reductions of integral complexes).
DecompositionProfile elementary_decompose(const ChainComplex& c);

/// Splits the modulus by the Chinese remainder theorem and decomposes each
/// prime-power reduction.
std::vector<DecompositionProfile> elementary_decompose_crt(const ChainComplex& c);

/// #H_i(P (x) Z/p^w) for each degree touched by the profile (and the degree
/// above it). Requires 1 <= w <= level.
///
/// Multiplication by p^s on Z/p^w has kernel and cokernel of order
/// p^min(w, s), so log_p #H_i = sum_s a_i^(s) min(w, s) + sum_{s<r} a_{i-1}^(s) min(w, s).
std::map<int, Integer> cardinalities_of_profile(const DecompositionProfile& profile, unsigned w);

/// Groups H_i(P) over Z/p^level of the elementary sum P, degrees [lo, hi].
GradedGroups profile_homology(const DecompositionProfile& profile, int lo, int hi);

/// Builds the table of a complex by computing H_*(C (x) Z/p^w) for w <= r.
/// Works for complexes over Z and over Z/p^R with R >= r.
CardinalityTable cardinality_table(const ChainComplex& c, const Integer& p, unsigned r);

/// Recovers the profile at level max_level from a cardinality table by
/// solving the min(w, s) system degree by degree, from the lowest degree up.
/// Throws "inconsistent cardinality table" when the data cannot come from a
/// free complex.
DecompositionProfile solve_profile(const CardinalityTable& table);

/// H_i(C (x) Z/p^r) for r = table.max_level, over the table's degree range.
GradedGroups reconstruct_mod_pr(const CardinalityTable& table);

/// Integral homology from one table per prime.
///
/// Each table is read at its top level r: Z/p^s summands with s < r come
/// from the profile, and the free rank from the count of top-type summands.
/// A summand Z/p^t with t >= r looks exactly like a pair of free summands in
/// adjacent degrees at every level up to r, so tables must be taken at a
/// level beyond the largest exponent. When free ranks disagree across primes
/// and the excess is explained by such pairs, the error asks for a larger
/// level; any other disagreement is reported as inconsistent tables.
GradedGroups reconstruct_integral(std::span<const CardinalityTable> tables);

}  // namespace cfhom
