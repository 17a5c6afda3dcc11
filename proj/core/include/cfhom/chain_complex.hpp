#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cfhom/abelian_group.hpp"
#include "cfhom/int_matrix.hpp"

namespace cfhom {

/// Bounded complex of finitely generated free modules over Z (modulus 0) or
/// over Z/q (modulus q).
///
/// Degrees are absolute: the complex occupies degrees base_degree() through
/// top_degree(), and boundaries()[k] is the differential from degree
/// base_degree() + k + 1 to degree base_degree() + k, with shape
/// rank(d - 1) x rank(d). Entries are stored as integers in both cases; the
/// modulus only changes how they are interpreted.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// Validates on construction; see validate_complex.
  ChainComplex(int base_degree, std::vector<std::size_t> ranks, std::vector<IntMatrix> boundaries,
               Integer modulus = 0);

  int base_degree() const noexcept { return base_degree_; }
  int top_degree() const noexcept { return base_degree_ + static_cast<int>(ranks_.size()) - 1; }
  std::size_t length() const noexcept { return ranks_.size(); }
  bool empty() const noexcept { return ranks_.empty(); }
  const Integer& modulus() const noexcept { return modulus_; }

  const std::vector<std::size_t>& ranks() const noexcept { return ranks_; }
  const std::vector<IntMatrix>& boundaries() const noexcept { return boundaries_; }

  /// Rank of the chain group in `degree`; 0 outside the stored range.
  std::size_t rank(int degree) const;
  /// Differential out of `degree`, rank(degree - 1) x rank(degree). Zero
  /// (possibly empty) matrix where no boundary is stored.
  IntMatrix differential(int degree) const;

  /// C (x) Z/q: entries reduced into [0, q), modulus set to q. Requires q | modulus
  /// when the complex is already over a residue ring.
  ChainComplex reduced_mod(const Integer& q) const;

  /// Degreewise direct sum; both summands must share the modulus.
  ChainComplex direct_sum(const ChainComplex& other) const;

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  int base_degree_ = 0;
  std::vector<std::size_t> ranks_;
  std::vector<IntMatrix> boundaries_;
  Integer modulus_ = 0;
};

/// Checks dimensions and d o d = 0 (mod modulus). Throws cfhom::Error with
/// "shape error: ..." or "not a complex: ..." naming the offending degree.
void validate_complex(int base_degree, std::span<const std::size_t> ranks,
                      std::span<const IntMatrix> boundaries, const Integer& modulus);
void validate_complex(const ChainComplex& c);

/// Groups indexed by absolute degree; degrees outside the range are zero.
struct GradedGroups {
  int base_degree = 0;
  std::vector<FGAbelianGroup> groups;

  FGAbelianGroup at(int degree) const;
  int top_degree() const noexcept { return base_degree + static_cast<int>(groups.size()) - 1; }
  friend bool operator==(const GradedGroups&, const GradedGroups&) = default;
};

/// Cardinalities indexed by absolute degree; 1 outside the range.
struct GradedCardinalities {
  int base_degree = 0;
  std::vector<Integer> values;

  Integer at(int degree) const;
  friend bool operator==(const GradedCardinalities&, const GradedCardinalities&) = default;
};

GradedCardinalities cardinalities_of(const GradedGroups& groups);

/// H_*(C) over Z. Requires modulus 0.
GradedGroups integral_homology(const ChainComplex& c);

/// H_*(C (x) Z/q) through the universal coefficient theorem. Requires modulus 0.
GradedGroups mod_q_homology(const ChainComplex& c, const Integer& q);

/// #H_*(C (x) Z/q) computed directly at chain level as #cycles / #boundaries
/// of submodules of (Z/q)^n. Works for any modulus divisible by q (or 0).
GradedCardinalities mod_q_cardinalities(const ChainComplex& c, const Integer& q);

/// Exhaustive enumeration of kernels and images in (Z/q)^rank. Independent
/// oracle for small instances: throws when q^(max rank) exceeds 10^6.
GradedCardinalities brute_force_mod_q_homology(const ChainComplex& c, const Integer& q);

/// Degreewise maps between complexes with the same modulus.
///
/// components()[k] is the map in degree source.base_degree() + k, with shape
/// target.rank(d) x source.rank(d).
class ChainMap {
 public:
  /// Throws "does not commute with boundaries" unless f d = d f (mod modulus).
  ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> components);

  static ChainMap identity(const ChainComplex& c);
  static ChainMap scalar(const ChainComplex& c, const Integer& factor);
  static ChainMap zero(const ChainComplex& source, const ChainComplex& target);

  const ChainComplex& source() const noexcept { return source_; }
  const ChainComplex& target() const noexcept { return target_; }
  const std::vector<IntMatrix>& components() const noexcept { return components_; }

  /// Map in `degree`; zero matrix outside the source range.
  IntMatrix component(int degree) const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<IntMatrix> components_;
};

/// Cone(f)_d = source_{d-1} + target_d with differential [[-d, 0], [f, d]].
ChainComplex mapping_cone(const ChainMap& f);

struct LesDegreeCheck {
  int degree = 0;
  Integer cone;       ///< #H_d(cone(f) (x) Z/q)
  Integer cokernel;   ///< #coker(f_* : H_d(source; Z/q) -> H_d(target; Z/q))
  Integer kernel;     ///< #ker(f_* : H_{d-1}(source; Z/q) -> H_{d-1}(target; Z/q))
  bool holds = false;
};

struct LesReport {
  Integer q;
  std::vector<LesDegreeCheck> degrees;
  bool all_hold() const;
};

/// Verifies #H_d(cone) = #coker(f_*)_d * #ker(f_*)_{d-1} in every degree of
/// the cone. The cone side goes through homology of the cone; the right-hand
/// side is computed from the induced map on cycles of source and target.
LesReport les_cardinality_check(const ChainMap& f, const Integer& q);

struct RandomComplexParams {
  std::size_t degrees = 4;     ///< number of chain groups
  std::size_t max_rank = 4;    ///< per-degree rank cap
  long entry_bound = 2;        ///< bound on coefficients of basis-change operations
  std::vector<long> torsion_primes;
  unsigned max_exponent = 2;   ///< torsion summands are Z/p^s with s <= max_exponent
  int base_degree = 0;
};

/// Deterministic random complex over Z whose homology torsion is supported
/// on params.torsion_primes. Built as a sum of free summands and elementary
/// pieces [Z --x--> Z], then conjugated degreewise by random unimodular
/// matrices.
ChainComplex random_complex(const RandomComplexParams& params, std::uint64_t seed);

/// Random integral combination of a Z-basis of all chain maps source -> target.
/// Both complexes must be over Z.
ChainMap random_chain_map(const ChainComplex& source, const ChainComplex& target,
                          std::uint64_t seed, long coefficient_bound = 2);

}  // namespace cfhom
