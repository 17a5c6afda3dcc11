#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfhom/integer.hpp"

namespace cfhom {

/// Multiset on the labels 0..ground_size()-1 with every multiplicity at most
/// bound(): a point of Sym^{<=j} of a finite set.
class BoundedMultiset {
 public:
  BoundedMultiset() = default;
  /// Throws when some multiplicity exceeds the bound.
  BoundedMultiset(std::vector<unsigned> multiplicities, unsigned bound);
  /// Multiset from a list of labels, e.g. {0, 0, 2}.
  static BoundedMultiset from_labels(std::size_t ground_size, const std::vector<std::size_t>& labels,
                                     unsigned bound);

  std::size_t ground_size() const noexcept { return mult_.size(); }
  unsigned bound() const noexcept { return bound_; }
  unsigned multiplicity(std::size_t label) const { return mult_.at(label); }
  const std::vector<unsigned>& multiplicities() const noexcept { return mult_; }
  unsigned size() const noexcept;
  bool is_configuration() const noexcept;

  /// Same multiset viewed in Sym^{<=new_bound}; new_bound must not be smaller
  /// than any multiplicity.
  BoundedMultiset with_bound(unsigned new_bound) const;

  /// "{a, a, m0}": labels are letters, `basepoint` prints as m0.
  std::string to_string(std::optional<std::size_t> basepoint = std::nullopt) const;

  friend auto operator<=>(const BoundedMultiset&, const BoundedMultiset&) = default;

 private:
  std::vector<unsigned> mult_;
  unsigned bound_ = 1;
};

/// Finite integral combination of multisets sharing ground set and bound.
class MultisetChain {
 public:
  MultisetChain() = default;
  explicit MultisetChain(const BoundedMultiset& s, Integer coefficient = 1);

  void add(const BoundedMultiset& s, const Integer& coefficient);
  MultisetChain& operator+=(const MultisetChain& other);
  friend MultisetChain operator+(MultisetChain a, const MultisetChain& b) { return a += b; }
  MultisetChain scaled(const Integer& factor) const;

  const std::map<BoundedMultiset, Integer>& terms() const noexcept { return terms_; }
  Integer coefficient(const BoundedMultiset& s) const;
  bool empty() const noexcept { return terms_.empty(); }
  Integer total_mass() const;

  std::string to_string(std::optional<std::size_t> basepoint = std::nullopt) const;

  friend bool operator==(const MultisetChain&, const MultisetChain&) = default;

 private:
  std::map<BoundedMultiset, Integer> terms_;
};

/// Q: adds a particle at m0. The input must be a configuration (all
/// multiplicities <= 1); the result lives in Sym^{<=2}.
BoundedMultiset add_particle(const BoundedMultiset& s, std::size_t m0);
MultisetChain add_particle(const MultisetChain& x, std::size_t m0);

/// c: every k-element submultiset t of s, weighted by the number of ways to
/// pick t from the particles of s (product of binomial coefficients).
MultisetChain select_submultisets(const BoundedMultiset& s, unsigned k);

/// A collection of multisets with a coefficient, i.e. a term of a chain in Sym_d(X).
using MultisetCollection = std::vector<BoundedMultiset>;

/// a: adds the members of each collection together, linearly in the coefficients.
MultisetChain flatten_add(const std::vector<std::pair<MultisetCollection, Integer>>& outer);

/// tau_{k,l} = a o c_*, on a chain whose terms all have the same size l.
MultisetChain transfer(const MultisetChain& x, unsigned k);

/// iota: the inclusion Sym^{<=j} -> Sym^{<=new_bound}.
MultisetChain include(const MultisetChain& x, unsigned new_bound);

struct DoldMismatch {
  BoundedMultiset configuration;
  BoundedMultiset basis;
  Integer lhs;
  Integer rhs;
};

struct DoldReport {
  std::size_t ground_size = 0;  ///< ordinary labels; m0 is the extra label ground_size
  unsigned k = 0;
  unsigned l = 0;
  std::size_t configurations = 0;
  std::size_t basis_elements = 0;
  std::vector<DoldMismatch> mismatches;
  bool ok() const noexcept { return mismatches.empty(); }
};

/// Checks tau^2_{k,l} o Q_* = iota o tau^1_{k,l-1} + Q_* o tau^1_{k-1,l-1} on
/// every configuration of size l - 1 on ground_size labels plus m0.
/// Requires 1 <= k < l and l - 1 <= ground_size + 1.
DoldReport verify_dold_identity(std::size_t ground_size, unsigned k, unsigned l);

/// All feasible (ground size, k, l) with ground size <= max_ground_size and
/// 1 <= k < l <= max_l.
std::vector<DoldReport> dold_sweep(std::size_t max_ground_size, unsigned max_l);

}  // namespace cfhom
