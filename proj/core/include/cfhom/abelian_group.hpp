#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cfhom/integer.hpp"

namespace cfhom {

/// Finitely generated abelian group Z^rank + Z/d_1 + ... + Z/d_t in
/// invariant-factor form: d_1 | d_2 | ... | d_t and every d_i >= 2.
///
/// The form is canonical, so operator== is isomorphism testing.
class FGAbelianGroup {
 public:
  FGAbelianGroup() = default;

  static FGAbelianGroup free(std::size_t rank);
  /// Cyclic group of the given order. Order 0 is Z, order +-1 the trivial group.
  static FGAbelianGroup cyclic(const Integer& order);
  /// Normalizes an arbitrary list of cyclic orders (0 = Z, 1 = trivial).
  static FGAbelianGroup from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders);

  std::size_t free_rank() const noexcept { return free_rank_; }
  const std::vector<Integer>& invariant_factors() const noexcept { return factors_; }

  bool is_trivial() const noexcept { return free_rank_ == 0 && factors_.empty(); }
  bool is_finite() const noexcept { return free_rank_ == 0; }

  FGAbelianGroup direct_sum(const FGAbelianGroup& other) const;

  /// "0", "Z", "Z^2 + Z/2 + Z/6"
  std::string to_string() const;

  friend bool operator==(const FGAbelianGroup&, const FGAbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> factors_;
};

std::ostream& operator<<(std::ostream& os, const FGAbelianGroup& g);

/// Number of elements; std::nullopt when the group is infinite.
std::optional<Integer> group_cardinality(const FGAbelianGroup& g);

struct TensorTor {
  FGAbelianGroup tensor;  ///< G (x) Z/q
  FGAbelianGroup tor;     ///< Tor(G, Z/q)
};

/// G (x) Z/q and Tor(G, Z/q) for q >= 2.
TensorTor tensor_tor_with_zq(const FGAbelianGroup& g, const Integer& q);

}  // namespace cfhom
