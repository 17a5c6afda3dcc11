#include "cfhom/abelian_group.hpp"

#include <ostream>
#include <utility>

#include "cfhom/error.hpp"

namespace cfhom {

FGAbelianGroup FGAbelianGroup::free(std::size_t rank) {
  FGAbelianGroup g;
  g.free_rank_ = rank;
  return g;
}

FGAbelianGroup FGAbelianGroup::cyclic(const Integer& order) {
  return from_cyclic_orders(0, {order});
}

FGAbelianGroup FGAbelianGroup::from_cyclic_orders(std::size_t free_rank, std::vector<Integer> orders) {
  FGAbelianGroup g;
  g.free_rank_ = free_rank;
  std::vector<Integer> torsion;
  for (auto& d : orders) {
    d = abs(d);
    if (d == 0)
      ++g.free_rank_;
    else if (d > 1)
      torsion.push_back(std::move(d));
  }
  // Pairwise (gcd, lcm) exchange turns any list into a divisibility chain.
  for (std::size_t i = 0; i < torsion.size(); ++i) {
    for (std::size_t j = i + 1; j < torsion.size(); ++j) {
      Integer g_ij = gcd(torsion[i], torsion[j]);
      Integer l_ij = lcm(torsion[i], torsion[j]);
      torsion[i] = std::move(g_ij);
      torsion[j] = std::move(l_ij);
    }
  }
  for (auto& d : torsion)
    if (d > 1) g.factors_.push_back(std::move(d));
  return g;
}

FGAbelianGroup FGAbelianGroup::direct_sum(const FGAbelianGroup& other) const {
  std::vector<Integer> orders = factors_;
  orders.insert(orders.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic_orders(free_rank_ + other.free_rank_, std::move(orders));
}

std::string FGAbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::string out;
  if (free_rank_ == 1)
    out = "Z";
  else if (free_rank_ > 1)
    out = "Z^" + std::to_string(free_rank_);
  for (const auto& d : factors_) {
    if (!out.empty()) out += " + ";
    out += "Z/" + cfhom::to_string(d);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FGAbelianGroup& g) { return os << g.to_string(); }

std::optional<Integer> group_cardinality(const FGAbelianGroup& g) {
  if (!g.is_finite()) return std::nullopt;
  Integer n = 1;
  for (const auto& d : g.invariant_factors()) n *= d;
  return n;
}

TensorTor tensor_tor_with_zq(const FGAbelianGroup& g, const Integer& q) {
  if (q < 2) throw Error("invalid modulus " + to_string(q) + " (need q >= 2)");
  std::vector<Integer> tensor(g.free_rank(), q);
  std::vector<Integer> tor;
  for (const auto& d : g.invariant_factors()) {
    Integer common = gcd(d, q);
    tensor.push_back(common);
    tor.push_back(std::move(common));
  }
  return {FGAbelianGroup::from_cyclic_orders(0, std::move(tensor)),
          FGAbelianGroup::from_cyclic_orders(0, std::move(tor))};
}

}  // namespace cfhom
