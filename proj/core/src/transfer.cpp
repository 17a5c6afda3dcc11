#include "cfhom/transfer.hpp"

#include <algorithm>
#include <numeric>

#include "cfhom/error.hpp"

namespace cfhom {

BoundedMultiset::BoundedMultiset(std::vector<unsigned> multiplicities, unsigned bound)
    : mult_(std::move(multiplicities)), bound_(bound) {
  for (std::size_t i = 0; i < mult_.size(); ++i)
    if (mult_[i] > bound_)
      throw Error("multiplicity " + std::to_string(mult_[i]) + " at label " + std::to_string(i) +
                  " exceeds bound " + std::to_string(bound_));
}

BoundedMultiset BoundedMultiset::from_labels(std::size_t ground_size, const std::vector<std::size_t>& labels,
                                             unsigned bound) {
  std::vector<unsigned> mult(ground_size, 0);
  for (auto label : labels) {
    if (label >= ground_size)
      throw Error("label " + std::to_string(label) + " outside ground set of size " + std::to_string(ground_size));
    ++mult[label];
  }
  return BoundedMultiset(std::move(mult), bound);
}

unsigned BoundedMultiset::size() const noexcept { return std::accumulate(mult_.begin(), mult_.end(), 0U); }

bool BoundedMultiset::is_configuration() const noexcept {
  return std::all_of(mult_.begin(), mult_.end(), [](unsigned m) { return m <= 1; });
}

BoundedMultiset BoundedMultiset::with_bound(unsigned new_bound) const { return BoundedMultiset(mult_, new_bound); }

std::string BoundedMultiset::to_string(std::optional<std::size_t> basepoint) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < mult_.size(); ++i) {
    std::string name;
    if (basepoint && *basepoint == i)
      name = "m0";
    else if (i < 26)
      name = std::string(1, static_cast<char>('a' + i));
    else
      name = "x" + std::to_string(i);
    for (unsigned c = 0; c < mult_[i]; ++c) {
      if (!first) out += ", ";
      out += name;
      first = false;
    }
  }
  return out + "}";
}

MultisetChain::MultisetChain(const BoundedMultiset& s, Integer coefficient) { add(s, coefficient); }

void MultisetChain::add(const BoundedMultiset& s, const Integer& coefficient) {
  if (coefficient == 0) return;
  if (!terms_.empty()) {
    const auto& ref = terms_.begin()->first;
    if (ref.ground_size() != s.ground_size() || ref.bound() != s.bound())
      throw Error("chain terms must share ground set and bound");
  }
  auto [it, inserted] = terms_.try_emplace(s, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

MultisetChain& MultisetChain::operator+=(const MultisetChain& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

MultisetChain MultisetChain::scaled(const Integer& factor) const {
  MultisetChain out;
  for (const auto& [s, c] : terms_) out.add(s, c * factor);
  return out;
}

Integer MultisetChain::coefficient(const BoundedMultiset& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer MultisetChain::total_mass() const {
  Integer total = 0;
  for (const auto& [s, c] : terms_) total += c;
  return total;
}

std::string MultisetChain::to_string(std::optional<std::size_t> basepoint) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [s, c] : terms_) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    Integer a = abs(c);
    if (a != 1) out += cfhom::to_string(a) + "*";
    out += s.to_string(basepoint);
  }
  return out;
}

BoundedMultiset add_particle(const BoundedMultiset& s, std::size_t m0) {
  if (m0 >= s.ground_size()) throw Error("basepoint label " + std::to_string(m0) + " outside ground set");
  if (!s.is_configuration())
    throw Error("not a configuration: " + s.to_string(m0) + " has a label with multiplicity >= 2");
  std::vector<unsigned> mult = s.multiplicities();
  ++mult[m0];
  return BoundedMultiset(std::move(mult), 2);
}

MultisetChain add_particle(const MultisetChain& x, std::size_t m0) {
  MultisetChain out;
  for (const auto& [s, c] : x.terms()) out.add(add_particle(s, m0), c);
  return out;
}

MultisetChain select_submultisets(const BoundedMultiset& s, unsigned k) {
  if (k > s.size())
    throw Error("not enough particles: cannot choose " + std::to_string(k) + " from " + std::to_string(s.size()));
  const auto& mult = s.multiplicities();
  const std::size_t n = mult.size();
  MultisetChain out;
  std::vector<unsigned> pick(n, 0);
  // Depth-first enumeration of pick <= mult with sum k; `rest` bounds what later labels can still take.
  std::vector<unsigned> rest(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) rest[i] = rest[i + 1] + mult[i];
  auto recurse = [&](auto& self, std::size_t i, unsigned remaining, const Integer& weight) -> void {
    if (i == n) {
      if (remaining == 0) out.add(BoundedMultiset(pick, s.bound()), weight);
      return;
    }
    const unsigned lo = remaining > rest[i + 1] ? remaining - rest[i + 1] : 0;
    const unsigned hi = std::min(mult[i], remaining);
    for (unsigned t = lo; t <= hi; ++t) {
      pick[i] = t;
      self(self, i + 1, remaining - t, weight * binomial(mult[i], t));
    }
    pick[i] = 0;
  };
  recurse(recurse, 0, k, Integer(1));
  return out;
}

MultisetChain flatten_add(const std::vector<std::pair<MultisetCollection, Integer>>& outer) {
  MultisetChain out;
  for (const auto& [collection, c] : outer)
    for (const auto& member : collection) out.add(member, c);
  return out;
}

MultisetChain transfer(const MultisetChain& x, unsigned k) {
  MultisetChain out;
  std::optional<unsigned> l;
  for (const auto& [s, c] : x.terms()) {
    if (l && *l != s.size())
      throw Error("inhomogeneous chain: terms of size " + std::to_string(*l) + " and " + std::to_string(s.size()));
    l = s.size();
    out += select_submultisets(s, k).scaled(c);
  }
  return out;
}

MultisetChain include(const MultisetChain& x, unsigned new_bound) {
  MultisetChain out;
  for (const auto& [s, c] : x.terms()) out.add(s.with_bound(new_bound), c);
  return out;
}

DoldReport verify_dold_identity(std::size_t ground_size, unsigned k, unsigned l) {
  if (k < 1 || k >= l)
    throw Error("parameter constraints violated: need 1 <= k < l, got k = " + std::to_string(k) +
                ", l = " + std::to_string(l));
  const std::size_t n = ground_size + 1;
  const std::size_t m0 = ground_size;
  if (l - 1 > n)
    throw Error("parameter constraints violated: no configuration of size " + std::to_string(l - 1) + " on " +
                std::to_string(n) + " labels");
  DoldReport report;
  report.ground_size = ground_size;
  report.k = k;
  report.l = l;

  // Configurations of size l - 1: subsets of {0, ..., n - 1}, via a selection mask.
  std::vector<bool> chosen(n, false);
  std::fill(chosen.begin(), chosen.begin() + static_cast<std::ptrdiff_t>(l - 1), true);
  do {
    std::vector<unsigned> mult(n);
    for (std::size_t i = 0; i < n; ++i) mult[i] = chosen[i] ? 1 : 0;
    const BoundedMultiset s(std::move(mult), 1);
    const MultisetChain x(s);

    const MultisetChain lhs = transfer(add_particle(x, m0), k);
    const MultisetChain rhs = include(transfer(x, k), 2) + add_particle(transfer(x, k - 1), m0);

    std::map<BoundedMultiset, std::pair<Integer, Integer>> both;
    for (const auto& [t, c] : lhs.terms()) both[t].first = c;
    for (const auto& [t, c] : rhs.terms()) both[t].second = c;
    for (const auto& [t, cs] : both)
      if (cs.first != cs.second) report.mismatches.push_back({s, t, cs.first, cs.second});
    ++report.configurations;
    report.basis_elements += both.size();
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return report;
}

std::vector<DoldReport> dold_sweep(std::size_t max_ground_size, unsigned max_l) {
  std::vector<DoldReport> out;
  for (std::size_t g = 0; g <= max_ground_size; ++g)
    for (unsigned l = 2; l <= max_l; ++l)
      for (unsigned k = 1; k < l; ++k)
        if (l - 1 <= g + 1) out.push_back(verify_dold_identity(g, k, l));
  return out;
}

}  // namespace cfhom
