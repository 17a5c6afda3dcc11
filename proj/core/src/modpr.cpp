#include "cfhom/modpr.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <string>

#include "cfhom/error.hpp"

namespace cfhom {
namespace {

void require_prime(const Integer& p) {
  if (!is_prime(p)) throw Error("p = " + to_string(p) + " is not prime");
}

unsigned log_exact(const Integer& value, const Integer& p, int degree, unsigned level) {
  auto fail = [&] {
    return Error("inconsistent cardinality table: #H_" + std::to_string(degree) + " at level " +
                 std::to_string(level) + " is " + to_string(value) + ", not a power of " + to_string(p));
  };
  if (value < 1) throw fail();
  if (value == 1) return 0;
  const unsigned e = valuation(value, p);
  if (power(p, e) != value) throw fail();
  return e;
}

}  // namespace

ChainComplex ElementaryComplex::to_complex() const {
  require_prime(p);
  if (level < 1 || type < 1 || type > level) throw Error("invalid elementary complex type");
  const Integer q = power(p, level);
  if (type == level) return ChainComplex(shift, {1}, {}, q);
  IntMatrix d(1, 1);
  d(0, 0) = power(p, type);
  return ChainComplex(shift, {1, 1}, {d}, q);
}

DecompositionProfile::DecompositionProfile(Integer p, unsigned level) : p_(std::move(p)), level_(level) {
  require_prime(p_);
  if (level_ < 1) throw Error("invalid level " + std::to_string(level_));
}

std::size_t DecompositionProfile::count(int degree, unsigned type) const {
  auto it = counts_.find({degree, type});
  return it == counts_.end() ? 0 : it->second;
}

void DecompositionProfile::add(int degree, unsigned type, std::size_t n) {
  if (type < 1 || type > level_)
    throw Error("elementary type " + std::to_string(type) + " outside 1.." + std::to_string(level_));
  if (n == 0) return;
  counts_[{degree, type}] += n;
}

int DecompositionProfile::min_degree() const {
  if (counts_.empty()) throw Error("empty profile has no degrees");
  return counts_.begin()->first.first;
}

int DecompositionProfile::max_degree() const {
  if (counts_.empty()) throw Error("empty profile has no degrees");
  int top = std::numeric_limits<int>::min();
  for (const auto& [key, n] : counts_) top = std::max(top, key.second < level_ ? key.first + 1 : key.first);
  return top;
}

ChainComplex DecompositionProfile::to_complex(int base_degree, int top_degree) const {
  const Integer q = power(p_, level_);
  const std::size_t len = top_degree >= base_degree ? std::size_t(top_degree - base_degree + 1) : 0;
  std::vector<IntMatrix> zeros(len > 0 ? len - 1 : 0);
  ChainComplex out(base_degree, std::vector<std::size_t>(len, 0), std::move(zeros), q);
  for (const auto& [key, n] : counts_)
    for (std::size_t k = 0; k < n; ++k)
      out = out.direct_sum(ElementaryComplex{p_, level_, key.second, key.first}.to_complex());
  return out;
}

Integer CardinalityTable::at(int degree, unsigned level) const {
  auto row = values.find(degree);
  if (row == values.end()) return 1;
  auto cell = row->second.find(level);
  return cell == row->second.end() ? Integer(1) : cell->second;
}

CardinalityTable CardinalityTable::truncated(unsigned level) const {
  if (level < 1 || level > max_level) throw Error("invalid level " + std::to_string(level));
  CardinalityTable out{p, level, {}};
  for (const auto& [degree, row] : values)
    for (const auto& [w, n] : row)
      if (w <= level) out.values[degree][w] = n;
  return out;
}

IntMatrix min_matrix(unsigned r) {
  if (r < 1) throw Error("invalid level " + std::to_string(r) + " (need r >= 1)");
  IntMatrix m(r, r);
  for (unsigned w = 1; w <= r; ++w)
    for (unsigned s = 1; s <= r; ++s) m(w - 1, s - 1) = std::min(w, s);
  return m;
}

DecompositionProfile elementary_decompose(const ChainComplex& c) {
  auto pp = as_prime_power(c.modulus());
  if (!pp)
    throw Error("unsupported ring: elementary decomposition needs modulus p^r, got " +
                to_string(c.modulus()));
  const auto& [p, r] = *pp;
  const Integer q = c.modulus();
  DecompositionProfile profile(p, r);

  const std::size_t n = c.length();
  std::vector<IntMatrix> mats;
  for (const auto& d : c.boundaries()) mats.push_back(d.reduced_mod(q));
  std::vector<std::vector<bool>> alive;
  for (auto rank : c.ranks()) alive.emplace_back(rank, true);

  struct Pivot {
    unsigned val;
    std::size_t k, row, col;
  };
  for (;;) {
    std::optional<Pivot> best;
    for (std::size_t k = 0; k < mats.size(); ++k)
      for (std::size_t i = 0; i < mats[k].rows(); ++i) {
        if (!alive[k][i]) continue;
        for (std::size_t j = 0; j < mats[k].cols(); ++j) {
          if (!alive[k + 1][j] || mats[k](i, j) == 0) continue;
          const unsigned v = valuation(mats[k](i, j), p);
          if (!best || v < best->val) best = Pivot{v, k, i, j};
        }
      }
    if (!best) break;

    const auto [s, k, a, b] = *best;
    IntMatrix& m = mats[k];
    const Integer ps = power(p, s);
    IntMatrix* below = k > 0 ? &mats[k - 1] : nullptr;             // out of degree index k
    IntMatrix* above = k + 1 < mats.size() ? &mats[k + 1] : nullptr;  // into degree index k + 1

    // Rescale basis vector b so that the pivot is exactly p^s.
    Integer unit;
    mpz_divexact(unit.get_mpz_t(), m(a, b).get_mpz_t(), ps.get_mpz_t());
    Integer inverse;
    mpz_invert(inverse.get_mpz_t(), unit.get_mpz_t(), q.get_mpz_t());
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, b) = mod_floor(m(i, b) * inverse, q);
    if (above)
      for (std::size_t j = 0; j < above->cols(); ++j) (*above)(b, j) = mod_floor((*above)(b, j) * unit, q);

    // Clear column b with row operations; each changes the basis of the
    // lower chain group and acts on the columns of the map out of it.
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == a || !alive[k][i] || m(i, b) == 0) continue;
      Integer factor;
      mpz_divexact(factor.get_mpz_t(), m(i, b).get_mpz_t(), ps.get_mpz_t());
      m.add_row_multiple(i, a, -factor);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = mod_floor(m(i, j), q);
      if (below) {
        below->add_col_multiple(a, i, factor);
        for (std::size_t t = 0; t < below->rows(); ++t) (*below)(t, a) = mod_floor((*below)(t, a), q);
      }
    }
    // Clear row a with column operations, acting on rows of the map into
    // the upper chain group.
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j == b || !alive[k + 1][j] || m(a, j) == 0) continue;
      Integer factor;
      mpz_divexact(factor.get_mpz_t(), m(a, j).get_mpz_t(), ps.get_mpz_t());
      m.add_col_multiple(j, b, -factor);
      for (std::size_t t = 0; t < m.rows(); ++t) m(t, j) = mod_floor(m(t, j), q);
      if (above) {
        above->add_row_multiple(b, j, factor);
        for (std::size_t t = 0; t < above->cols(); ++t) (*above)(b, t) = mod_floor((*above)(b, t), q);
      }
    }

    // With a pivot of minimal valuation the pair now splits off; leftover
    // entries mean the complex is not a sum of elementary complexes.
    bool splits = true;
    if (below)
      for (std::size_t t = 0; t < below->rows(); ++t)
        if (alive[k - 1][t] && (*below)(t, a) != 0) splits = false;
    if (above)
      for (std::size_t t = 0; t < above->cols(); ++t)
        if (alive[k + 2][t] && (*above)(b, t) != 0) splits = false;
    if (!splits)
      throw Error("complex over Z/" + to_string(q) +
                  " is not a direct sum of elementary complexes (not the reduction of an integral complex)");

    alive[k][a] = false;
    alive[k + 1][b] = false;
    if (s >= 1) profile.add(c.base_degree() + static_cast<int>(k), s);
  }

  for (std::size_t k = 0; k < n; ++k) {
    const auto remaining = static_cast<std::size_t>(std::count(alive[k].begin(), alive[k].end(), true));
    profile.add(c.base_degree() + static_cast<int>(k), r, remaining);
  }
  return profile;
}

std::vector<DecompositionProfile> elementary_decompose_crt(const ChainComplex& c) {
  if (c.modulus() < 2)
    throw Error("unsupported ring: elementary decomposition needs a residue ring Z/q, q >= 2");
  std::vector<DecompositionProfile> out;
  for (const auto& [p, e] : factorize(c.modulus())) out.push_back(elementary_decompose(c.reduced_mod(power(p, e))));
  return out;
}

std::map<int, Integer> cardinalities_of_profile(const DecompositionProfile& profile, unsigned w) {
  const unsigned r = profile.level();
  if (w < 1 || w > r)
    throw Error("level w = " + std::to_string(w) + " out of range 1.." + std::to_string(r));
  std::map<int, unsigned long> logs;
  for (const auto& [key, n] : profile.counts()) {
    const auto [degree, s] = key;
    const unsigned low = std::min(w, s);
    logs[degree] += n * low;
    // The kernel of p^s on Z/p^w also has p^min(w, s) elements.
    if (s < r) logs[degree + 1] += n * low;
  }
  std::map<int, Integer> out;
  for (const auto& [degree, e] : logs) out[degree] = power(profile.p(), static_cast<unsigned>(e));
  return out;
}

GradedGroups profile_homology(const DecompositionProfile& profile, int lo, int hi) {
  const unsigned r = profile.level();
  GradedGroups out{lo, {}};
  for (int d = lo; d <= hi; ++d) {
    std::vector<Integer> orders;
    for (unsigned s = 1; s <= r; ++s) {
      const Integer order = power(profile.p(), s);
      orders.insert(orders.end(), profile.count(d, s), order);
      if (s < r) orders.insert(orders.end(), profile.count(d - 1, s), order);
    }
    out.groups.push_back(FGAbelianGroup::from_cyclic_orders(0, std::move(orders)));
  }
  return out;
}

CardinalityTable cardinality_table(const ChainComplex& c, const Integer& p, unsigned r) {
  require_prime(p);
  if (r < 1) throw Error("invalid level " + std::to_string(r) + " (need r >= 1)");
  CardinalityTable table{p, r, {}};
  for (unsigned w = 1; w <= r; ++w) {
    const Integer q = power(p, w);
    GradedCardinalities cards =
        c.modulus() == 0 ? cardinalities_of(mod_q_homology(c, q)) : mod_q_cardinalities(c, q);
    for (int d = c.base_degree(); d <= c.top_degree(); ++d) table.values[d][w] = cards.at(d);
  }
  return table;
}

DecompositionProfile solve_profile(const CardinalityTable& table) {
  require_prime(table.p);
  const unsigned r = table.max_level;
  if (r < 1) throw Error("invalid level " + std::to_string(r) + " (need r >= 1)");
  DecompositionProfile profile(table.p, r);
  if (table.values.empty()) return profile;
  for (const auto& [degree, row] : table.values)
    for (const auto& [w, n] : row)
      if (w < 1 || w > r)
        throw Error("inconsistent cardinality table: level " + std::to_string(w) + " outside 1.." +
                    std::to_string(r));

  const int lo = table.values.begin()->first;
  const int hi = table.values.rbegin()->first;
  // Below lo every multiplicity is zero; the extra degree hi + 1 (all
  // cardinalities 1) forces the pieces to close up inside the table.
  for (int i = lo; i <= hi + 1; ++i) {
    std::vector<long> rhs(r + 1, 0);  // rhs[w], w = 1..r; rhs[0] = 0
    for (unsigned w = 1; w <= r; ++w) {
      long b = static_cast<long>(log_exact(table.at(i, w), table.p, i, w));
      for (unsigned s = 1; s < r; ++s)
        b -= static_cast<long>(profile.count(i - 1, s)) * static_cast<long>(std::min(w, s));
      rhs[w] = b;
    }
    // Inverse of the min(w, s) matrix: a_s = 2 b_s - b_{s-1} - b_{s+1} for
    // s < r and a_r = b_r - b_{r-1}.
    for (unsigned s = 1; s <= r; ++s) {
      const long a = s < r ? 2 * rhs[s] - rhs[s - 1] - rhs[s + 1] : rhs[s] - rhs[s - 1];
      if (a < 0)
        throw Error("inconsistent cardinality table: negative multiplicity for type " +
                    std::to_string(s) + " in degree " + std::to_string(i));
      profile.add(i, s, static_cast<std::size_t>(a));
    }
  }
  return profile;
}

GradedGroups reconstruct_mod_pr(const CardinalityTable& table) {
  DecompositionProfile profile = solve_profile(table);
  if (table.values.empty()) return {};
  return profile_homology(profile, table.values.begin()->first, table.values.rbegin()->first);
}

GradedGroups reconstruct_integral(std::span<const CardinalityTable> tables) {
  if (tables.empty()) throw Error("integral reconstruction needs at least one prime table");
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      if (tables[i].p == tables[j].p)
        throw Error("inconsistent prime tables: prime " + to_string(tables[i].p) + " given twice");

  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  for (const auto& t : tables)
    if (!t.values.empty()) {
      lo = std::min(lo, t.values.begin()->first);
      hi = std::max(hi, t.values.rbegin()->first);
    }
  if (lo > hi) return {};
  const std::size_t len = static_cast<std::size_t>(hi - lo + 1);

  std::vector<std::vector<long>> free_by_prime;
  std::vector<std::vector<Integer>> torsion(len);
  for (const auto& t : tables) {
    DecompositionProfile profile = solve_profile(t);
    const unsigned r = t.max_level;
    auto& free = free_by_prime.emplace_back(len, 0);
    for (int d = lo; d <= hi; ++d) {
      const auto k = static_cast<std::size_t>(d - lo);
      free[k] = static_cast<long>(profile.count(d, r));
      for (unsigned s = 1; s < r; ++s)
        torsion[k].insert(torsion[k].end(), profile.count(d, s), power(t.p, s));
    }
  }

  std::vector<long> free(len, std::numeric_limits<long>::max());
  for (const auto& by_prime : free_by_prime)
    for (std::size_t k = 0; k < len; ++k) free[k] = std::min(free[k], by_prime[k]);

  // Hidden Z/p^t (t >= r) in H_i shows up as one extra top-type summand in
  // degrees i and i + 1, so the excess over the minimum must split into
  // such adjacent pairs.
  std::vector<std::string> too_small;
  bool inconsistent = false;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (free_by_prime[t] == free) continue;
    long carry = 0;
    bool pairs = true;
    for (std::size_t k = 0; k < len; ++k) {
      const long excess = free_by_prime[t][k] - free[k] - carry;
      if (excess < 0) pairs = false;
      carry = excess;
    }
    if (carry != 0) pairs = false;
    if (pairs)
      too_small.push_back(to_string(tables[t].p));
    else
      inconsistent = true;
  }
  if (inconsistent) throw Error("inconsistent prime tables: free ranks disagree across primes");
  if (!too_small.empty()) {
    std::string primes;
    for (const auto& p : too_small) primes += (primes.empty() ? "" : ", ") + p;
    throw Error("level too small - increase r for p = " + primes +
                " (free ranks exceed those of other primes by hidden high-exponent torsion)");
  }

  GradedGroups out{lo, {}};
  for (std::size_t k = 0; k < len; ++k)
    out.groups.push_back(FGAbelianGroup::from_cyclic_orders(static_cast<std::size_t>(free[k]), torsion[k]));
  return out;
}

}  // namespace cfhom
