#include "cfhom/stability.hpp"

#include <algorithm>
#include <utility>

#include "cfhom/error.hpp"

namespace cfhom {

void ManifoldDescriptor::validate() const {
  if (dim < 1) throw Error("invalid manifold: dim must be >= 1, got " + std::to_string(dim));
  if (surface && dim != 2) throw Error("invalid manifold: a surface has dim 2, got " + std::to_string(dim));
}

RingDescriptor RingDescriptor::mod_q(const Integer& q) {
  if (q < 2) throw Error("invalid modulus " + cfhom::to_string(q) + " (need q >= 2)");
  return RingDescriptor(Kind::mod_q, q);
}

RingDescriptor RingDescriptor::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return char_zero_field();
  if (text == "Z[1/2]") return two_inverted();
  if (text.size() > 2 && text.starts_with("Z/")) return mod_q(parse_integer(text.substr(2)));
  throw Error("unknown ring '" + text + "' (expected Z, Q, Z[1/2] or Z/q)");
}

bool RingDescriptor::two_is_unit() const {
  switch (kind_) {
    case Kind::integers: return false;
    case Kind::mod_q: return q_ % 2 != 0;
    case Kind::char_zero_field:
    case Kind::two_inverted: return true;
  }
  return false;
}

std::string RingDescriptor::to_string() const {
  switch (kind_) {
    case Kind::integers: return "Z";
    case Kind::mod_q: return "Z/" + cfhom::to_string(q_);
    case Kind::char_zero_field: return "Q";
    case Kind::two_inverted: return "Z[1/2]";
  }
  return "?";
}

const FGAbelianGroup* HomologyFamily::find(int degree, long k) const {
  auto it = degrees.find(degree);
  if (it == degrees.end()) return nullptr;
  auto jt = it->second.find(k);
  return jt == it->second.end() ? nullptr : &jt->second;
}

std::optional<FGAbelianGroup> HomologyFamily::lookup(int degree, long k) const {
  if (degree < 0) return FGAbelianGroup{};
  if (const auto* g = find(degree, k)) return *g;
  if (degree == 0 && k >= 0) return FGAbelianGroup::free(1);
  return std::nullopt;
}

void HomologyFamily::set(int degree, long k, FGAbelianGroup group) {
  if (k < 0) throw Error("particle count must be >= 0, got " + std::to_string(k));
  degrees[degree][k] = std::move(group);
}

long stable_range(long k, const ManifoldDescriptor& manifold, const RingDescriptor& ring) {
  if (k < 0) throw Error("particle count must be >= 0, got " + std::to_string(k));
  const long half = k / 2;
  if (ring.two_is_unit() && manifold.dim >= 3) return k;
  if (ring.kind() == RingDescriptor::Kind::char_zero_field && manifold.surface)
    return manifold.orientable ? std::max(k - 1, half) : k;
  return half;
}

FGAbelianGroup sphere_h1(long k) {
  if (k < 2) throw Error("outside fixture domain: H_1(C_k(S^2)) is tabulated for k >= 2, got k = " +
                         std::to_string(k));
  return FGAbelianGroup::cyclic(Integer(2 * k - 2));
}

HomologyFamily sphere_family(long first, long last) {
  HomologyFamily f;
  f.manifold.dim = 2;
  f.manifold.orientable = true;
  f.manifold.surface = true;
  f.manifold.open = false;
  f.manifold.euler = 2;
  f.manifold.finite_type = true;
  for (long k = first; k <= last; ++k) f.set(1, k, sphere_h1(k));
  return f;
}

std::size_t CheckReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const CheckEntry& e) { return e.status == status; }));
}

namespace {

// H_i(C_k; Z/q) from integral data, or nullopt when H_i or H_{i-1} is missing.
std::optional<FGAbelianGroup> mod_q_group(const HomologyFamily& f, int degree, long k, const Integer& q) {
  auto hi = f.lookup(degree, k);
  auto lo = f.lookup(degree - 1, k);
  if (!hi || !lo) return std::nullopt;
  return tensor_tor_with_zq(*hi, q).tensor.direct_sum(tensor_tor_with_zq(*lo, q).tor);
}

std::string missing_note(const HomologyFamily& f, int degree, long k, long k_other) {
  for (int dd : {degree, degree - 1})
    for (long kk : {k, k_other})
      if (!f.lookup(dd, kk))
        return "skipped: missing data for H_" + std::to_string(dd) + " at k = " + std::to_string(kk);
  return "skipped: missing data";
}

template <class GroupAt>
CheckReport run_comparison(const HomologyFamily& family, IntRange k_range, IntRange degree_range, long shift,
                           const RingDescriptor& ring, GroupAt group_at) {
  CheckReport report;
  for (long i = degree_range.first; i <= degree_range.last; ++i) {
    const int degree = static_cast<int>(i);
    for (long k = std::max(0L, k_range.first); k <= k_range.last; ++k) {
      if (i > stable_range(k, family.manifold, ring)) {
        ++report.outside_stable_range;
        continue;
      }
      CheckEntry e;
      e.degree = degree;
      e.k = k;
      e.k_other = k + shift;
      auto a = group_at(degree, k);
      auto b = group_at(degree, k + shift);
      if (!a || !b) {
        e.status = CheckStatus::skipped;
        e.note = missing_note(family, degree, k, k + shift);
      } else {
        e.lhs = std::move(*a);
        e.rhs = std::move(*b);
        e.status = e.lhs == e.rhs ? CheckStatus::pass : CheckStatus::fail;
        if (e.status == CheckStatus::fail) e.note = "groups differ";
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace

CheckReport check_periodicity_even(const HomologyFamily& family, long m, const Integer& d, IntRange k_range,
                                   IntRange degree_range) {
  family.manifold.validate();
  if (family.manifold.dim % 2 != 0)
    throw Error("wrong parity: periodicity applies to even-dimensional manifolds, dim = " +
                std::to_string(family.manifold.dim));
  if (m < 1) throw Error("invalid period m = " + std::to_string(m) + " (need m >= 1)");
  const auto ring = RingDescriptor::mod_q(d);
  if ((Integer(2 * m) % d) != 0)
    throw Error("hypothesis violation: d does not divide 2m (d = " + to_string(d) + ", 2m = " +
                std::to_string(2 * m) + ")");
  return run_comparison(family, k_range, degree_range, m, ring,
                        [&](int degree, long k) { return mod_q_group(family, degree, k, d); });
}

CheckReport check_stability_odd(const HomologyFamily& family, IntRange k_range, IntRange degree_range) {
  family.manifold.validate();
  if (family.manifold.dim % 2 == 0)
    throw Error("wrong parity: integral stability applies to odd-dimensional manifolds, dim = " +
                std::to_string(family.manifold.dim));
  return run_comparison(family, k_range, degree_range, 1, RingDescriptor::integers(),
                        [&](int degree, long k) { return family.lookup(degree, k); });
}

CensusReport iso_type_census(const HomologyFamily& family, int degree, const Integer& p, unsigned r,
                             IntRange k_range) {
  family.manifold.validate();
  if (!family.manifold.euler) throw Error("descriptor incomplete: census needs the Euler characteristic");
  if (!is_prime(p)) throw Error("p = " + to_string(p) + " is not prime");
  if (r < 1) throw Error("invalid level " + std::to_string(r) + " (need r >= 1)");
  const Integer q = power(p, r);
  const auto ring = RingDescriptor::mod_q(q);
  CensusReport report;
  report.degree = degree;
  report.p = p;
  report.r = r;
  for (long k = std::max(0L, k_range.first); k <= k_range.last; ++k) {
    auto g = degree <= stable_range(k, family.manifold, ring) ? mod_q_group(family, degree, k, q)
                                                              : std::nullopt;
    if (!g) {
      report.skipped.push_back(k);
      continue;
    }
    const Integer x = Integer(2 * k) - *family.manifold.euler;
    const unsigned cls = x == 0 ? r : std::min(valuation(x, p), r);
    auto it = std::find_if(report.types.begin(), report.types.end(),
                           [&](const CensusType& t) { return t.group == *g; });
    if (it == report.types.end()) {
      report.types.push_back(CensusType{std::move(*g), {}, {}});
      it = std::prev(report.types.end());
    }
    it->ks.push_back(k);
    it->valuation_classes.insert(cls);
  }
  return report;
}

ChainComplex projective_space_complex(int m) {
  if (m < 1) throw Error("invalid dimension " + std::to_string(m) + " (need m >= 1)");
  std::vector<std::size_t> ranks(static_cast<std::size_t>(m) + 1, 1);
  std::vector<IntMatrix> boundaries;
  for (int i = 1; i <= m; ++i) boundaries.push_back(IntMatrix(1, 1, {Integer(i % 2 == 0 ? 2 : 0)}));
  return ChainComplex(0, std::move(ranks), std::move(boundaries));
}

}  // namespace cfhom
