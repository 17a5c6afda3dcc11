#include "cfhom/chain_complex.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "cfhom/error.hpp"
#include "cfhom/smith.hpp"

namespace cfhom {
namespace {

void require_modulus(const Integer& modulus) {
  if (modulus != 0 && modulus < 2)
    throw Error("invalid modulus " + to_string(modulus) + " (use 0 for Z or q >= 2)");
}

void require_integral(const ChainComplex& c) {
  if (c.modulus() != 0)
    throw Error("wrong ring: operation needs a complex over Z, got modulus " + to_string(c.modulus()));
}

void require_reducible(const ChainComplex& c, const Integer& q) {
  if (q < 2) throw Error("invalid modulus " + to_string(q) + " (need q >= 2)");
  if (c.modulus() != 0 && !mpz_divisible_p(c.modulus().get_mpz_t(), q.get_mpz_t()))
    throw Error("wrong ring: cannot reduce a complex over Z/" + to_string(c.modulus()) + " mod " +
                to_string(q));
}

Integer exact_quotient(const Integer& a, const Integer& b) {
  Integer out;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

void validate_complex(int base_degree, std::span<const std::size_t> ranks,
                      std::span<const IntMatrix> boundaries, const Integer& modulus) {
  require_modulus(modulus);
  const std::size_t expected = ranks.empty() ? 0 : ranks.size() - 1;
  if (boundaries.size() != expected)
    throw Error("shape error: " + std::to_string(ranks.size()) + " chain groups need " +
                std::to_string(expected) + " boundary matrices, got " +
                std::to_string(boundaries.size()));
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    const IntMatrix& d = boundaries[k];
    if (d.rows() != ranks[k] || d.cols() != ranks[k + 1])
      throw Error("shape error: boundary out of degree " + std::to_string(base_degree + int(k) + 1) +
                  " is " + std::to_string(d.rows()) + "x" + std::to_string(d.cols()) +
                  ", expected " + std::to_string(ranks[k]) + "x" + std::to_string(ranks[k + 1]));
  }
  for (std::size_t k = 0; k + 1 < boundaries.size(); ++k) {
    IntMatrix composite = boundaries[k] * boundaries[k + 1];
    if (!equal_mod(composite, IntMatrix(composite.rows(), composite.cols()), modulus))
      throw Error("not a complex: boundary composite through degree " +
                  std::to_string(base_degree + int(k) + 1) + " is nonzero");
  }
}

void validate_complex(const ChainComplex& c) {
  validate_complex(c.base_degree(), c.ranks(), c.boundaries(), c.modulus());
}

ChainComplex::ChainComplex(int base_degree, std::vector<std::size_t> ranks,
                           std::vector<IntMatrix> boundaries, Integer modulus)
    : base_degree_(base_degree),
      ranks_(std::move(ranks)),
      boundaries_(std::move(boundaries)),
      modulus_(std::move(modulus)) {
  validate_complex(base_degree_, ranks_, boundaries_, modulus_);
}

std::size_t ChainComplex::rank(int degree) const {
  if (degree < base_degree_ || degree > top_degree()) return 0;
  return ranks_[static_cast<std::size_t>(degree - base_degree_)];
}

IntMatrix ChainComplex::differential(int degree) const {
  if (degree - 1 >= base_degree_ && degree <= top_degree())
    return boundaries_[static_cast<std::size_t>(degree - 1 - base_degree_)];
  return IntMatrix(rank(degree - 1), rank(degree));
}

ChainComplex ChainComplex::reduced_mod(const Integer& q) const {
  require_reducible(*this, q);
  std::vector<IntMatrix> reduced;
  reduced.reserve(boundaries_.size());
  for (const auto& d : boundaries_) reduced.push_back(d.reduced_mod(q));
  return ChainComplex(base_degree_, ranks_, std::move(reduced), q);
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& other) const {
  if (modulus_ != other.modulus_) throw Error("wrong ring: direct sum of complexes over different rings");
  if (empty()) return other;
  if (other.empty()) return *this;
  const int lo = std::min(base_degree_, other.base_degree_);
  const int hi = std::max(top_degree(), other.top_degree());
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int d = lo; d <= hi; ++d) {
    ranks.push_back(rank(d) + other.rank(d));
    if (d > lo) boundaries.push_back(IntMatrix::block_diagonal(differential(d), other.differential(d)));
  }
  return ChainComplex(lo, std::move(ranks), std::move(boundaries), modulus_);
}

FGAbelianGroup GradedGroups::at(int degree) const {
  if (degree < base_degree || degree > top_degree()) return {};
  return groups[static_cast<std::size_t>(degree - base_degree)];
}

Integer GradedCardinalities::at(int degree) const {
  const int top = base_degree + static_cast<int>(values.size()) - 1;
  if (degree < base_degree || degree > top) return 1;
  return values[static_cast<std::size_t>(degree - base_degree)];
}

GradedCardinalities cardinalities_of(const GradedGroups& groups) {
  GradedCardinalities out{groups.base_degree, {}};
  for (const auto& g : groups.groups) {
    auto n = group_cardinality(g);
    if (!n) throw Error("infinite group " + g.to_string() + " has no finite cardinality");
    out.values.push_back(*n);
  }
  return out;
}

GradedGroups integral_homology(const ChainComplex& c) {
  require_integral(c);
  GradedGroups out{c.base_degree(), {}};
  for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
    IntMatrix cycles = kernel_basis(c.differential(d));
    out.groups.push_back(quotient_group(cycles, c.differential(d + 1)));
  }
  return out;
}

GradedGroups mod_q_homology(const ChainComplex& c, const Integer& q) {
  require_integral(c);
  if (q < 2) throw Error("invalid modulus " + to_string(q) + " (need q >= 2)");
  GradedGroups integral = integral_homology(c);
  GradedGroups out{c.base_degree(), {}};
  for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
    FGAbelianGroup tensor = tensor_tor_with_zq(integral.at(d), q).tensor;
    FGAbelianGroup tor = tensor_tor_with_zq(integral.at(d - 1), q).tor;
    out.groups.push_back(tensor.direct_sum(tor));
  }
  return out;
}

GradedCardinalities mod_q_cardinalities(const ChainComplex& c, const Integer& q) {
  require_reducible(c, q);
  GradedCardinalities out{c.base_degree(), {}};
  for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
    Integer cycles = span_cardinality_mod(kernel_lattice_mod(c.differential(d), q), q);
    Integer boundaries = span_cardinality_mod(c.differential(d + 1), q);
    out.values.push_back(exact_quotient(cycles, boundaries));
  }
  return out;
}

GradedCardinalities brute_force_mod_q_homology(const ChainComplex& c, const Integer& q) {
  require_reducible(c, q);
  constexpr unsigned long kLimit = 1'000'000;
  std::size_t max_rank = 0;
  for (auto r : c.ranks()) max_rank = std::max(max_rank, r);
  if (max_rank > 0 && power(q, static_cast<unsigned>(max_rank)) > kLimit)
    throw Error("instance too large for oracle: " + to_string(q) + "^" + std::to_string(max_rank) +
                " exceeds 10^6");

  const long modulus = max_rank > 0 ? q.get_si() : 1;
  auto count_of = [&](std::size_t n) {
    long total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= modulus;
    return total;
  };
  // Applies the reduced matrix to the vector whose base-q digits are `code`
  // and returns the image, base-q encoded.
  auto apply = [&](const std::vector<std::vector<long>>& m, std::size_t cols, long code) {
    std::vector<long> x(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      x[j] = code % modulus;
      code /= modulus;
    }
    long image = 0;
    for (std::size_t i = m.size(); i-- > 0;) {
      long acc = 0;
      for (std::size_t j = 0; j < cols; ++j) acc = (acc + m[i][j] * x[j]) % modulus;
      image = image * modulus + acc;
    }
    return image;
  };
  auto to_small = [&](const IntMatrix& m) {
    std::vector<std::vector<long>> out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = mod_floor(m(i, j), q).get_si();
    return out;
  };

  GradedCardinalities out{c.base_degree(), {}};
  for (int d = c.base_degree(); d <= c.top_degree(); ++d) {
    const std::size_t n = c.rank(d);
    const auto outgoing = to_small(c.differential(d));
    long kernel = 0;
    for (long x = 0; x < count_of(n); ++x)
      if (apply(outgoing, n, x) == 0) ++kernel;

    const std::size_t above = c.rank(d + 1);
    const auto incoming = to_small(c.differential(d + 1));
    std::vector<bool> hit(static_cast<std::size_t>(count_of(n)), false);
    long image = 0;
    for (long y = 0; y < count_of(above); ++y) {
      long v = apply(incoming, above, y);
      if (!hit[static_cast<std::size_t>(v)]) {
        hit[static_cast<std::size_t>(v)] = true;
        ++image;
      }
    }
    out.values.emplace_back(kernel / image);
  }
  return out;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  if (source_.modulus() != target_.modulus())
    throw Error("wrong ring: chain map between complexes over different rings");
  if (components_.size() != source_.length())
    throw Error("shape error: chain map needs " + std::to_string(source_.length()) +
                " components, got " + std::to_string(components_.size()));
  for (std::size_t k = 0; k < components_.size(); ++k) {
    const int d = source_.base_degree() + static_cast<int>(k);
    if (components_[k].rows() != target_.rank(d) || components_[k].cols() != source_.rank(d))
      throw Error("shape error: chain map component in degree " + std::to_string(d) + " is " +
                  std::to_string(components_[k].rows()) + "x" + std::to_string(components_[k].cols()) +
                  ", expected " + std::to_string(target_.rank(d)) + "x" +
                  std::to_string(source_.rank(d)));
  }
  for (int d = source_.base_degree(); d <= source_.top_degree(); ++d) {
    IntMatrix lhs = component(d - 1) * source_.differential(d);
    IntMatrix rhs = target_.differential(d) * component(d);
    if (!equal_mod(lhs, rhs, source_.modulus()))
      throw Error("does not commute with boundaries in degree " + std::to_string(d));
  }
}

ChainMap ChainMap::identity(const ChainComplex& c) { return scalar(c, 1); }

ChainMap ChainMap::scalar(const ChainComplex& c, const Integer& factor) {
  std::vector<IntMatrix> parts;
  for (auto r : c.ranks()) parts.push_back(IntMatrix::identity(r).scaled(factor));
  return ChainMap(c, c, std::move(parts));
}

ChainMap ChainMap::zero(const ChainComplex& source, const ChainComplex& target) {
  std::vector<IntMatrix> parts;
  for (int d = source.base_degree(); d <= source.top_degree(); ++d)
    parts.emplace_back(target.rank(d), source.rank(d));
  return ChainMap(source, target, std::move(parts));
}

IntMatrix ChainMap::component(int degree) const {
  if (degree < source_.base_degree() || degree > source_.top_degree())
    return IntMatrix(target_.rank(degree), source_.rank(degree));
  return components_[static_cast<std::size_t>(degree - source_.base_degree())];
}

ChainComplex mapping_cone(const ChainMap& f) {
  const ChainComplex& s = f.source();
  const ChainComplex& t = f.target();
  if (s.empty() && t.empty()) return ChainComplex(0, {}, {}, s.modulus());
  int lo = 0;
  int hi = 0;
  if (s.empty()) {
    lo = t.base_degree();
    hi = t.top_degree();
  } else if (t.empty()) {
    lo = s.base_degree() + 1;
    hi = s.top_degree() + 1;
  } else {
    lo = std::min(s.base_degree() + 1, t.base_degree());
    hi = std::max(s.top_degree() + 1, t.top_degree());
  }
  std::vector<std::size_t> ranks;
  std::vector<IntMatrix> boundaries;
  for (int d = lo; d <= hi; ++d) {
    ranks.push_back(s.rank(d - 1) + t.rank(d));
    if (d == lo) continue;
    const std::size_t s_lo = s.rank(d - 2);
    const std::size_t s_hi = s.rank(d - 1);
    IntMatrix block(s_lo + t.rank(d - 1), s_hi + t.rank(d));
    const IntMatrix ds = s.differential(d - 1);
    const IntMatrix fd = f.component(d - 1);
    const IntMatrix dt = t.differential(d);
    for (std::size_t i = 0; i < ds.rows(); ++i)
      for (std::size_t j = 0; j < ds.cols(); ++j) block(i, j) = -ds(i, j);
    for (std::size_t i = 0; i < fd.rows(); ++i)
      for (std::size_t j = 0; j < fd.cols(); ++j) block(s_lo + i, j) = fd(i, j);
    for (std::size_t i = 0; i < dt.rows(); ++i)
      for (std::size_t j = 0; j < dt.cols(); ++j) block(s_lo + i, s_hi + j) = dt(i, j);
    boundaries.push_back(std::move(block));
  }
  return ChainComplex(lo, std::move(ranks), std::move(boundaries), s.modulus());
}

bool LesReport::all_hold() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const auto& d) { return d.holds; });
}

LesReport les_cardinality_check(const ChainMap& f, const Integer& q) {
  const ChainComplex cone = mapping_cone(f);
  require_reducible(cone, q);
  const GradedCardinalities cone_cards =
      cone.modulus() == 0 ? cardinalities_of(mod_q_homology(cone, q)) : mod_q_cardinalities(cone, q);

  struct Induced {
    Integer coker;
    Integer ker;
  };
  // ker and coker of f_* on H_d(- ; Z/q), computed from lifted cycle lattices.
  auto induced = [&](int d) {
    const ChainComplex& s = f.source();
    const ChainComplex& t = f.target();
    IntMatrix source_cycles = kernel_lattice_mod(s.differential(d), q);
    IntMatrix target_cycles = kernel_lattice_mod(t.differential(d), q);
    IntMatrix target_bounds = t.differential(d + 1);
    Integer hs = exact_quotient(span_cardinality_mod(source_cycles, q),
                                span_cardinality_mod(s.differential(d + 1), q));
    Integer bt = span_cardinality_mod(target_bounds, q);
    Integer ht = exact_quotient(span_cardinality_mod(target_cycles, q), bt);
    IntMatrix pushed = IntMatrix::hconcat(f.component(d) * source_cycles, target_bounds);
    Integer image = exact_quotient(span_cardinality_mod(pushed, q), bt);
    return Induced{exact_quotient(ht, image), exact_quotient(hs, image)};
  };

  LesReport report{q, {}};
  if (cone.empty()) return report;
  std::vector<Induced> maps;
  for (int d = cone.base_degree() - 1; d <= cone.top_degree(); ++d) maps.push_back(induced(d));
  for (int d = cone.base_degree(); d <= cone.top_degree(); ++d) {
    const auto k = static_cast<std::size_t>(d - cone.base_degree());
    LesDegreeCheck row;
    row.degree = d;
    row.cone = cone_cards.at(d);
    row.cokernel = maps[k + 1].coker;
    row.kernel = maps[k].ker;
    row.holds = row.cone == row.cokernel * row.kernel;
    report.degrees.push_back(std::move(row));
  }
  return report;
}

}  // namespace cfhom
