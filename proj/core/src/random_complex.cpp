#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "cfhom/chain_complex.hpp"
#include "cfhom/error.hpp"
#include "cfhom/smith.hpp"

namespace cfhom {
namespace {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

struct Unimodular {
  IntMatrix forward;
  IntMatrix inverse;
};

// Product of random elementary operations, tracked together with its inverse.
Unimodular random_unimodular(std::size_t n, long bound, Rng& rng) {
  Unimodular u{IntMatrix::identity(n), IntMatrix::identity(n)};
  if (n == 0) return u;
  const std::size_t ops = 2 * n + 1;
  for (std::size_t op = 0; op < ops; ++op) {
    const auto i = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    const auto j = static_cast<std::size_t>(uniform(rng, 0, long(n) - 1));
    switch (uniform(rng, 0, 3)) {
      case 0:
        u.forward.swap_rows(i, j);
        u.inverse.swap_cols(i, j);
        break;
      case 1:
        u.forward.negate_row(i);
        u.inverse.negate_col(i);
        break;
      default: {
        if (i == j || bound == 0) break;
        long c = uniform(rng, -bound, bound - 1);
        if (c >= 0) ++c;  // skip zero
        // (I + c e_i e_j^T) P and P^{-1} (I - c e_i e_j^T)
        u.forward.add_row_multiple(i, j, c);
        u.inverse.add_col_multiple(j, i, -c);
        break;
      }
    }
  }
  return u;
}

Integer random_multiplier(const RandomComplexParams& params, Rng& rng) {
  const long sign = uniform(rng, 0, 1) == 0 ? 1 : -1;
  const long kind = params.torsion_primes.empty() ? uniform(rng, 0, 1) : uniform(rng, 0, 3);
  if (kind == 0) return sign;  // contractible piece
  if (kind == 1) return 0;     // two free summands
  Integer m = 1;
  const long factors = kind == 2 ? 1 : uniform(rng, 1, 2);
  for (long f = 0; f < factors; ++f) {
    const auto idx = static_cast<std::size_t>(uniform(rng, 0, long(params.torsion_primes.size()) - 1));
    const auto s = static_cast<unsigned>(uniform(rng, 1, long(std::max(1U, params.max_exponent))));
    Integer candidate = m * power(Integer(params.torsion_primes[idx]), s);
    // Keep each prime's exponent within max_exponent.
    if (gcd(m, Integer(params.torsion_primes[idx])) == 1) m = candidate;
  }
  return sign * m;
}

}  // namespace

ChainComplex random_complex(const RandomComplexParams& params, std::uint64_t seed) {
  if (params.degrees == 0) throw Error("random complex needs at least one degree");
  for (long p : params.torsion_primes)
    if (!is_prime(Integer(p))) throw Error("torsion prime " + std::to_string(p) + " is not prime");
  Rng rng(seed);

  struct Piece {
    std::size_t bottom;  // degree index of the lower end
    std::size_t bottom_slot;
    std::size_t top_slot;
    Integer multiplier;
  };
  std::vector<std::size_t> used(params.degrees, 0);
  std::vector<Piece> pairs;

  const long attempts = uniform(rng, 1, long(params.degrees * params.max_rank) + 1);
  for (long a = 0; a < attempts; ++a) {
    const auto idx = static_cast<std::size_t>(uniform(rng, 0, long(params.degrees) - 1));
    const bool want_pair = idx + 1 < params.degrees && uniform(rng, 0, 2) != 0;
    if (want_pair) {
      if (used[idx] >= params.max_rank || used[idx + 1] >= params.max_rank) continue;
      pairs.push_back({idx, used[idx]++, used[idx + 1]++, random_multiplier(params, rng)});
    } else if (used[idx] < params.max_rank) {
      ++used[idx];  // free summand
    }
  }

  std::vector<IntMatrix> boundaries;
  for (std::size_t k = 0; k + 1 < params.degrees; ++k) boundaries.emplace_back(used[k], used[k + 1]);
  for (const auto& piece : pairs) boundaries[piece.bottom](piece.bottom_slot, piece.top_slot) = piece.multiplier;

  std::vector<Unimodular> bases;
  for (std::size_t k = 0; k < params.degrees; ++k)
    bases.push_back(random_unimodular(used[k], params.entry_bound, rng));
  for (std::size_t k = 0; k + 1 < params.degrees; ++k)
    boundaries[k] = bases[k].forward * boundaries[k] * bases[k + 1].inverse;

  return ChainComplex(params.base_degree, std::move(used), std::move(boundaries));
}

ChainMap random_chain_map(const ChainComplex& source, const ChainComplex& target, std::uint64_t seed,
                          long coefficient_bound) {
  if (source.modulus() != 0 || target.modulus() != 0)
    throw Error("wrong ring: random chain maps are generated over Z");
  Rng rng(seed);

  // Unknowns: entries of every component, degree by degree.
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (int d = source.base_degree(); d <= source.top_degree(); ++d) {
    offset.push_back(unknowns);
    unknowns += target.rank(d) * source.rank(d);
  }
  auto var = [&](int d, std::size_t row, std::size_t col) {
    return offset[static_cast<std::size_t>(d - source.base_degree())] + row * source.rank(d) + col;
  };
  auto in_source = [&](int d) { return d >= source.base_degree() && d <= source.top_degree(); };

  // One equation per entry of f_{d-1} ds_d - dt_d f_d.
  std::vector<std::vector<Integer>> equations;
  for (int d = source.base_degree(); d <= source.top_degree(); ++d) {
    const IntMatrix ds = source.differential(d);
    const IntMatrix dt = target.differential(d);
    for (std::size_t i = 0; i < target.rank(d - 1); ++i)
      for (std::size_t j = 0; j < source.rank(d); ++j) {
        std::vector<Integer> row(unknowns, Integer(0));
        if (in_source(d - 1))
          for (std::size_t k = 0; k < source.rank(d - 1); ++k) row[var(d - 1, i, k)] += ds(k, j);
        for (std::size_t k = 0; k < target.rank(d); ++k) row[var(d, k, j)] -= dt(i, k);
        equations.push_back(std::move(row));
      }
  }
  IntMatrix system = IntMatrix::from_rows(equations, unknowns);
  IntMatrix basis = kernel_basis(system);

  std::vector<Integer> solution(unknowns, Integer(0));
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    const long c = uniform(rng, -coefficient_bound, coefficient_bound);
    if (c == 0) continue;
    for (std::size_t u = 0; u < unknowns; ++u) solution[u] += c * basis(u, b);
  }

  std::vector<IntMatrix> components;
  for (int d = source.base_degree(); d <= source.top_degree(); ++d) {
    IntMatrix part(target.rank(d), source.rank(d));
    for (std::size_t i = 0; i < part.rows(); ++i)
      for (std::size_t j = 0; j < part.cols(); ++j) part(i, j) = solution[var(d, i, j)];
    components.push_back(std::move(part));
  }
  return ChainMap(source, target, std::move(components));
}

}  // namespace cfhom
