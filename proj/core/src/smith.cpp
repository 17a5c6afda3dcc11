#include "cfhom/smith.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "cfhom/error.hpp"

namespace cfhom {
namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest |entry| in the trailing block starting at (t, t); row-major scan
// keeps the first minimum, which gives the row-then-column tie-break.
std::optional<Position> find_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t r = t; r < d.rows(); ++r)
    for (std::size_t c = t; c < d.cols(); ++c) {
      const Integer& x = d(r, c);
      if (x == 0) continue;
      if (!best || mpz_cmpabs(x.get_mpz_t(), best_abs.get_mpz_t()) < 0) {
        best = Position{r, c};
        best_abs = abs(x);
      }
    }
  return best;
}

Integer floor_quotient(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SNFResult res{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& U = res.U;
  IntMatrix& D = res.D;
  IntMatrix& V = res.V;

  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      auto pivot = find_pivot(D, t);
      if (!pivot) return res;  // trailing block is zero
      D.swap_rows(t, pivot->row);
      U.swap_rows(t, pivot->row);
      D.swap_cols(t, pivot->col);
      V.swap_cols(t, pivot->col);

      bool cleared = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        Integer q = -floor_quotient(D(i, t), D(t, t));
        D.add_row_multiple(i, t, q);
        U.add_row_multiple(i, t, q);
        if (D(i, t) != 0) cleared = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        Integer q = -floor_quotient(D(t, j), D(t, t));
        D.add_col_multiple(j, t, q);
        V.add_col_multiple(j, t, q);
        if (D(t, j) != 0) cleared = false;
      }
      if (!cleared) continue;

      // The pivot must divide the whole trailing block; otherwise fold the
      // offending row into row t and reduce again.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < m && !bad_row; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      D.add_row_multiple(t, *bad_row, 1);
      U.add_row_multiple(t, *bad_row, 1);
    }
    if (D(t, t) < 0) {
      D.negate_row(t);
      U.negate_row(t);
    }
  }
  return res;
}

std::vector<Integer> invariant_factors(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i)
    if (snf.D(i, i) != 0) out.push_back(snf.D(i, i));
  return out;
}

std::size_t matrix_rank(const IntMatrix& a) { return invariant_factors(a).size(); }

IntMatrix kernel_basis(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  std::size_t rank = 0;
  while (rank < std::min(a.rows(), a.cols()) && snf.D(rank, rank) != 0) ++rank;
  return snf.V.columns(rank, a.cols() - rank);
}

FGAbelianGroup cokernel(const IntMatrix& a) {
  auto factors = invariant_factors(a);
  const std::size_t free = a.rows() - factors.size();
  return FGAbelianGroup::from_cyclic_orders(free, std::move(factors));
}

FGAbelianGroup quotient_group(const IntMatrix& cycles, const IntMatrix& boundaries) {
  if (cycles.rows() != boundaries.rows())
    throw Error("shape error: cycles live in Z^" + std::to_string(cycles.rows()) +
                ", boundaries in Z^" + std::to_string(boundaries.rows()));
  // U Z V = D. Columns of Z V are U^{-1} D, so the first `rank` of them form
  // a basis of span(Z) in which b = Z x has coordinates y_i = (U b)_i / d_i.
  SNFResult snf = smith_normal_form(cycles);
  std::size_t rank = 0;
  while (rank < std::min(cycles.rows(), cycles.cols()) && snf.D(rank, rank) != 0) ++rank;

  IntMatrix ub = snf.U * boundaries;
  IntMatrix relations(rank, boundaries.cols());
  for (std::size_t j = 0; j < boundaries.cols(); ++j) {
    for (std::size_t i = 0; i < ub.rows(); ++i) {
      if (i < rank) {
        if (!mpz_divisible_p(ub(i, j).get_mpz_t(), snf.D(i, i).get_mpz_t()))
          throw Error("boundaries not contained in cycles");
        mpz_divexact(relations(i, j).get_mpz_t(), ub(i, j).get_mpz_t(), snf.D(i, i).get_mpz_t());
      } else if (ub(i, j) != 0) {
        throw Error("boundaries not contained in cycles");
      }
    }
  }
  return cokernel(relations);
}

IntMatrix kernel_lattice_mod(const IntMatrix& a, const Integer& q) {
  if (q < 2) throw Error("invalid modulus " + to_string(q) + " (need q >= 2)");
  const std::size_t n = a.cols();
  IntMatrix augmented = IntMatrix::hconcat(a, IntMatrix::identity(a.rows()).scaled(-q));
  return kernel_basis(augmented).rows_range(0, n);
}

Integer span_cardinality_mod(const IntMatrix& generators, const Integer& q) {
  if (q < 2) throw Error("invalid modulus " + to_string(q) + " (need q >= 2)");
  const std::size_t n = generators.rows();
  if (n == 0) return 1;
  IntMatrix lattice = IntMatrix::hconcat(generators, IntMatrix::identity(n).scaled(q));
  Integer index = 1;
  for (const auto& d : invariant_factors(lattice)) index *= d;
  Integer total = power(q, static_cast<unsigned>(n));
  Integer out;
  mpz_divexact(out.get_mpz_t(), total.get_mpz_t(), index.get_mpz_t());
  return out;
}

}  // namespace cfhom
