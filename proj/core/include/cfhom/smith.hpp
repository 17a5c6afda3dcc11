#pragma once

#include <cstddef>
#include <vector>

#include "cfhom/abelian_group.hpp"
#include "cfhom/int_matrix.hpp"

namespace cfhom {

/// U * A * V = D with U, V unimodular and D in Smith normal form.
struct SNFResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};

/// Smith normal form with minimal-absolute-value pivoting.
///
/// Ties between candidate pivots go to the smallest row index, then the
/// smallest column index, so the same input always yields the same U, D, V.
/// Diagonal entries are non-negative, nonzero entries precede zeros and
/// each divides the next.
SNFResult smith_normal_form(const IntMatrix& a);

/// Nonzero diagonal entries of the Smith form (including units).
std::vector<Integer> invariant_factors(const IntMatrix& a);

std::size_t matrix_rank(const IntMatrix& a);

/// Columns form a Z-basis of {x : A x = 0}.
IntMatrix kernel_basis(const IntMatrix& a);

/// Z^rows / (column span of A).
FGAbelianGroup cokernel(const IntMatrix& a);

/// span(cycles) / span(boundaries), where both are given as generating
/// columns in the same ambient Z^n. Cycle columns need not be independent.
///
/// Throws when some boundary column is not an integral combination of the
/// cycle columns.
FGAbelianGroup quotient_group(const IntMatrix& cycles, const IntMatrix& boundaries);

// Submodules of (Z/q)^n are handled through their preimages in Z^n, which
// always contain q Z^n.

/// Generators (columns) of the lattice {x in Z^n : A x = 0 mod q}.
IntMatrix kernel_lattice_mod(const IntMatrix& a, const Integer& q);

/// Number of elements of the submodule of (Z/q)^n spanned by the columns.
Integer span_cardinality_mod(const IntMatrix& generators, const Integer& q);

}  // namespace cfhom
