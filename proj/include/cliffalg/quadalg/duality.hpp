#pragma once

#include "cliffalg/quadalg/graded_algebra_table.hpp"

namespace cliffalg::quadalg {

// R^perp in V^dual (x) V^dual under the coordinate pairing of words.
// Throws DimensionMismatch unless R lives in n^2.
Subspace quadratic_dual(const Subspace& r, int n);

// The pairings A_i x A_{top-i} -> A_top are perfect and the dims are
// symmetric, with dim A_top = 1 and A_{top+1} = 0. A table that does not
// reach top + 1, or a negative top, throws NotFrobeniusShaped; any other
// failure returns false. Needs mult(i, top - i) for all i.
bool frobenius_check(const GradedAlgebraTable& t, int topdeg);

}  // namespace cliffalg::quadalg
