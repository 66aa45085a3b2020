#pragma once

// Local (alpha = 1) solver built only from classical finite differences and a
// tridiagonal solve.  It shares no code with the fractional operator and
// serves as the oracle for the alpha -> 1 collapse of the nonlocal solver.

#include "fracplast/bvp_solver.hpp"

namespace fracplast {

/// Runs `problem` with alpha forced to 1.  The grid (dx = ell/m) and load
/// program are taken from the problem unchanged.
History classical_reference(const Problem& problem);

}  // namespace fracplast
