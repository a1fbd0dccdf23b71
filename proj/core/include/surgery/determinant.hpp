#pragma once

#include "surgery/numeric.hpp"

#include <vector>

namespace surgery {

using IntMatrix = std::vector<std::vector<Integer>>;
using RatMatrix = std::vector<std::vector<Rational>>;

// Fraction-free Gaussian elimination (Bareiss).  Exact over the integers; all
// intermediate divisions are known to be exact, so no rationals appear.
Integer bareiss_determinant(IntMatrix m);

// Exact Gaussian elimination over the rationals with plain pivoting.  Slower
// than Bareiss on integer input but algorithmically independent of it, which
// is what the cross-checks between the two determinant routes rely on.
Rational rational_determinant(RatMatrix m);

} // namespace surgery
