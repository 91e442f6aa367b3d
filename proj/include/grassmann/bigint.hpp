#pragma once

#include <gmpxx.h>

namespace grassmann {

/// Exact nonnegative counts. Subspace counts grow as q^(d(n-d)) and overflow
/// fixed-width integers almost immediately, so all cardinalities are GMP
/// integers end to end.
using BigCount = mpz_class;

}  // namespace grassmann
