#pragma once

#include "eulersum/rational.hpp"

namespace eulersum {

// B_n with B_1 = -1/2 (generating function t/(e^t - 1)), memoized.
// Safe to call concurrently; every caller sees the same values.
BigRational bernoulli(long n);

// G_n = 2 (1 - 2^n) B_n; integer-valued for n >= 1, G_1 = 1, G_{2k+1} = 0 for k >= 1.
BigRational genocchi(long n);

}  // namespace eulersum
