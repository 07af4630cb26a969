#pragma once

#include "eulersum/rational.hpp"

#include <stdexcept>
#include <utility>

namespace eulersum {

// lambda_m applied to a two-parameter family Omega at base indices (p, q):
//   lambda_m(Omega_{p,q}) = sum_{i+j=m-1, i,j>=0} C(p+i-1,i) C(q+j-1,j) Omega_{p+i,q+j}
// lambda_1 is the identity. Generic over the value ring: `family(a, b)` may
// return a ConstExpr, an MPFloat, or anything supporting += and scaling by
// BigRational. The first index always shifts by i, the second by j.
template <typename F>
auto lambda_op(long m, long p, long q, F&& family) {
    if (m < 1) throw std::invalid_argument("lambda_op: m must be >= 1");
    using V = decltype(family(p, q));
    V acc = BigRational(binom(p - 1, 0) * binom(q + m - 2, m - 1)) * family(p, q + m - 1);
    for (long i = 1; i <= m - 1; ++i) {
        long j = m - 1 - i;
        acc += BigRational(binom(p + i - 1, i) * binom(q + j - 1, j)) * family(p + i, q + j);
    }
    return acc;
}

}  // namespace eulersum
