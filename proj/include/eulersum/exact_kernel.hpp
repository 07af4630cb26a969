#pragma once

#include "eulersum/bernoulli.hpp"
#include "eulersum/poly.hpp"
#include "eulersum/rational.hpp"

#include <utility>

namespace eulersum {

// Derivative polynomials of tanh: P_0(y) = y, P_{n+1}(y) = (1 - y^2) P_n'(y).
// deg P_n = n + 1. Memoized; thread safe.
IntPoly derivative_poly(long n);

// tanh t = -sum_{n>=1} G_{2n} (2t)^{2n-1} / (2n)!, truncated at t^order.
RatSeries tanh_series(long order);

// P(tanh t) truncated at t^order.
RatSeries compose_poly_tanh(const IntPoly& P, long order);

// rho_{m,n}^{(k)} linearization coefficients:
//   k = 0: m! n! / (m+n+1)!
//   k >= 1: (-1)^m C(n, m+n+1-2k) + (-1)^n C(m, m+n+1-2k), C(a,b) = 0 out of range.
BigRational rho(long m, long n, long k);

// Coefficient of t^k in P_n(tanh t) via the closed form
//   -G_{k+n+1}/(k+n+1) * 2^{k+n} / k!  (+1 when n = k = 0).
BigRational pn_coeff_closed_form(long n, long k);

// Coefficient of t^l in P_m(tanh t) P_n(tanh t) via the rho/Bernoulli/Genocchi
// closed form (+1 when l = m = n = 0).
BigRational pmpn_coeff_closed_form(long m, long n, long l);

// Max |series coefficient - closed form| over t^0..t^order for P_m P_n; 0 iff
// the linearization identity holds to that order.
BigRational check_linearization(long m, long n, long order);

// Symmetric Genocchi convolution: both sides as exact rationals.
// LHS: sum_{k=0}^{n} C(2n+2-d-e, 2k+1-d) G_{2k+2a+2}/(k+a+1) G_{2n-2k+2g+2}/(n-k+g+1)
// RHS: 4 rho^{(0)}_{2a+d,2g+e} G_{2n+2a+2g+4}/(n+a+g+2)
//      + 2 sum_{k=1}^{a+g+floor((d+e)/2)} rho^{(k)}_{2a+d,2g+e} (B_{2k}/k) G_{2n-2k+2a+2g+4}/(n-k+a+g+2)
std::pair<BigRational, BigRational> conv_eGG_eBG_sides(long n, long alpha, long gamma, int delta,
                                                       int epsilon);
BigRational check_conv_eGG_eBG(long n, long alpha, long gamma, int delta, int epsilon);

// Mixed Bernoulli-Genocchi / Genocchi-Genocchi convolution (q >= 2):
// LHS: sum_{i=0}^{q-1} C(q-1,i) B_{q+i} G_{2n+q-i}/((q+i)(2n+q-i))
//      + (1/4) sum_{i=0}^{2n} (-1)^i C(2n,i) G_{q+i} G_{2n+q-i}/((q+i)(2n+q-i))
// RHS: (-1)^q/(q C(2q,q)) * G_{2n+2q}/(2n+2q)
std::pair<BigRational, BigRational> conv_BG_GG_sides(long n, long q);
BigRational check_conv_BG_GG(long n, long q);

}  // namespace eulersum
