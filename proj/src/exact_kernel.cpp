#include "eulersum/exact_kernel.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace eulersum {

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs[k];
        if (c == 0) continue;
        BigInt a = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (k == 0) {
            out << a.get_str();
        } else {
            if (a != 1) out << a.get_str() << "*";
            out << "y";
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

namespace {
std::mutex g_dp_mutex;
std::vector<IntPoly> g_dp{IntPoly({BigInt(0), BigInt(1)})};  // P_0 = y

IntPoly one_minus_y2() { return IntPoly({BigInt(1), BigInt(0), BigInt(-1)}); }
}  // namespace

IntPoly derivative_poly(long n) {
    if (n < 0) throw std::invalid_argument("derivative_poly: negative index");
    std::lock_guard<std::mutex> lock(g_dp_mutex);
    while (static_cast<long>(g_dp.size()) <= n) {
        g_dp.push_back(one_minus_y2() * g_dp.back().derivative());
    }
    return g_dp[n];
}

RatSeries tanh_series(long order) {
    if (order < 1) throw std::invalid_argument("tanh_series: order must be >= 1");
    RatSeries s(order);
    for (long n = 1; 2 * n - 1 <= order; ++n) {
        s.coeffs[2 * n - 1] =
            -genocchi(2 * n) * BigRational(pow2z(2 * n - 1)) / BigRational(factorial(2 * n));
    }
    return s;
}

RatSeries compose_poly_tanh(const IntPoly& P, long order) {
    if (order < 0) throw std::invalid_argument("compose_poly_tanh: negative order");
    RatSeries res(order);
    if (P.is_zero()) return res;
    // Horner in descending powers: res = (...(c_d * th + c_{d-1}) * th + ...) + c_0.
    // tanh has zero constant term, so truncation at `order` is exact throughout.
    RatSeries th = order >= 1 ? tanh_series(order) : RatSeries(0);
    res.coeffs[0] = BigRational(P.coeff(P.degree()));
    for (long k = P.degree() - 1; k >= 0; --k) {
        res = res * th;
        res.coeffs[0] += BigRational(P.coeff(k));
    }
    return res;
}

BigRational rho(long m, long n, long k) {
    if (m < 0 || n < 0 || k < 0) throw std::invalid_argument("rho: negative argument");
    if (k == 0) return make_rational(factorial(m) * factorial(n), factorial(m + n + 1));
    BigInt v = BigInt(sign_pow(m)) * binom(n, m + n + 1 - 2 * k) +
               BigInt(sign_pow(n)) * binom(m, m + n + 1 - 2 * k);
    return BigRational(v);
}

BigRational pn_coeff_closed_form(long n, long k) {
    if (n < 0 || k < 0) throw std::invalid_argument("pn_coeff_closed_form: negative argument");
    BigRational v = -genocchi(k + n + 1) / BigRational(k + n + 1) * BigRational(pow2z(k + n)) /
                    BigRational(factorial(k));
    if (n == 0 && k == 0) v += 1;
    return v;
}

BigRational pmpn_coeff_closed_form(long m, long n, long l) {
    if (m < 0 || n < 0 || l < 0) throw std::invalid_argument("pmpn_coeff_closed_form: negative argument");
    BigRational s = rho(m, n, 0) * genocchi(l + m + n + 2) / BigRational(l + m + n + 2);
    for (long k = 1; k <= (m + n) / 2; ++k) {
        s += rho(m, n, k) * bernoulli(2 * k) * genocchi(l + m + n - 2 * k + 2) /
             (BigRational(2 * k) * BigRational(l + m + n - 2 * k + 2));
    }
    s *= BigRational(pow2z(l + m + n + 1)) / BigRational(factorial(l));
    if (l == 0 && m == 0 && n == 0) s += 1;
    return s;
}

BigRational check_linearization(long m, long n, long order) {
    if (order < 0) throw std::invalid_argument("check_linearization: negative order");
    RatSeries prod = compose_poly_tanh(derivative_poly(m), order) *
                     compose_poly_tanh(derivative_poly(n), order);
    BigRational worst(0);
    for (long l = 0; l <= order; ++l) {
        BigRational d = abs(prod.coeff(l) - pmpn_coeff_closed_form(m, n, l));
        if (d > worst) worst = d;
    }
    return worst;
}

std::pair<BigRational, BigRational> conv_eGG_eBG_sides(long n, long alpha, long gamma, int delta,
                                                       int epsilon) {
    if (n < 0 || alpha < 0 || gamma < 0) throw std::invalid_argument("conv_eGG_eBG: negative argument");
    if ((delta != 0 && delta != 1) || (epsilon != 0 && epsilon != 1))
        throw std::invalid_argument("conv_eGG_eBG: delta/epsilon must be 0 or 1");
    BigRational lhs(0);
    for (long k = 0; k <= n; ++k) {
        lhs += BigRational(binom(2 * n + 2 - delta - epsilon, 2 * k + 1 - delta)) *
               genocchi(2 * k + 2 * alpha + 2) / BigRational(k + alpha + 1) *
               genocchi(2 * n - 2 * k + 2 * gamma + 2) / BigRational(n - k + gamma + 1);
    }
    BigRational rhs = BigRational(4) * rho(2 * alpha + delta, 2 * gamma + epsilon, 0) *
                      genocchi(2 * n + 2 * alpha + 2 * gamma + 4) / BigRational(n + alpha + gamma + 2);
    long kmax = alpha + gamma + (delta + epsilon) / 2;
    for (long k = 1; k <= kmax; ++k) {
        rhs += BigRational(2) * rho(2 * alpha + delta, 2 * gamma + epsilon, k) * bernoulli(2 * k) /
               BigRational(k) * genocchi(2 * n - 2 * k + 2 * alpha + 2 * gamma + 4) /
               BigRational(n - k + alpha + gamma + 2);
    }
    return {lhs, rhs};
}

BigRational check_conv_eGG_eBG(long n, long alpha, long gamma, int delta, int epsilon) {
    auto [lhs, rhs] = conv_eGG_eBG_sides(n, alpha, gamma, delta, epsilon);
    return lhs - rhs;
}

std::pair<BigRational, BigRational> conv_BG_GG_sides(long n, long q) {
    if (n < 0) throw std::invalid_argument("conv_BG_GG: negative n");
    if (q < 2) throw std::invalid_argument("conv_BG_GG: q must be >= 2");
    BigRational lhs(0);
    for (long i = 0; i < q; ++i) {
        lhs += BigRational(binom(q - 1, i)) * bernoulli(q + i) * genocchi(2 * n + q - i) /
               (BigRational(q + i) * BigRational(2 * n + q - i));
    }
    for (long i = 0; i <= 2 * n; ++i) {
        lhs += make_rational(sign_pow(i), 4) * BigRational(binom(2 * n, i)) * genocchi(q + i) *
               genocchi(2 * n + q - i) / (BigRational(q + i) * BigRational(2 * n + q - i));
    }
    BigRational rhs = make_rational(BigInt(sign_pow(q)), BigInt(q) * binom(2 * q, q)) *
                      genocchi(2 * n + 2 * q) / BigRational(2 * n + 2 * q);
    return {lhs, rhs};
}

BigRational check_conv_BG_GG(long n, long q) {
    auto [lhs, rhs] = conv_BG_GG_sides(n, q);
    return lhs - rhs;
}

}  // namespace eulersum
