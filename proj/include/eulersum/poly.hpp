#pragma once

#include "eulersum/rational.hpp"

#include <string>
#include <vector>

namespace eulersum {

// Dense integer polynomial in y, coefficient index = degree, trailing zeros trimmed.
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return static_cast<long>(coeffs.size()) - 1; }
    BigInt coeff(long k) const {
        if (k < 0 || k > degree()) return BigInt(0);
        return coeffs[k];
    }

    IntPoly derivative() const {
        if (coeffs.size() <= 1) return IntPoly{};
        std::vector<BigInt> d(coeffs.size() - 1);
        for (size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = coeffs[k] * BigInt(static_cast<long>(k));
        return IntPoly(std::move(d));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly{};
        std::vector<BigInt> c(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
        for (size_t i = 0; i < a.coeffs.size(); ++i)
            for (size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
        return IntPoly(std::move(c));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<BigInt> c(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
        for (size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (size_t i = 0; i < b.coeffs.size(); ++i) c[i] -= b.coeffs[i];
        return IntPoly(std::move(c));
    }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs == b.coeffs; }

    // Descending-power rendering, e.g. "2*y^3 - 2*y"; zero polynomial -> "0".
    std::string to_string() const;
};

// Truncated power series in t with exact rational coefficients.
// coeffs[k] is the coefficient of t^k; entries are meaningful only for
// k <= truncation_order, and every operation tracks that bound.
struct RatSeries {
    std::vector<BigRational> coeffs;
    long truncation_order = -1;

    RatSeries() = default;
    explicit RatSeries(long order) : coeffs(order + 1, BigRational(0)), truncation_order(order) {
        if (order < 0) throw std::invalid_argument("RatSeries: negative order");
    }

    BigRational coeff(long k) const {
        if (k < 0 || k > truncation_order) throw std::out_of_range("RatSeries::coeff beyond truncation order");
        return coeffs[k];
    }

    friend RatSeries operator+(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.truncation_order, b.truncation_order));
        for (long k = 0; k <= r.truncation_order; ++k) r.coeffs[k] = a.coeffs[k] + b.coeffs[k];
        return r;
    }
    friend RatSeries operator-(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.truncation_order, b.truncation_order));
        for (long k = 0; k <= r.truncation_order; ++k) r.coeffs[k] = a.coeffs[k] - b.coeffs[k];
        return r;
    }
    friend RatSeries operator*(const RatSeries& a, const RatSeries& b) {
        RatSeries r(std::min(a.truncation_order, b.truncation_order));
        for (long i = 0; i <= std::min<long>(a.truncation_order, r.truncation_order); ++i) {
            if (a.coeffs[i] == 0) continue;
            for (long j = 0; i + j <= r.truncation_order && j <= b.truncation_order; ++j) {
                if (b.coeffs[j] == 0) continue;
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
            }
        }
        return r;
    }
    friend RatSeries operator*(const BigRational& s, const RatSeries& a) {
        RatSeries r(a.truncation_order);
        for (long k = 0; k <= r.truncation_order; ++k) r.coeffs[k] = s * a.coeffs[k];
        return r;
    }
    friend bool operator==(const RatSeries& a, const RatSeries& b) {
        return a.truncation_order == b.truncation_order && a.coeffs == b.coeffs;
    }
};

}  // namespace eulersum
