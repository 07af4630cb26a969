#pragma once

#include "eulersum/rational.hpp"

#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace eulersum {

// RAII wrapper around an mpfr_t. Every value carries its own precision;
// binary operations produce a result at the larger of the two precisions.
class MPFloat {
  public:
    explicit MPFloat(mpfr_prec_t prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    MPFloat(long value, mpfr_prec_t prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_si(v_, value, MPFR_RNDN);
    }
    MPFloat(const BigRational& value, mpfr_prec_t prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN);
    }
    MPFloat(const BigInt& value, mpfr_prec_t prec) {
        check_prec(prec);
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
    }

    MPFloat(const MPFloat& o) {
        mpfr_init2(v_, o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    MPFloat(MPFloat&& o) noexcept {
        mpfr_init2(v_, o.prec());
        mpfr_swap(v_, o.v_);
    }
    MPFloat& operator=(const MPFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, o.prec());
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    MPFloat& operator=(MPFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~MPFloat() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static MPFloat pi(mpfr_prec_t prec) {
        MPFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static MPFloat log2_const(mpfr_prec_t prec) {
        MPFloat r(prec);
        mpfr_const_log2(r.v_, MPFR_RNDN);
        return r;
    }
    static MPFloat euler_gamma(mpfr_prec_t prec) {
        MPFloat r(prec);
        mpfr_const_euler(r.v_, MPFR_RNDN);
        return r;
    }
    // 10^e with e of either sign.
    static MPFloat pow10(long e, mpfr_prec_t prec) {
        MPFloat r(prec);
        mpfr_ui_pow_ui(r.v_, 10u, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
        if (e < 0) mpfr_si_div(r.v_, 1, r.v_, MPFR_RNDN);
        return r;
    }
    // Library zeta at integer argument; used only as a cross-check oracle in tests.
    static MPFloat zeta_ui(unsigned long s, mpfr_prec_t prec) {
        MPFloat r(prec);
        mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
        return r;
    }

    friend MPFloat operator+(const MPFloat& a, const MPFloat& b) {
        MPFloat r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator-(const MPFloat& a, const MPFloat& b) {
        MPFloat r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator*(const MPFloat& a, const MPFloat& b) {
        MPFloat r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator/(const MPFloat& a, const MPFloat& b) {
        MPFloat r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator+(const MPFloat& a, long b) {
        MPFloat r(a.prec());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator-(const MPFloat& a, long b) {
        MPFloat r(a.prec());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator*(const MPFloat& a, long b) {
        MPFloat r(a.prec());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator/(const MPFloat& a, long b) {
        MPFloat r(a.prec());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend MPFloat operator*(const BigRational& a, const MPFloat& b) {
        MPFloat r(b.prec());
        mpfr_mul_q(r.v_, b.v_, a.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    friend MPFloat operator*(const BigInt& a, const MPFloat& b) {
        MPFloat r(b.prec());
        mpfr_mul_z(r.v_, b.v_, a.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    friend MPFloat operator/(const MPFloat& a, const BigInt& b) {
        MPFloat r(a.prec());
        mpfr_div_z(r.v_, a.v_, b.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    friend MPFloat operator/(long a, const MPFloat& b) {
        MPFloat r(b.prec());
        mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
        return r;
    }

    MPFloat& operator+=(const MPFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_add(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MPFloat& operator-=(const MPFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }
    MPFloat& operator*=(const MPFloat& o) {
        if (o.prec() > prec()) mpfr_prec_round(v_, o.prec(), MPFR_RNDN);
        mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
        return *this;
    }

    MPFloat operator-() const {
        MPFloat r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MPFloat abs() const {
        MPFloat r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    MPFloat pow_si(long e) const {
        MPFloat r(prec());
        mpfr_pow_si(r.v_, v_, e, MPFR_RNDN);
        return r;
    }
    MPFloat log() const {
        MPFloat r(prec());
        mpfr_log(r.v_, v_, MPFR_RNDN);
        return r;
    }
    // value * 2^k, exactly.
    MPFloat ldexp(long k) const {
        MPFloat r(prec());
        mpfr_mul_2si(r.v_, v_, k, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const MPFloat& a, const MPFloat& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const MPFloat& a, const MPFloat& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const MPFloat& a, const MPFloat& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const MPFloat& a, const MPFloat& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const MPFloat& a, const MPFloat& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Scientific-notation rendering with `digits` significant digits.
    std::string to_string(size_t digits) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", static_cast<int>(digits ? digits - 1 : 0), v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    // Lossy; only for diagnostics and coarse comparisons.
    double approx_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    static void check_prec(mpfr_prec_t prec) {
        if (prec < 64) throw std::invalid_argument("MPFloat: precision must be >= 64 bits");
    }
    mpfr_t v_;
};

}  // namespace eulersum
