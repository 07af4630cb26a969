#include "eulersum/engine.hpp"

#include "eulersum/bernoulli.hpp"

#include <cmath>

namespace eulersum {

EngineParams EngineParams::for_digits(long digits) {
    if (digits < 15) throw std::invalid_argument("EngineParams: digits must be >= 15");
    EngineParams p;
    p.digits = digits;
    p.n_direct = std::max<long>(600, 8 * digits);
    p.r_order = std::max<long>(48, (6 * digits) / 5);
    p.j_em = std::max<long>(44, digits);
    p.nz_atoms = std::max<long>(64, 2 * digits);
    p.prec = static_cast<mpfr_prec_t>(std::ceil((digits + 15) * std::log2(10.0))) + 32;
    return p;
}

std::vector<BigRational> pow_shift_series(const BigRational& c, long e, long r_order) {
    if (e < 1 || r_order < 0) throw std::invalid_argument("pow_shift_series: need e >= 1, r >= 0");
    std::vector<BigRational> out(r_order + 1, BigRational(0));
    BigRational neg_c_pow(1);
    for (long k = 0; e + k <= r_order; ++k) {
        out[e + k] = BigRational(binom(e + k - 1, k)) * neg_c_pow;
        neg_c_pow *= -c;
    }
    return out;
}

std::vector<BigRational> ln_shift_series(const BigRational& c, long r_order) {
    std::vector<BigRational> out(r_order + 1, BigRational(0));
    BigRational neg_c_pow(1);
    for (long k = 1; k <= r_order; ++k) {
        neg_c_pow *= -c;
        out[k] = -neg_c_pow / BigRational(k);
    }
    return out;
}

std::vector<BigRational> hurwitz_asym_series(long p, const BigRational& c, long r_order) {
    if (p < 2) throw std::invalid_argument("hurwitz_asym_series: p must be >= 2");
    std::vector<BigRational> out(r_order + 1, BigRational(0));
    auto add = [&](const BigRational& coef, long e) {
        if (e > r_order) return;
        auto s = pow_shift_series(c, e, r_order);
        for (long i = 0; i <= r_order; ++i)
            if (s[i] != 0) out[i] += coef * s[i];
    };
    add(BigRational(1) / BigRational(p - 1), p - 1);
    add(make_rational(1, 2), p);
    for (long j = 1; p - 1 + 2 * j <= r_order; ++j) {
        BigRational poch(1);
        for (long t = 0; t < 2 * j - 1; ++t) poch *= BigRational(p + t);
        add(bernoulli(2 * j) / BigRational(factorial(2 * j)) * poch, p - 1 + 2 * j);
    }
    return out;
}

std::vector<BigRational> psi_asym_series(const BigRational& c, long r_order) {
    auto out = ln_shift_series(c, r_order);
    auto s1 = pow_shift_series(c, 1, r_order);
    for (long i = 0; i <= r_order; ++i)
        if (s1[i] != 0) out[i] -= make_rational(1, 2) * s1[i];
    for (long k = 1; 2 * k <= r_order; ++k) {
        auto sk = pow_shift_series(c, 2 * k, r_order);
        BigRational b = bernoulli(2 * k) / BigRational(2 * k);
        for (long i = 0; i <= r_order; ++i)
            if (sk[i] != 0) out[i] -= b * sk[i];
    }
    return out;
}

std::vector<BigRational> mul_series(const std::vector<BigRational>& a,
                                    const std::vector<BigRational>& b, long r_order) {
    std::vector<BigRational> out(r_order + 1, BigRational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(r_order); ++j) {
            if (b[j] != 0) out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

MPFloat hurwitz_tail(long s, const MPFloat& a, long j_terms) {
    if (s < 2) throw std::invalid_argument("hurwitz_tail: s must be >= 2");
    MPFloat ap = a.pow_si(1 - s);
    MPFloat tot = ap / (s - 1) + (ap / a) / 2;
    MPFloat ainv2 = 1 / (a * a);
    MPFloat apj = ap;
    BigInt poch(1);
    for (long j = 1; j <= j_terms; ++j) {
        apj *= ainv2;
        if (j == 1)
            poch = s;
        else
            poch *= BigInt(s + 2 * j - 3) * BigInt(s + 2 * j - 2);
        BigRational coef = bernoulli(2 * j) / BigRational(factorial(2 * j)) * BigRational(poch);
        tot += coef * apj;
    }
    return tot;
}

MPFloat hurwitz_log_tail(long s, const MPFloat& a, long j_terms) {
    if (s < 2) throw std::invalid_argument("hurwitz_log_tail: s must be >= 2");
    MPFloat la = a.log();
    MPFloat ap = a.pow_si(1 - s);
    MPFloat tot = ap * la / (s - 1) + ap / ((s - 1) * (s - 1)) + (ap / a) * la / 2;
    MPFloat ainv2 = 1 / (a * a);
    MPFloat apj = ap;
    BigInt poch(1);
    BigRational dig(0);
    for (long j = 1; j <= j_terms; ++j) {
        apj *= ainv2;
        if (j == 1) {
            poch = s;
            dig = make_rational(1, s);
        } else {
            poch *= BigInt(s + 2 * j - 3) * BigInt(s + 2 * j - 2);
            dig += make_rational(1, s + 2 * j - 3) + make_rational(1, s + 2 * j - 2);
        }
        BigRational coef = bernoulli(2 * j) / BigRational(factorial(2 * j)) * BigRational(poch);
        tot += coef * ((la - MPFloat(dig, a.prec())) * apj);
    }
    return tot;
}

namespace {

MPFloat zeta_direct(long s, const EngineParams& P) {
    MPFloat tot(P.prec);
    for (long n = 1; n <= P.nz_atoms; ++n) tot += MPFloat(n, P.prec).pow_si(-s);
    tot += hurwitz_tail(s, MPFloat(P.nz_atoms + 1, P.prec), P.j_em);
    return tot;
}

MPFloat denom_term(Family family, long n, long q, mpfr_prec_t prec) {
    if (family == Family::S_SUM) return MPFloat(n, prec).pow_si(-q);
    return (MPFloat(2 * n - 1, prec) / 2).pow_si(-q);
}

SumEval compute_euler_sum(const SumIndex& idx, const EngineParams& P) {
    validate_sum_index(idx);
    if (idx.family == Family::DOUBLE_t || idx.family == Family::DOUBLE_T)
        throw std::invalid_argument("compute_euler_sum: depth-two values go through double_value");
    const long p = idx.p, q = idx.q, R = P.r_order, J = P.j_em;
    const mpfr_prec_t prec = P.prec;

    BigRational c_num, c_den;
    switch (idx.family) {
        case Family::T_SUM: c_num = make_rational(-1, 2); c_den = make_rational(-1, 2); break;
        case Family::S_SUM: c_num = make_rational(1, 2); c_den = BigRational(0); break;
        default:            c_num = BigRational(0); c_den = make_rational(-1, 2); break;
    }

    // Numerator asymptotics: numerator(n) = cst + [ln n if p == 1] + ser(1/n).
    const bool has_log = (p == 1);
    std::vector<BigRational> ser;
    MPFloat cst(prec);
    if (p == 1) {
        ser = psi_asym_series(c_num, R);
        cst = MPFloat::euler_gamma(prec);
        if (idx.family != Family::R_SUM) cst += MPFloat::log2_const(prec).ldexp(1);
    } else {
        ser = hurwitz_asym_series(p, c_num, R);
        for (auto& x : ser) x = -x;
        cst = zeta_direct(p, P);
        if (idx.family != Family::R_SUM) cst = BigInt(pow2z(p) - 1) * cst;
    }
    const auto den = pow_shift_series(c_den, q, R);
    const auto f_ser = mul_series(ser, den, R);

    MPFloat tot(prec);
    HarmonicState hs(idx.family, p, prec);
    for (long n = 1; n <= P.n_direct; ++n) {
        hs.step();
        if ((n & (n - 1)) == 0) hs.self_check();
        tot += hs.numerator() * denom_term(idx.family, n, q, prec);
    }

    const MPFloat a(P.n_direct + 1, prec);
    MPFloat bound(prec);
    for (long r = q; r <= R; ++r) {
        MPFloat ht = hurwitz_tail(r, a, J);
        MPFloat coef = den[r] * cst;
        coef += MPFloat(f_ser[r], prec);
        tot += coef * ht;
        MPFloat hlt(prec);
        if (has_log && den[r] != 0) {
            hlt = hurwitz_log_tail(r, a, J);
            tot += den[r] * hlt;
        }
        if (r == R) {
            // Estimate of the first dropped asymptotic order: reuse the last
            // included order's magnitude with a safety factor.
            BigRational aden = abs(den[R]);
            BigRational afr = abs(f_ser[R]);
            bound = (aden * cst.abs() + MPFloat(afr, prec)) * ht * 4;
            if (has_log && aden != 0) bound += aden * hlt * 4;
        }
    }
    bound += tot.abs().ldexp(-static_cast<long>(prec - 24));
    return {tot, bound};
}

SumEval eval_with_escalation(const SumIndex& idx, const EngineParams& base) {
    EngineParams P = base;
    const MPFloat target = MPFloat::pow10(-base.digits, base.prec);
    for (int attempt = 0; attempt < 4; ++attempt) {
        SumEval r = compute_euler_sum(idx, P);
        if (!(r.bound > target)) return r;
        P.n_direct *= 2;
        P.r_order += 16;
        P.j_em += 8;
    }
    throw PrecisionUnreachable("cannot certify " + sum_index_name(idx) + " to " +
                               std::to_string(base.digits) + " digits");
}

}  // namespace

HarmonicState::HarmonicState(Family family, long p, mpfr_prec_t prec)
    : family_(family), p_(p), num_(prec) {
    if (family != Family::T_SUM && family != Family::S_SUM && family != Family::R_SUM)
        throw std::invalid_argument("HarmonicState: single-sum families only");
    if (p < 1) throw std::invalid_argument("HarmonicState: p must be >= 1");
}

MPFloat HarmonicState::increment(long n) const {
    const mpfr_prec_t prec = num_.prec();
    switch (family_) {
        case Family::T_SUM:
            if (n < 2) return MPFloat(prec);
            return (MPFloat(2 * n - 3, prec) / 2).pow_si(-p_);
        case Family::S_SUM:
            return (MPFloat(2 * n - 1, prec) / 2).pow_si(-p_);
        default:
            if (n < 2) return MPFloat(prec);
            return MPFloat(n - 1, prec).pow_si(-p_);
    }
}

void HarmonicState::step() {
    ++n_;
    num_ += increment(n_);
}

void HarmonicState::self_check() const {
    const mpfr_prec_t prec = num_.prec();
    MPFloat fresh(prec);
    for (long k = 1; k <= n_; ++k) fresh += increment(k);
    MPFloat mag = num_.abs();
    if (mag < MPFloat(1, prec)) mag = MPFloat(1, prec);
    MPFloat slack = mag.ldexp(-static_cast<long>(prec - 16));
    if ((fresh - num_).abs() > slack)
        throw std::logic_error("HarmonicState: incremental value drifted from fresh summation");
}

EvalContext::EvalContext(long target_digits) : params_(EngineParams::for_digits(target_digits)) {}

MPFloat EvalContext::atom(const Atom& a) {
    auto it = atom_cache_.find(a);
    if (it != atom_cache_.end()) return it->second;
    MPFloat v(params_.prec);
    switch (a.kind) {
        case AtomKind::ZETA:
            v = zeta_direct(a.arg, params_);
            break;
        case AtomKind::TBAR:
            v = BigInt(pow2z(a.arg) - 1) * atom(zeta_atom(a.arg));
            break;
        case AtomKind::LN2:
            v = MPFloat::log2_const(params_.prec);
            break;
        case AtomKind::PI:
            v = MPFloat::pi(params_.prec);
            break;
        case AtomKind::LI4HALF: {
            const long terms = static_cast<long>(params_.prec) + 40;
            MPFloat tot(params_.prec);
            for (long n = 1; n <= terms; ++n) {
                BigInt n2 = BigInt(n) * BigInt(n);
                tot += MPFloat(1, params_.prec).ldexp(-n) / (n2 * n2);
            }
            v = tot;
            break;
        }
        case AtomKind::AZETA51:
        case AtomKind::AZETA71:
        case AtomKind::ZETA62:
            v = eval_double_zeta(a, params_.prec).value;
            break;
    }
    atom_cache_.emplace(a, v);
    return v;
}

SumEval EvalContext::euler_sum_detailed(const SumIndex& idx) {
    auto it = sum_cache_.find(idx);
    if (it != sum_cache_.end()) return it->second;
    SumEval r = eval_with_escalation(idx, params_);
    sum_cache_.emplace(idx, r);
    return r;
}

MPFloat EvalContext::euler_sum(const SumIndex& idx) { return euler_sum_detailed(idx).value; }

MPFloat EvalContext::double_value(const SumIndex& idx) {
    validate_sum_index(idx);
    if (idx.family == Family::DOUBLE_t)
        return euler_sum({Family::T_SUM, idx.q, idx.p}).ldexp(-(idx.p + idx.q));
    if (idx.family == Family::DOUBLE_T)
        return euler_sum({Family::S_SUM, idx.q, idx.p}).ldexp(2 - idx.p - idx.q);
    throw std::invalid_argument("double_value: " + sum_index_name(idx) + " is not depth-two");
}

MPFloat EvalContext::const_expr(const ConstExpr& e) {
    MPFloat tot(params_.prec);
    for (const auto& [mono, coeff] : e.terms()) {
        MPFloat term(coeff, params_.prec);
        for (const auto& [at, exp] : mono.factors) term *= atom(at).pow_si(exp);
        tot += term;
    }
    return tot;
}

MPFloat EvalContext::combination(const SumCombination& comb) {
    MPFloat tot(params_.prec);
    for (const auto& [coeff, idx] : comb) {
        const bool depth_two =
            idx.family == Family::DOUBLE_t || idx.family == Family::DOUBLE_T;
        MPFloat v = depth_two ? double_value(idx) : euler_sum(idx);
        tot += coeff * v;
    }
    return tot;
}

MPFloat eval_atom(const Atom& a, EvalContext& ctx) { return ctx.atom(a); }
MPFloat eval_euler_sum(const SumIndex& idx, EvalContext& ctx) { return ctx.euler_sum(idx); }
SumEval eval_euler_sum_detailed(const SumIndex& idx, EvalContext& ctx) {
    return ctx.euler_sum_detailed(idx);
}
MPFloat eval_double_value(const SumIndex& idx, EvalContext& ctx) { return ctx.double_value(idx); }
MPFloat eval_const_expr(const ConstExpr& e, EvalContext& ctx) { return ctx.const_expr(e); }
MPFloat eval_combination(const SumCombination& comb, EvalContext& ctx) {
    return ctx.combination(comb);
}

OracleResult eval_double_oracle(Family kind, long outer, long inner, long terms,
                                mpfr_prec_t prec) {
    if (kind != Family::DOUBLE_t && kind != Family::DOUBLE_T)
        throw std::invalid_argument("eval_double_oracle: kind must be a depth-two family");
    if (outer < 2 || inner < 1)
        throw std::invalid_argument("eval_double_oracle: need outer >= 2, inner >= 1");
    if (terms < 10) throw std::invalid_argument("eval_double_oracle: need terms >= 10");

    MPFloat inner_sum(prec), tot(prec);
    for (long n1 = 2; n1 <= terms; ++n1) {
        inner_sum += MPFloat(2 * n1 - 3, prec).pow_si(-inner);
        MPFloat outer_term = (kind == Family::DOUBLE_t)
                                 ? MPFloat(2 * n1 - 1, prec).pow_si(-outer)
                                 : MPFloat(2 * n1 - 2, prec).pow_si(-outer);
        tot += outer_term * inner_sum;
    }
    if (kind == Family::DOUBLE_T) tot = tot.ldexp(2);

    // Integral-comparison bound on the dropped n1 > terms part. The inner sum
    // is bounded by (2^inner - 1) * 1.645 for inner >= 2 and by a doubled
    // logarithmic envelope for inner = 1 (the doubling absorbs the growth of
    // ln(n1) across the tail).
    MPFloat ib(prec);
    if (inner >= 2) {
        ib = MPFloat(make_rational(1645, 1000) * BigRational(pow2z(inner) - 1), prec);
    } else {
        ib = (MPFloat(4 * terms + 4, prec).log() + 2) * 2;
    }
    MPFloat outer_tail(prec);
    if (kind == Family::DOUBLE_t) {
        outer_tail = MPFloat(2 * terms - 1, prec).pow_si(1 - outer) / (2 * (outer - 1));
    } else {
        MPFloat tf(terms, prec);
        outer_tail = (tf.pow_si(-outer) + tf.pow_si(1 - outer) / (outer - 1)).ldexp(2 - outer);
    }
    MPFloat bound = ib * outer_tail;
    bound += tot.abs().ldexp(-static_cast<long>(prec - 16));
    return {tot, bound};
}

OracleResult eval_double_zeta(const Atom& a, mpfr_prec_t prec) {
    if (a.kind == AtomKind::AZETA51 || a.kind == AtomKind::AZETA71) {
        const long s = (a.kind == AtomKind::AZETA51) ? 5 : 7;
        const long N = 20000;
        MPFloat H(prec), tot(prec);
        for (long n = 2; n <= N; ++n) {
            H += MPFloat(1, prec) / (n - 1);
            MPFloat term = H * MPFloat(n, prec).pow_si(-s);
            if (n % 2 == 0)
                tot += term;
            else
                tot -= term;
        }
        H += MPFloat(1, prec) / N;
        MPFloat half_last = (H * MPFloat(N + 1, prec).pow_si(-s)) / 2;
        if ((N + 1) % 2 == 0)
            tot += half_last;
        else
            tot -= half_last;
        MPFloat bound = half_last + tot.abs().ldexp(-static_cast<long>(prec - 16));
        return {tot, bound};
    }
    if (a.kind == AtomKind::ZETA62) {
        const long N = 2000;
        MPFloat H2(prec), tot(prec);
        for (long n = 2; n <= N; ++n) {
            H2 += MPFloat(n - 1, prec).pow_si(-2);
            tot += H2 * MPFloat(n, prec).pow_si(-6);
        }
        MPFloat nf(N, prec);
        MPFloat bound = make_rational(1645, 1000) * (nf.pow_si(-5) / 5 + nf.pow_si(-6));
        bound += tot.abs().ldexp(-static_cast<long>(prec - 16));
        return {tot, bound};
    }
    throw std::invalid_argument("eval_double_zeta: unsupported atom " + atom_name(a));
}

MPFloat tail_bound(Family family, long p, long q, long n_terms, mpfr_prec_t prec) {
    if (family != Family::T_SUM && family != Family::S_SUM && family != Family::R_SUM)
        throw std::invalid_argument("tail_bound: single-sum families only");
    if (p < 1 || q < 2 || n_terms < 2)
        throw std::invalid_argument("tail_bound: need p >= 1, q >= 2, N >= 2");
    MPFloat a = (family == Family::S_SUM) ? MPFloat(n_terms, prec)
                                          : MPFloat(2 * n_terms - 1, prec) / 2;
    MPFloat base = a.pow_si(1 - q) / (q - 1);
    if (p >= 2) {
        BigRational c = make_rational(1645, 1000);
        if (family != Family::R_SUM) c *= BigRational(pow2z(p) - 1);
        return c * base;
    }
    MPFloat envelope = MPFloat(4 * n_terms + 4, prec).log() + 2;
    return envelope * base * 2;
}

long required_terms(Family family, long p, long q, const MPFloat& tol, long cap) {
    if (tol.sign() <= 0) throw std::invalid_argument("required_terms: tolerance must be positive");
    long n = 2;
    while (true) {
        if (tail_bound(family, p, q, n, tol.prec()) <= tol) return n;
        if (n > cap / 2)
            throw PrecisionUnreachable("plain summation of " +
                                       sum_index_name({family, p, q}) + " needs more than " +
                                       std::to_string(cap) + " terms for the requested tolerance");
        n *= 2;
    }
}

}  // namespace eulersum
