#include "eulersum/identities.hpp"

#include "eulersum/bernoulli.hpp"
#include "eulersum/lambda_op.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

namespace eulersum {

void validate_sum_index(const SumIndex& idx) {
    switch (idx.family) {
        case Family::T_SUM:
        case Family::S_SUM:
        case Family::R_SUM:
            if (idx.p < 1 || idx.q < 2)
                throw std::invalid_argument("sum index out of domain: " + sum_index_name(idx) +
                                            " needs p >= 1, q >= 2");
            return;
        case Family::DOUBLE_t:
        case Family::DOUBLE_T:
            if (idx.p < 2 || idx.q < 1)
                throw std::invalid_argument("double value out of domain: " + sum_index_name(idx) +
                                            " needs outer >= 2, inner >= 1");
            return;
    }
    throw std::logic_error("validate_sum_index: bad family");
}

std::string sum_index_name(const SumIndex& idx) {
    std::string p = std::to_string(idx.p), q = std::to_string(idx.q);
    switch (idx.family) {
        case Family::T_SUM: return "T_{" + p + "," + q + "}";
        case Family::S_SUM: return "Sbar_{" + p + "," + q + "}";
        case Family::R_SUM: return "R_{" + p + "," + q + "}";
        case Family::DOUBLE_t: return "t(" + p + "," + q + ")";
        case Family::DOUBLE_T: return "T(" + p + "," + q + ")";
    }
    throw std::logic_error("sum_index_name: bad family");
}

namespace {

BigRational rat(long n, long d = 1) { return make_rational(n, d); }

ConstExpr ce_pow(const ConstExpr& e, long n) {
    ConstExpr r(BigRational(1));
    for (long i = 0; i < n; ++i) r = r * e;
    return r;
}

// Two-parameter closed-form families the lambda operator acts on. The first
// displayed index is the one shifted by i; sign factors are re-evaluated at
// the shifted index.
ConstExpr fam_tbar_tbar(long a, long b) { return ce_tbar(a) * ce_tbar(b); }
ConstExpr fam_sgn_tbar_tbar(long a, long b) {
    return BigRational(sign_pow(a)) * (ce_tbar(a) * ce_tbar(b));
}
ConstExpr fam_sgn_tbar_zeta(long a, long b) {
    return BigRational(sign_pow(a)) * (ce_tbar(a) * ce_zeta(b));
}
ConstExpr fam_zeta_tbar(long a, long b) { return ce_zeta(a) * ce_tbar(b); }
ConstExpr fam_sgn_zeta_tbar(long a, long b) {
    return BigRational(sign_pow(a)) * (ce_zeta(a) * ce_tbar(b));
}
ConstExpr fam_even_zeta_tbar(long a, long b) {
    return BigRational(1 + sign_pow(a)) * (ce_zeta(a) * ce_tbar(b));
}

void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

ConstExpr rhs_sym_TS(long m, long p, long q) {
    require(m >= 1 && p >= 1, "rhs_sym_TS: m, p must be >= 1");
    require(q >= 2, "rhs_sym_TS: q must be >= 2");
    ConstExpr r = BigRational(sign_pow(m)) * lambda_op(p, m, q, fam_sgn_tbar_tbar);
    r += BigRational(sign_pow(p)) * lambda_op(m, p, q, fam_sgn_tbar_zeta);
    r -= lambda_op(q, m, p, fam_zeta_tbar);
    return r;
}

ConstExpr rhs_TS1q(long q) {
    require(q >= 2, "rhs_TS1q: q must be >= 2");
    ConstExpr r = rat(2) * (ce_ln2() * ce_tbar(q));
    for (long j = 1; j <= q - 2; ++j) r -= ce_zeta(q - j) * ce_tbar(j + 1);
    return r;
}

ConstExpr rhs_TS_qeq(long p, long q) {
    require(p >= 1 && p % 2 == 1, "rhs_TS_qeq: p must be odd and >= 1");
    require(q >= 2, "rhs_TS_qeq: q must be >= 2");
    ConstExpr r = BigRational(sign_pow(q)) * lambda_op(p, q, q, fam_sgn_tbar_tbar);
    for (long k = 1; k <= q / 2; ++k) {
        r -= rat(2) * BigRational(binom(p - 2 + 2 * k, p - 1) * binom(2 * q - 1 - 2 * k, q - 2 * k)) *
             (ce_tbar(p - 1 + 2 * k) * ce_zeta(2 * q - 2 * k));
    }
    return r;
}

ConstExpr rhs_TS_qeq_coeff(long p, long q) {
    require(p >= 1 && p % 2 == 1, "rhs_TS_qeq_coeff: p must be odd and >= 1");
    require(q >= 2, "rhs_TS_qeq_coeff: q must be >= 2");
    ConstExpr r;
    for (long i = 0; i <= p - 1; ++i) {
        if ((q + i) % 2 == 0) continue;
        r += BigRational(sign_pow(q - 1)) *
             BigRational(binom(q + i - 1, i) * binom(p + q - 2 - i, p - 1 - i)) *
             (ce_tbar(q + i) * ce_tbar(p + q - 1 - i));
    }
    long w = p - 1 + 2 * q;
    BigRational coeff = BigRational(sign_pow((p - 1) / 2)) * BigRational(binom(p - 2 + 2 * q, p - 1)) *
                        genocchi(w) * BigRational(pow2z(w)) /
                        (BigRational(8) * BigRational(factorial(w)));
    r += coeff * ce_pi_pow(w);
    return r;
}

ConstExpr rhs_TS_q1q(long q) {
    require(q >= 2, "rhs_TS_q1q: q must be >= 2");
    ConstExpr r = ce_tbar(q) * ce_tbar(q);
    for (long k = 1; k <= q / 2; ++k) {
        r -= rat(2) * BigRational(binom(2 * q - 1 - 2 * k, q - 2 * k)) *
             (ce_tbar(2 * k) * ce_zeta(2 * q - 2 * k));
    }
    return r;
}

ConstExpr rhs_TS_q3q(long q) {
    require(q >= 2, "rhs_TS_q3q: q must be >= 2");
    ConstExpr r = rat(q * (q + 1)) * (ce_tbar(q) * ce_tbar(q + 2));
    r -= rat(q * q) * (ce_tbar(q + 1) * ce_tbar(q + 1));
    for (long k = 1; k <= q / 2; ++k) {
        r -= rat(2) * BigRational(binom(2 * k + 1, 2) * binom(2 * q - 1 - 2 * k, q - 2 * k)) *
             (ce_tbar(2 * k + 2) * ce_zeta(2 * q - 2 * k));
    }
    return r;
}

ConstExpr rhs_TS_q5q(long q) {
    require(q >= 2, "rhs_TS_q5q: q must be >= 2");
    ConstExpr r = rat(2) * BigRational(binom(q + 3, 4)) * (ce_tbar(q) * ce_tbar(q + 4));
    r -= rat(2 * q) * BigRational(binom(q + 2, 3)) * (ce_tbar(q + 1) * ce_tbar(q + 3));
    r += BigRational(binom(q + 1, 2) * binom(q + 1, 2)) * (ce_tbar(q + 2) * ce_tbar(q + 2));
    for (long k = 1; k <= q / 2; ++k) {
        r -= rat(2) * BigRational(binom(2 * k + 3, 4) * binom(2 * q - 1 - 2 * k, q - 2 * k)) *
             (ce_tbar(2 * k + 4) * ce_zeta(2 * q - 2 * k));
    }
    return r;
}

ConstExpr rhs_TS_qeq_even(long n, long q) {
    require(n >= 1, "rhs_TS_qeq_even: n must be >= 1");
    require(q >= 2, "rhs_TS_qeq_even: q must be >= 2");
    ConstExpr r;
    for (long i = 1; i <= q - 1; i += 2) {
        long j = q - 1 - i;
        r -= rat(2) * BigRational(binom(2 * n + i - 1, i) * binom(q + j - 1, j)) *
             (ce_tbar(2 * n + i) * ce_zeta(q + j));
    }
    return r;
}

ConstExpr rhs_TS2e2(long n) {
    require(n >= 1, "rhs_TS2e2: n must be >= 1");
    return rat(4 * n) * (ce_zeta(2) * ce_tbar(2 * n + 1));
}

ConstExpr rhs_TS_q345(long n, long q) {
    require(n >= 1, "rhs_TS_q345: n must be >= 1");
    switch (q) {
        case 3:
            return rat(-12 * n) * (ce_zeta(4) * ce_tbar(2 * n + 1));
        case 4:
            return rat(40 * n) * (ce_zeta(6) * ce_tbar(2 * n + 1)) +
                   rat((2 * n + 2) * (2 * n + 1) * (2 * n), 3) * (ce_zeta(4) * ce_tbar(2 * n + 3));
        case 5:
            return rat(-140 * n) * (ce_zeta(8) * ce_tbar(2 * n + 1)) -
                   rat(5 * (2 * n + 2) * (2 * n + 1) * (2 * n), 3) * (ce_zeta(6) * ce_tbar(2 * n + 3));
        default:
            throw std::invalid_argument("rhs_TS_q345: q must be 3, 4, or 5");
    }
}

ConstExpr rhs_sym_R(long m, long p, long q) {
    require(m >= 1 && p >= 1, "rhs_sym_R: m, p must be >= 1");
    require(q >= 2, "rhs_sym_R: q must be >= 2");
    ConstExpr r = BigRational(binom(m + p + q - 2, q - 1)) * ce_tbar(m + p + q - 1);
    r += BigRational(sign_pow(m)) * lambda_op(p, m, q, fam_sgn_zeta_tbar);
    r += BigRational(sign_pow(p)) * lambda_op(m, p, q, fam_sgn_zeta_tbar);
    r -= lambda_op(q, m, p, fam_tbar_tbar);
    return r;
}

ConstExpr rhs_R1q(long q) {
    require(q >= 2, "rhs_R1q: q must be >= 2");
    ConstExpr r = rat(q, 2) * ce_tbar(q + 1);
    r -= rat(2) * (ce_ln2() * ce_tbar(q));
    for (long j = 1; j <= q - 2; ++j) r -= rat(1, 2) * (ce_tbar(q - j) * ce_tbar(j + 1));
    return r;
}

ConstExpr rhs_la_R(long p, long q) {
    require(p >= 2 && q >= 2, "rhs_la_R: p, q must be >= 2");
    ConstExpr inner = BigRational(binom(2 * p + q - 2, q - 1)) * ce_tbar(2 * p + q - 1);
    inner -= lambda_op(q, p, p, fam_tbar_tbar);
    ConstExpr r = make_rational(sign_pow(p - 1), 2) * inner;
    r -= lambda_op(p, p, q, fam_sgn_zeta_tbar);
    return r;
}

ConstExpr rhs_sym_T(long m, long p, long q) {
    require(m >= 2 && p >= 2 && q >= 2, "rhs_sym_T: m, p, q must be >= 2");
    ConstExpr r = BigRational(binom(m + p + q - 2, q - 1)) * ce_tbar(m + p + q - 1);
    r += BigRational(sign_pow(m)) * lambda_op(p, m, q, fam_even_zeta_tbar);
    r += BigRational(sign_pow(p)) * lambda_op(m, p, q, fam_even_zeta_tbar);
    r -= lambda_op(q, m, p, fam_tbar_tbar);
    return r;
}

ConstExpr rhs_la_T(long p, long q) {
    require(p >= 2 && q >= 2, "rhs_la_T: p, q must be >= 2");
    long w2 = 2 * p + q;
    BigRational sp = BigRational(sign_pow(p)) * pow2q(-(w2 - 2));
    ConstExpr r = sp * BigRational(binom(w2 - 2, q - 1)) * ce_tbar(w2 - 1);
    r += pow2q(-(w2 - 3)) * lambda_op(p, p, q, fam_even_zeta_tbar);
    r -= sp * lambda_op(q, p, p, fam_tbar_tbar);
    return r;
}

namespace {

class Combination {
  public:
    void add(const BigRational& c, Family f, long a, long b) {
        SumIndex idx{f, a, b};
        validate_sum_index(idx);
        auto it = terms_.find(idx);
        if (it == terms_.end()) {
            terms_.emplace(idx, c);
        } else {
            it->second += c;
        }
    }

    // lambda_r over family f at base (a0, b0), scaled by `outer`.
    void add_lambda(const BigRational& outer, long r, long a0, long b0, Family f) {
        for (long i = 0; i <= r - 1; ++i) {
            long j = r - 1 - i;
            add(outer * BigRational(binom(a0 + i - 1, i) * binom(b0 + j - 1, j)), f, a0 + i, b0 + j);
        }
    }

    SumCombination finish() const {
        SumCombination out;
        for (const auto& [idx, c] : terms_) {
            if (c != 0) out.emplace_back(c, idx);
        }
        return out;
    }

  private:
    std::map<SumIndex, BigRational> terms_;
};

void require_params(const std::vector<long>& params, size_t n, const char* id) {
    if (params.size() != n)
        throw std::invalid_argument(std::string(id) + ": expected " + std::to_string(n) + " parameters");
}

}  // namespace

SumCombination lhs_spec(IdentityId id, const std::vector<long>& params) {
    Combination c;
    switch (id) {
        case IdentityId::SYM_TS: {
            require_params(params, 3, "SYM_TS");
            long m = params[0], p = params[1], q = params[2];
            rhs_sym_TS(m, p, q);  // reuse the builder's domain checks
            c.add_lambda(BigRational(sign_pow(m - 1)), p, m, q, Family::T_SUM);
            c.add_lambda(BigRational(sign_pow(p - 1)), m, p, q, Family::S_SUM);
            break;
        }
        case IdentityId::TS1Q: {
            require_params(params, 1, "TS1Q");
            long q = params[0];
            rhs_TS1q(q);
            c.add(BigRational(1), Family::T_SUM, 1, q);
            c.add(BigRational(1), Family::S_SUM, 1, q);
            break;
        }
        case IdentityId::TS_Q1Q: {
            require_params(params, 1, "TS_Q1Q");
            long q = params[0];
            rhs_TS_q1q(q);
            c.add(BigRational(sign_pow(q - 1)), Family::T_SUM, q, q);
            c.add_lambda(BigRational(1), q, 1, q, Family::S_SUM);
            break;
        }
        case IdentityId::TS_Q3Q: {
            require_params(params, 1, "TS_Q3Q");
            long q = params[0];
            rhs_TS_q3q(q);
            c.add_lambda(BigRational(sign_pow(q - 1)), 3, q, q, Family::T_SUM);
            c.add_lambda(BigRational(1), q, 3, q, Family::S_SUM);
            break;
        }
        case IdentityId::TS_Q5Q: {
            require_params(params, 1, "TS_Q5Q");
            long q = params[0];
            rhs_TS_q5q(q);
            c.add_lambda(BigRational(sign_pow(q - 1)), 5, q, q, Family::T_SUM);
            c.add_lambda(BigRational(1), q, 5, q, Family::S_SUM);
            break;
        }
        case IdentityId::TS_QEQ_COEFF: {
            require_params(params, 2, "TS_QEQ_COEFF");
            long p = params[0], q = params[1];
            rhs_TS_qeq_coeff(p, q);
            c.add_lambda(BigRational(sign_pow(q - 1)), p, q, q, Family::T_SUM);
            c.add_lambda(BigRational(1), q, p, q, Family::S_SUM);
            break;
        }
        case IdentityId::TS_QEQ_EVEN: {
            require_params(params, 2, "TS_QEQ_EVEN");
            long n = params[0], q = params[1];
            rhs_TS_qeq_even(n, q);
            c.add_lambda(BigRational(sign_pow(q - 1)), 2 * n, q, q, Family::T_SUM);
            c.add_lambda(BigRational(-1), q, 2 * n, q, Family::S_SUM);
            break;
        }
        case IdentityId::TS2E2: {
            require_params(params, 1, "TS2E2");
            long n = params[0];
            rhs_TS2e2(n);
            c.add_lambda(BigRational(1), 2 * n, 2, 2, Family::T_SUM);
            c.add_lambda(BigRational(1), 2, 2 * n, 2, Family::S_SUM);
            break;
        }
        case IdentityId::TS_Q345: {
            require_params(params, 2, "TS_Q345");
            long n = params[0], q = params[1];
            rhs_TS_q345(n, q);
            c.add_lambda(BigRational(1), 2 * n, q, q, Family::T_SUM);
            c.add_lambda(BigRational(sign_pow(q)), q, 2 * n, q, Family::S_SUM);
            break;
        }
        case IdentityId::SYM_TTV: {
            require_params(params, 3, "SYM_TTV");
            long m = params[0], p = params[1], q = params[2];
            rhs_sym_TS(m, p, q);
            long w = m + p + q;
            c.add_lambda(BigRational(sign_pow(m - 1)) * BigRational(pow2z(w - 1)), p, q, m,
                         Family::DOUBLE_t);
            c.add_lambda(BigRational(sign_pow(p - 1)) * BigRational(pow2z(w - 3)), m, q, p,
                         Family::DOUBLE_T);
            break;
        }
        case IdentityId::SYM_R: {
            require_params(params, 3, "SYM_R");
            long m = params[0], p = params[1], q = params[2];
            rhs_sym_R(m, p, q);
            c.add_lambda(BigRational(sign_pow(m - 1)), p, m, q, Family::R_SUM);
            c.add_lambda(BigRational(sign_pow(p - 1)), m, p, q, Family::R_SUM);
            break;
        }
        case IdentityId::R1Q: {
            require_params(params, 1, "R1Q");
            long q = params[0];
            rhs_R1q(q);
            c.add(BigRational(1), Family::R_SUM, 1, q);
            break;
        }
        case IdentityId::LA_R: {
            require_params(params, 2, "LA_R");
            long p = params[0], q = params[1];
            rhs_la_R(p, q);
            c.add_lambda(BigRational(1), p, p, q, Family::R_SUM);
            break;
        }
        case IdentityId::SYM_T: {
            require_params(params, 3, "SYM_T");
            long m = params[0], p = params[1], q = params[2];
            rhs_sym_T(m, p, q);
            BigRational scale(pow2z(m + p + q - 3));
            c.add_lambda(BigRational(sign_pow(m)) * scale, p, m, q, Family::DOUBLE_T);
            c.add_lambda(BigRational(sign_pow(p)) * scale, m, p, q, Family::DOUBLE_T);
            break;
        }
        case IdentityId::LA_T: {
            require_params(params, 2, "LA_T");
            long p = params[0], q = params[1];
            rhs_la_T(p, q);
            c.add_lambda(BigRational(1), p, p, q, Family::DOUBLE_T);
            break;
        }
        case IdentityId::KNOWN_EVAL: {
            require_params(params, 1, "KNOWN_EVAL");
            long label = params[0];
            const auto& table = known_evaluations();
            if (label < 0 || label >= static_cast<long>(table.size()))
                throw std::invalid_argument("KNOWN_EVAL: label out of range 0..7");
            const auto& ke = table[label];
            c.add(BigRational(1), ke.index.family, ke.index.p, ke.index.q);
            break;
        }
        default:
            throw std::invalid_argument("lhs_spec: identity has no Euler-sum left-hand side");
    }
    return c.finish();
}

const std::vector<KnownEvaluation>& known_evaluations() {
    static const std::vector<KnownEvaluation> table = [] {
        std::vector<KnownEvaluation> t;
        ConstExpr li4 = ConstExpr::atom(li4half_atom());
        ConstExpr zb51 = ConstExpr::atom(azeta51_atom());
        ConstExpr zb71 = ConstExpr::atom(azeta71_atom());
        ConstExpr z62 = ConstExpr::atom(zeta62_atom());
        ConstExpr L = ce_ln2();
        auto z = [](long s) { return ce_zeta(s); };
        auto P = [](long k) { return ce_pi_pow(k); };

        t.push_back({"T_{1,3}", {Family::T_SUM, 1, 3},
                     rat(-16) * li4 - rat(2, 3) * ce_pow(L, 4) + rat(2, 3) * (P(2) * ce_pow(L, 2)) +
                         rat(23, 360) * P(4)});
        t.push_back({"T_{1,5}", {Family::T_SUM, 1, 5},
                     rat(-32) * zb51 + rat(62) * (L * z(5)) + rat(17, 2) * (z(3) * z(3)) -
                         rat(73, 1260) * P(6)});
        t.push_back({"Sbar_{1,3}", {Family::S_SUM, 1, 3},
                     rat(16) * li4 + rat(14) * (L * z(3)) + rat(2, 3) * ce_pow(L, 4) -
                         rat(2, 3) * (P(2) * ce_pow(L, 2)) - rat(53, 360) * P(4)});
        t.push_back({"Sbar_{1,5}", {Family::S_SUM, 1, 5},
                     rat(32) * zb51 - rat(31, 2) * (z(3) * z(3)) + rat(31, 1260) * P(6)});
        t.push_back({"R_{2,4}", {Family::R_SUM, 2, 4},
                     rat(128) * zb51 + z(3) * z(3) - rat(1, 210) * P(6)});
        t.push_back({"R_{3,3}", {Family::R_SUM, 3, 3},
                     rat(-192) * zb51 + rat(109, 2) * (z(3) * z(3)) - rat(8, 105) * P(6)});
        t.push_back({"R_{2,6}", {Family::R_SUM, 2, 6},
                     rat(768) * zb71 + rat(289) * z62 - rat(864) * (z(3) * z(5)) +
                         rat(59, 525) * P(8)});
        t.push_back({"R_{3,5}", {Family::R_SUM, 3, 5},
                     rat(-1920) * zb71 - rat(1445, 2) * z62 + rat(3059) * (z(3) * z(5)) -
                         rat(2011, 5040) * P(8)});
        return t;
    }();
    return table;
}

const std::vector<PaperExample>& paper_examples() {
    static const std::vector<PaperExample> table = [] {
        std::vector<PaperExample> t;
        auto z = [](long s) { return ce_zeta(s); };
        auto P = [](long k) { return ce_pi_pow(k); };
        ConstExpr L = ce_ln2();
        auto row = [&t](const std::string& label,
                        std::vector<std::tuple<long, Family, long, long>> lhs, ConstExpr rhs) {
            SumCombination comb;
            for (const auto& [c, f, a, b] : lhs) {
                SumIndex idx{f, a, b};
                validate_sum_index(idx);
                comb.emplace_back(BigRational(c), idx);
            }
            t.push_back({label, std::move(comb), std::move(rhs), false});
        };
        constexpr Family T = Family::T_SUM, S = Family::S_SUM, R = Family::R_SUM,
                         TT = Family::DOUBLE_T;

        row("TS1Q.q2", {{1, T, 1, 2}, {1, S, 1, 2}}, P(2) * L);
        row("TS1Q.q3", {{1, T, 1, 3}, {1, S, 1, 3}}, rat(14) * (L * z(3)) - rat(1, 12) * P(4));
        row("TS1Q.q4", {{1, T, 1, 4}, {1, S, 1, 4}},
            rat(-5, 3) * (P(2) * z(3)) + rat(1, 3) * (P(4) * L));
        row("TS1Q.q5", {{1, T, 1, 5}, {1, S, 1, 5}},
            rat(62) * (L * z(5)) - rat(7) * (z(3) * z(3)) - rat(1, 30) * P(6));
        row("TSQ1Q.q2", {{1, T, 2, 2}, {-2, S, 1, 3}, {-1, S, 2, 2}}, rat(-1, 12) * P(4));
        row("TSQ1Q.q3", {{1, T, 3, 3}, {6, S, 1, 5}, {3, S, 2, 4}, {1, S, 3, 3}},
            rat(49) * (z(3) * z(3)) - rat(1, 30) * P(6));
        row("TSQ1Q.q4",
            {{1, T, 4, 4}, {-20, S, 1, 7}, {-10, S, 2, 6}, {-4, S, 3, 5}, {-1, S, 4, 4}},
            rat(-17, 1260) * P(8));
        row("TSQ1Q.q5",
            {{1, T, 5, 5}, {70, S, 1, 9}, {35, S, 2, 8}, {15, S, 3, 7}, {5, S, 4, 6}, {1, S, 5, 5}},
            rat(961) * (z(5) * z(5)) - rat(31, 5670) * P(10));
        row("TSQ1Q.q6",
            {{1, T, 6, 6},
             {-252, S, 1, 11},
             {-126, S, 2, 10},
             {-56, S, 3, 9},
             {-21, S, 4, 8},
             {-6, S, 5, 7},
             {-1, S, 6, 6}},
            rat(-691, 311850) * P(12));
        row("TSQ3Q.q2", {{3, T, 2, 4}, {4, T, 3, 3}, {3, T, 4, 2}, {-2, S, 3, 3}, {-3, S, 4, 2}},
            rat(196) * (z(3) * z(3)) - rat(1, 3) * P(6));
        row("TSQ3Q.q3",
            {{2, T, 3, 5}, {3, T, 4, 4}, {2, T, 5, 3}, {2, S, 3, 5}, {3, S, 4, 4}, {2, S, 5, 3}},
            rat(868) * (z(3) * z(5)) - rat(17, 180) * P(8));
        row("TSQ3Q.q4",
            {{5, T, 4, 6},
             {8, T, 5, 5},
             {5, T, 6, 4},
             {-10, S, 3, 7},
             {-15, S, 4, 6},
             {-12, S, 5, 5},
             {-5, S, 6, 4}},
            rat(7688) * (z(5) * z(5)) - rat(31, 315) * P(10));
        row("TSQ5Q.q2",
            {{5, T, 2, 6},
             {8, T, 3, 5},
             {9, T, 4, 4},
             {8, T, 5, 3},
             {5, T, 6, 2},
             {-2, S, 5, 3},
             {-5, S, 6, 2}},
            rat(3472) * (z(3) * z(5)) - rat(17, 36) * P(8));
        row("TSQ5Q.q3",
            {{5, T, 3, 7},
             {10, T, 4, 6},
             {12, T, 5, 5},
             {10, T, 6, 4},
             {5, T, 7, 3},
             {2, S, 5, 5},
             {5, S, 6, 4},
             {5, S, 7, 3}},
            rat(8890) * (z(3) * z(7)) + rat(11532) * (z(5) * z(5)) - rat(31, 135) * P(10));
        row("ODD.213", {{1, T, 2, 3}, {-3, S, 1, 4}, {-1, S, 2, 3}}, rat(-5, 6) * (P(2) * z(3)));
        row("ODD.312", {{1, T, 3, 2}, {3, S, 1, 4}, {2, S, 2, 3}, {1, S, 3, 2}},
            rat(19, 6) * (P(2) * z(3)));
        row("TS2E2.n1", {{1, T, 2, 3}, {1, T, 3, 2}, {1, S, 2, 3}, {1, S, 3, 2}},
            rat(7, 3) * (P(2) * z(3)));
        row("TS2E2.n2",
            {{2, T, 2, 5}, {3, T, 3, 4}, {3, T, 4, 3}, {2, T, 5, 2}, {1, S, 4, 3}, {2, S, 5, 2}},
            rat(62, 3) * (P(2) * z(5)));
        row("TS2E2.n3",
            {{3, T, 2, 7},
             {5, T, 3, 6},
             {6, T, 4, 5},
             {6, T, 5, 4},
             {5, T, 6, 3},
             {3, T, 7, 2},
             {1, S, 6, 3},
             {3, S, 7, 2}},
            rat(127) * (P(2) * z(7)));
        row("Q345.323", {{1, T, 3, 4}, {1, T, 4, 3}, {-2, S, 2, 5}, {-2, S, 3, 4}, {-1, S, 4, 3}},
            rat(-14, 45) * (P(4) * z(3)));
        row("Q345.343",
            {{5, T, 3, 6},
             {9, T, 4, 5},
             {9, T, 5, 4},
             {5, T, 6, 3},
             {-3, S, 4, 5},
             {-6, S, 5, 4},
             {-5, S, 6, 3}},
            rat(-62, 15) * (P(4) * z(5)));
        row("Q345.424",
            {{1, T, 4, 5}, {1, T, 5, 4}, {5, S, 2, 7}, {5, S, 3, 6}, {3, S, 4, 5}, {1, S, 5, 4}},
            rat(31, 45) * (P(4) * z(5)) + rat(2, 27) * (P(6) * z(3)));
        row("Q345.525",
            {{1, T, 5, 6},
             {1, T, 6, 5},
             {-14, S, 2, 9},
             {-14, S, 3, 8},
             {-9, S, 4, 7},
             {-4, S, 5, 6},
             {-1, S, 6, 5}},
            rat(-248, 945) * (P(6) * z(5)) - rat(14, 675) * (P(8) * z(3)));
        row("R1Q.q2", {{1, R, 1, 2}}, rat(7) * z(3) - P(2) * L);
        row("R1Q.q3", {{1, R, 1, 3}}, rat(-14) * (L * z(3)) + rat(1, 8) * P(4));
        row("R1Q.q4", {{1, R, 1, 4}},
            rat(62) * z(5) - rat(7, 2) * (P(2) * z(3)) - rat(1, 3) * (P(4) * L));
        row("R1Q.q5", {{1, R, 1, 5}},
            rat(-62) * (L * z(5)) - rat(49, 2) * (z(3) * z(3)) + rat(1, 12) * P(6));
        row("R.223", {{3, R, 2, 4}, {2, R, 3, 3}}, rat(112) * (z(3) * z(3)) - rat(1, 6) * P(6));
        row("R.225", {{5, R, 2, 6}, {2, R, 3, 5}}, rat(1798) * (z(3) * z(5)) - rat(17, 72) * P(8));
        row("R.335", {{5, R, 3, 7}, {5, R, 4, 6}, {2, R, 5, 5}},
            rat(-3810) * (z(3) * z(7)) - rat(5704) * (z(5) * z(5)) + rat(31, 270) * P(10));
        row("R.445", {{7, R, 4, 8}, {12, R, 5, 7}, {10, R, 6, 6}, {4, R, 7, 5}},
            rat(64640) * (z(5) * z(7)) - rat(691, 9450) * P(12));
        row("R.238", {{9, R, 2, 10}, {2, R, 3, 9}},
            rat(58254) * (z(3) * z(9)) + rat(94488) * (z(5) * z(7)) - rat(691, 3780) * P(12));
        row("R.456", {{42, R, 4, 10}, {56, R, 5, 9}, {35, R, 6, 8}, {10, R, 7, 7}},
            rat(1802808) * (z(5) * z(9)) + rat(1614170) * (z(7) * z(7)) -
                rat(5461, 14175) * P(14));
        row("R.542", {{5, R, 4, 6}, {12, R, 5, 5}, {15, R, 6, 4}, {10, R, 7, 3}},
            rat(70) * (z(3) * z(7)) + rat(4216) * (z(5) * z(5)) - rat(31, 630) * P(10));
        row("R.562", {{3, R, 5, 7}, {10, R, 6, 6}, {18, R, 7, 5}, {21, R, 8, 4}, {14, R, 9, 3}},
            rat(-10872) * (z(5) * z(7)) + rat(98) * (z(3) * z(9)) + rat(691, 56700) * P(12));
        row("TT.542", {{5, TT, 4, 6}, {12, TT, 5, 5}, {15, TT, 6, 4}, {10, TT, 7, 3}},
            rat(-961, 64) * (z(5) * z(5)) + rat(1, 4608) * P(10));
        row("TT.562",
            {{3, TT, 5, 7}, {10, TT, 6, 6}, {18, TT, 7, 5}, {21, TT, 8, 4}, {14, TT, 9, 3}},
            rat(11811, 1024) * (z(5) * z(7)) - rat(1, 92160) * P(12));

        for (const auto& ke : known_evaluations()) {
            t.push_back({"KE." + ke.label, {{BigRational(1), ke.index}}, ke.value, true});
        }
        return t;
    }();
    return table;
}

}  // namespace eulersum
