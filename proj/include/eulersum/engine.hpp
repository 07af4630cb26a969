#pragma once

#include "eulersum/const_ring.hpp"
#include "eulersum/identities.hpp"
#include "eulersum/mpfloat.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace eulersum {

// Thrown when a requested tolerance cannot be certified within configured caps.
struct PrecisionUnreachable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Evaluation parameters derived from a decimal-digit target.
//   n_direct : terms summed directly before switching to the asymptotic tail
//   r_order  : truncation order (in 1/n) of the exact-rational asymptotic series
//   j_em     : Euler-Maclaurin terms used for Hurwitz-zeta style tails
//   nz_atoms : direct terms for zeta-atom evaluation
struct EngineParams {
    long digits = 50;
    long n_direct = 600;
    long r_order = 60;
    long j_em = 50;
    long nz_atoms = 100;
    mpfr_prec_t prec = 256;

    static EngineParams for_digits(long digits);
};

// A numeric value together with the truncation-error bound carried by the
// evaluation that produced it.
struct SumEval {
    MPFloat value;
    MPFloat bound;
};

// Result of a deliberately slow, independent evaluation path.
struct OracleResult {
    MPFloat value;
    MPFloat bound;
};

// Incrementally maintained harmonic-type numerator for the direct part of an
// Euler-sum evaluation. After n steps it holds:
//   T family: h_{n-1}^{(p)} = sum_{k<n} (k-1/2)^{-p}
//   S family: h_n^{(p)}     = sum_{k<=n} (k-1/2)^{-p}
//   R family: H_{n-1}^{(p)} = sum_{k<n} k^{-p}
class HarmonicState {
  public:
    HarmonicState(Family family, long p, mpfr_prec_t prec);

    void step();  // advance n by one in O(1)
    long n() const { return n_; }
    const MPFloat& numerator() const { return num_; }

    // Recomputes the numerator by fresh summation and throws std::logic_error
    // if the incremental value drifted beyond rounding slack.
    void self_check() const;

  private:
    MPFloat increment(long n) const;

    Family family_;
    long p_;
    long n_ = 0;
    MPFloat num_;
};

// Per-task evaluation context: fixed precision plus caches for atoms and
// Euler sums. Never share one context across threads; use clone_fresh().
class EvalContext {
  public:
    explicit EvalContext(long target_digits);

    long digits() const { return params_.digits; }
    mpfr_prec_t prec() const { return params_.prec; }
    const EngineParams& params() const { return params_; }
    EvalContext clone_fresh() const { return EvalContext(params_.digits); }

    MPFloat atom(const Atom& a);
    MPFloat euler_sum(const SumIndex& idx);
    SumEval euler_sum_detailed(const SumIndex& idx);
    MPFloat double_value(const SumIndex& idx);
    MPFloat const_expr(const ConstExpr& e);
    MPFloat combination(const SumCombination& comb);

  private:
    EngineParams params_;
    std::map<Atom, MPFloat> atom_cache_;
    std::map<SumIndex, SumEval> sum_cache_;
};

// Free-function entry points mirroring the context methods.
MPFloat eval_atom(const Atom& a, EvalContext& ctx);
MPFloat eval_euler_sum(const SumIndex& idx, EvalContext& ctx);
SumEval eval_euler_sum_detailed(const SumIndex& idx, EvalContext& ctx);
MPFloat eval_double_value(const SumIndex& idx, EvalContext& ctx);
MPFloat eval_const_expr(const ConstExpr& e, EvalContext& ctx);
MPFloat eval_combination(const SumCombination& comb, EvalContext& ctx);

// --- exact-rational asymptotic machinery (exposed for tests) ---

// (n+c)^{-e} = sum_k C(e+k-1,k)(-c)^k n^{-e-k}; index = power of 1/n.
std::vector<BigRational> pow_shift_series(const BigRational& c, long e, long r_order);
// ln(n+c) - ln(n) = -sum_{k>=1} (-c)^k / k * n^{-k}.
std::vector<BigRational> ln_shift_series(const BigRational& c, long r_order);
// Asymptotics of zeta(p, n+c) in powers of 1/n.
std::vector<BigRational> hurwitz_asym_series(long p, const BigRational& c, long r_order);
// Asymptotics of psi(n+c) - ln(n) in powers of 1/n (the ln n term is implicit).
std::vector<BigRational> psi_asym_series(const BigRational& c, long r_order);
// Cauchy product truncated at r_order.
std::vector<BigRational> mul_series(const std::vector<BigRational>& a,
                                    const std::vector<BigRational>& b, long r_order);

// zeta(s, a) and -d/ds zeta(s, a) = sum_{n>=0} ln(n+a)/(n+a)^s for integer
// s >= 2 and large a, via Euler-Maclaurin with j_terms correction terms.
MPFloat hurwitz_tail(long s, const MPFloat& a, long j_terms);
MPFloat hurwitz_log_tail(long s, const MPFloat& a, long j_terms);

// --- slow independent oracles ---

// Literal congruence-sum evaluation of a depth-two value:
//   kind = DOUBLE_t: t(outer,inner)  = sum_{n1>n2>=1} (2n1-1)^{-outer} (2n2-1)^{-inner}
//   kind = DOUBLE_T: T(outer,inner)  = 4 sum_{n1>n2>=1} (2n1-2)^{-outer} (2n2-1)^{-inner}
// Hard truncation after `terms` outer indices; the returned bound is a proven
// integral-comparison bound on the discarded tail.
OracleResult eval_double_oracle(Family kind, long outer, long inner, long terms,
                                mpfr_prec_t prec);

// Depth-two zeta-type atoms (alternating outer index uses midpoint
// acceleration; the plain one is summed directly):
//   zeta(5bar,1), zeta(7bar,1) = sum_{n>k>=1} (-1)^n n^{-s} k^{-1}
//   zeta(6,2)                  = sum_{n>k>=1} n^{-6} k^{-2}
OracleResult eval_double_zeta(const Atom& a, mpfr_prec_t prec);

// Proven upper bound on the plainly-truncated tail sum_{n>N} of the literal
// single-sum definition of the family (no Euler-Maclaurin correction).
MPFloat tail_bound(Family family, long p, long q, long n_terms, mpfr_prec_t prec);

// Smallest N (by doubling) with tail_bound <= tol; throws PrecisionUnreachable
// when N would exceed `cap`.
long required_terms(Family family, long p, long q, const MPFloat& tol,
                    long cap = 1000000000000L);

}  // namespace eulersum
