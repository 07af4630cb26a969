#pragma once

#include "eulersum/const_ring.hpp"
#include "eulersum/rational.hpp"

#include <string>
#include <vector>

namespace eulersum {

// Families of summed values appearing on identity left-hand sides.
//   T_SUM : T_{p,q} = sum_{n>=1} h_{n-1}^{(p)} / (n-1/2)^q
//   S_SUM : Sbar_{p,q} = sum_{n>=1} h_n^{(p)} / n^q
//   R_SUM : R_{p,q} = sum_{n>=1} H_{n-1}^{(p)} / (n-1/2)^q
//   DOUBLE_t : t(p,q) = sum_{n>m>=1} (2n-1)^{-p} (2m-1)^{-q}    (p = outer index)
//   DOUBLE_T : T(p,q) = 4 sum_{n>m>=1} (2n-2)^{-p} (2m-1)^{-q}  (p = outer index)
enum class Family : int { T_SUM = 0, S_SUM = 1, R_SUM = 2, DOUBLE_t = 3, DOUBLE_T = 4 };

struct SumIndex {
    Family family;
    long p;  // T/S/R: harmonic order; doubles: outer argument
    long q;  // T/S/R: denominator power;  doubles: inner argument

    friend auto operator<=>(const SumIndex&, const SumIndex&) = default;
};

// Throws std::invalid_argument when out of the convergence domain
// (T/S/R need p >= 1, q >= 2; doubles need outer >= 2, inner >= 1).
void validate_sum_index(const SumIndex& idx);
std::string sum_index_name(const SumIndex& idx);  // "T_{1,2}", "Sbar_{1,3}", "t(3,2)", "T(3,2)"

// Identity registry ids. Builders below construct each identity's exact
// closed-form right-hand side; lhs_spec expands the matching left-hand side.
enum class IdentityId : int {
    SYM_TS,         // symmetric T/Sbar identity
    TS1Q,           // T_{1,q} + Sbar_{1,q} closed form
    TS_Q1Q,         // m=q, p=1 specialization
    TS_Q3Q,         // m=q, p=3 specialization
    TS_Q5Q,         // m=q, p=5 specialization
    TS_QEQ_COEFF,   // m=q, odd p: explicit binomial-coefficient form
    TS_QEQ_EVEN,    // m=q, even p=2n
    TS2E2,          // q=2 even-p family
    TS_Q345,        // q=3,4,5 even-p families
    SYM_TTV,        // symmetric identity restated over double t/T values
    SYM_R,          // symmetric R identity
    R1Q,            // R_{1,q} closed form
    LA_R,           // lambda_p(R_{p,q}) closed form
    SYM_T,          // symmetric double-T identity
    LA_T,           // lambda_p(T(p,q)) closed form
    KNOWN_EVAL,     // individually evaluated sums over the extended atom set
    CONV_EGG,       // exact Genocchi-Genocchi convolution
    CONV_BGG,       // exact Bernoulli/Genocchi convolution
    PN_GENOCCHI,    // P_n(tanh t) coefficient closed form
    PMPN,           // P_m P_n linearization
};

// ---- closed-form right-hand sides (literal theorem statements) ----
ConstExpr rhs_sym_TS(long m, long p, long q);              // m,p >= 1, q >= 2
ConstExpr rhs_TS1q(long q);                                // q >= 2
ConstExpr rhs_TS_qeq(long p, long q);                      // odd p >= 1, q >= 2 (double-sum form)
ConstExpr rhs_TS_qeq_coeff(long p, long q);                // odd p >= 1, q >= 2
ConstExpr rhs_TS_q1q(long q);                              // q >= 2
ConstExpr rhs_TS_q3q(long q);                              // q >= 2
ConstExpr rhs_TS_q5q(long q);                              // q >= 2
ConstExpr rhs_TS_qeq_even(long n, long q);                 // n >= 1, q >= 2
ConstExpr rhs_TS2e2(long n);                               // n >= 1
ConstExpr rhs_TS_q345(long n, long q);                     // n >= 1, q in {3,4,5}
ConstExpr rhs_sym_R(long m, long p, long q);               // m,p >= 1, q >= 2
ConstExpr rhs_R1q(long q);                                 // q >= 2
ConstExpr rhs_la_R(long p, long q);                        // p,q >= 2
ConstExpr rhs_sym_T(long m, long p, long q);               // m,p,q >= 2
ConstExpr rhs_la_T(long p, long q);                        // p,q >= 2

// Weighted expansion of the literal left-hand side of a numeric identity into
// Euler-sum / double-value terms (like terms merged, zero coefficients dropped).
using SumCombination = std::vector<std::pair<BigRational, SumIndex>>;
SumCombination lhs_spec(IdentityId id, const std::vector<long>& params);

// The eight individually displayed sum evaluations over the extended atoms.
struct KnownEvaluation {
    std::string label;
    SumIndex index;
    ConstExpr value;
};
const std::vector<KnownEvaluation>& known_evaluations();

// Fixed regression set: every displayed numeric identity row, transcribed as
// printed (coefficient list = LHS, ConstExpr = RHS). Rows whose RHS uses only
// zeta/tbar/pi/ln2 atoms certify at full precision; rows over the extended
// atoms certify at the double-sum oracle grade.
struct PaperExample {
    std::string label;
    SumCombination lhs;
    ConstExpr rhs;
    bool oracle_grade;  // true -> extended-atom RHS, tolerance 1e-12
};
const std::vector<PaperExample>& paper_examples();

}  // namespace eulersum
