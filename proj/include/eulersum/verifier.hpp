#pragma once

#include "eulersum/engine.hpp"
#include "eulersum/identities.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace eulersum {

std::string id_name(IdentityId id);
std::optional<IdentityId> id_from_name(const std::string& name);

struct ParamSpec {
    std::string name;
    long min_value;
    long max_value;
};

struct IdentityInfo {
    IdentityId id;
    std::string name;
    bool exact;                     // exact-rational identity vs numeric residual
    std::vector<ParamSpec> schema;  // parameter order used everywhere
};

const std::vector<IdentityInfo>& registry();
const IdentityInfo& identity_info(IdentityId id);

// Default parameter grid in canonical (lexicographic, schema-order) order.
// max_weight caps m+p+q for the three-parameter symmetric families only; the
// remaining grids are fixed desk-scale choices.
std::vector<std::vector<long>> default_grid(IdentityId id, long max_weight = 12);

// Weight of the sums appearing in a numeric identity instance (0 for exact ids).
long identity_weight(IdentityId id, const std::vector<long>& params);

// Right-hand side of a numeric identity as a closed-form constant expression.
ConstExpr rhs_const_expr(IdentityId id, const std::vector<long>& params);

// Human-readable rendering of an Euler-sum combination, e.g. "3*R_{2,4} + 2*R_{3,3}".
std::string combination_to_string(const SumCombination& comb);

struct VerificationRecord {
    IdentityId id = IdentityId::SYM_TS;
    std::string label;  // set for worked-example rows; otherwise the id names the record
    std::vector<long> params;
    bool exact = false;
    long weight = 0;
    std::string lhs;
    std::string rhs;
    std::string residual;
    std::string tolerance;  // "0" for exact identities
    bool passed = false;
    bool marginal = false;  // |residual| within a factor 10 of tolerance
    bool retried = false;   // numeric failure retried once at doubled digits
    long precision_bits = 0;
    double elapsed_ms = 0.0;  // serialized only on request (determinism)
    std::string lhs_terms;
    std::string rhs_expr;
    std::string error;  // non-empty when evaluation itself failed
};

VerificationRecord verify_one(IdentityId id, const std::vector<long>& params, EvalContext& ctx);

// One record per grid point, in grid order, independent of thread count.
// Points that throw are recorded as failures; the run continues.
std::vector<VerificationRecord> verify_grid(IdentityId id,
                                            const std::vector<std::vector<long>>& grid,
                                            long digits, int threads);

// Replays the worked-example regression table (one record per displayed row,
// in table order). Oracle-grade rows use the fixed 1e-12 tolerance.
std::vector<VerificationRecord> verify_paper_examples(long digits, int threads);

struct WeightBucket {
    long passed = 0;
    long total = 0;
};

// Pass counts grouped by identity and by bucket: "exact", or parity of the
// sum weight ("odd"/"even") for numeric records.
struct WeightReport {
    std::map<std::string, std::map<std::string, WeightBucket>> by_identity;
    WeightBucket total;
};

WeightReport weight_report(const std::vector<VerificationRecord>& records);

std::string record_to_json_line(const VerificationRecord& r, bool with_timing);
std::string records_to_text(const std::vector<VerificationRecord>& rs, bool with_timing);
std::string records_to_csv(const std::vector<VerificationRecord>& rs, bool with_timing);
std::string weight_report_to_json(const WeightReport& rep);

}  // namespace eulersum
