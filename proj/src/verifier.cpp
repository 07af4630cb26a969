#include "eulersum/verifier.hpp"

#include "eulersum/exact_kernel.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace eulersum {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr long kNoCap = std::numeric_limits<long>::max();

const std::vector<IdentityInfo>& registry_impl() {
    static const std::vector<IdentityInfo> reg = {
        {IdentityId::SYM_TS, "SYM_TS", false,
         {{"m", 1, kNoCap}, {"p", 1, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::TS1Q, "TS1Q", false, {{"q", 2, kNoCap}}},
        {IdentityId::TS_Q1Q, "TS_Q1Q", false, {{"q", 2, kNoCap}}},
        {IdentityId::TS_Q3Q, "TS_Q3Q", false, {{"q", 2, kNoCap}}},
        {IdentityId::TS_Q5Q, "TS_Q5Q", false, {{"q", 2, kNoCap}}},
        {IdentityId::TS_QEQ_COEFF, "TS_QEQ_COEFF", false, {{"p", 1, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::TS_QEQ_EVEN, "TS_QEQ_EVEN", false, {{"n", 1, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::TS2E2, "TS2E2", false, {{"n", 1, kNoCap}}},
        {IdentityId::TS_Q345, "TS_Q345", false, {{"n", 1, kNoCap}, {"q", 3, 5}}},
        {IdentityId::SYM_TTV, "SYM_TTV", false,
         {{"m", 1, kNoCap}, {"p", 1, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::SYM_R, "SYM_R", false,
         {{"m", 1, kNoCap}, {"p", 1, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::R1Q, "R1Q", false, {{"q", 2, kNoCap}}},
        {IdentityId::LA_R, "LA_R", false, {{"p", 2, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::SYM_T, "SYM_T", false,
         {{"m", 2, kNoCap}, {"p", 2, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::LA_T, "LA_T", false, {{"p", 2, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::KNOWN_EVAL, "KNOWN_EVAL", false, {{"label", 0, 7}}},
        {IdentityId::CONV_EGG, "CONV_EGG", true,
         {{"n", 0, kNoCap},
          {"alpha", 0, kNoCap},
          {"gamma", 0, kNoCap},
          {"delta", 0, 1},
          {"epsilon", 0, 1}}},
        {IdentityId::CONV_BGG, "CONV_BGG", true, {{"n", 0, kNoCap}, {"q", 2, kNoCap}}},
        {IdentityId::PN_GENOCCHI, "PN_GENOCCHI", true, {{"n", 0, kNoCap}, {"k", 0, kNoCap}}},
        {IdentityId::PMPN, "PMPN", true,
         {{"m", 0, kNoCap}, {"n", 0, kNoCap}, {"order", 1, kNoCap}}},
    };
    return reg;
}

void check_schema(const IdentityInfo& info, const std::vector<long>& params) {
    if (params.size() != info.schema.size())
        throw std::invalid_argument(info.name + ": expected " +
                                    std::to_string(info.schema.size()) + " parameters, got " +
                                    std::to_string(params.size()));
    for (size_t i = 0; i < params.size(); ++i) {
        const auto& s = info.schema[i];
        if (params[i] < s.min_value || params[i] > s.max_value)
            throw std::invalid_argument(info.name + ": parameter " + s.name + "=" +
                                        std::to_string(params[i]) + " out of range");
    }
}

std::string to_sig_string(const MPFloat& v, long digits) { return v.to_string(digits); }

}  // namespace

const std::vector<IdentityInfo>& registry() { return registry_impl(); }

const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : registry_impl())
        if (info.id == id) return info;
    throw std::logic_error("identity_info: unknown id");
}

std::string id_name(IdentityId id) { return identity_info(id).name; }

std::optional<IdentityId> id_from_name(const std::string& name) {
    for (const auto& info : registry_impl())
        if (info.name == name) return info.id;
    return std::nullopt;
}

long identity_weight(IdentityId id, const std::vector<long>& p) {
    switch (id) {
        case IdentityId::SYM_TS:
        case IdentityId::SYM_TTV:
        case IdentityId::SYM_R:
        case IdentityId::SYM_T:
            return p.at(0) + p.at(1) + p.at(2) - 1;
        case IdentityId::TS1Q:
        case IdentityId::R1Q:
            return p.at(0) + 1;
        case IdentityId::TS_Q1Q:
            return 2 * p.at(0);
        case IdentityId::TS_Q3Q:
            return 2 * p.at(0) + 2;
        case IdentityId::TS_Q5Q:
            return 2 * p.at(0) + 4;
        case IdentityId::TS_QEQ_COEFF:
            return p.at(0) + 2 * p.at(1) - 1;
        case IdentityId::TS_QEQ_EVEN:
        case IdentityId::TS_Q345:
            return 2 * p.at(0) + 2 * p.at(1) - 1;
        case IdentityId::TS2E2:
            return 2 * p.at(0) + 3;
        case IdentityId::LA_R:
        case IdentityId::LA_T:
            return 2 * p.at(0) + p.at(1) - 1;
        case IdentityId::KNOWN_EVAL: {
            const auto& table = known_evaluations();
            const auto& ke = table.at(static_cast<size_t>(p.at(0)));
            return ke.index.p + ke.index.q;
        }
        default:
            return 0;
    }
}

ConstExpr rhs_const_expr(IdentityId id, const std::vector<long>& p) {
    check_schema(identity_info(id), p);
    switch (id) {
        case IdentityId::SYM_TS: return rhs_sym_TS(p[0], p[1], p[2]);
        case IdentityId::TS1Q: return rhs_TS1q(p[0]);
        case IdentityId::TS_Q1Q: return rhs_TS_q1q(p[0]);
        case IdentityId::TS_Q3Q: return rhs_TS_q3q(p[0]);
        case IdentityId::TS_Q5Q: return rhs_TS_q5q(p[0]);
        case IdentityId::TS_QEQ_COEFF: return rhs_TS_qeq_coeff(p[0], p[1]);
        case IdentityId::TS_QEQ_EVEN: return rhs_TS_qeq_even(p[0], p[1]);
        case IdentityId::TS2E2: return rhs_TS2e2(p[0]);
        case IdentityId::TS_Q345: return rhs_TS_q345(p[0], p[1]);
        case IdentityId::SYM_TTV: return rhs_sym_TS(p[0], p[1], p[2]);
        case IdentityId::SYM_R: return rhs_sym_R(p[0], p[1], p[2]);
        case IdentityId::R1Q: return rhs_R1q(p[0]);
        case IdentityId::LA_R: return rhs_la_R(p[0], p[1]);
        case IdentityId::SYM_T: return rhs_sym_T(p[0], p[1], p[2]);
        case IdentityId::LA_T: return rhs_la_T(p[0], p[1]);
        case IdentityId::KNOWN_EVAL:
            return known_evaluations().at(static_cast<size_t>(p[0])).value;
        default:
            throw std::invalid_argument(id_name(id) + " has no constant-expression side");
    }
}

std::string combination_to_string(const SumCombination& comb) {
    if (comb.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [c, idx] : comb) {
        const bool neg = c < 0;
        BigRational a = abs(c);
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (a != 1) out += to_string(a) + "*";
        out += sum_index_name(idx);
    }
    return out;
}

std::vector<std::vector<long>> default_grid(IdentityId id, long max_weight) {
    std::vector<std::vector<long>> grid;
    auto triples = [&](long lo_m, long lo_p, long lo_q) {
        for (long m = lo_m; m + lo_p + lo_q <= max_weight; ++m)
            for (long p = lo_p; m + p + lo_q <= max_weight; ++p)
                for (long q = lo_q; m + p + q <= max_weight; ++q) grid.push_back({m, p, q});
    };
    switch (id) {
        case IdentityId::SYM_TS:
        case IdentityId::SYM_TTV:
        case IdentityId::SYM_R:
            triples(1, 1, 2);
            break;
        case IdentityId::SYM_T:
            triples(2, 2, 2);
            break;
        case IdentityId::TS1Q:
        case IdentityId::R1Q:
            for (long q = 2; q <= 8; ++q) grid.push_back({q});
            break;
        case IdentityId::TS_Q1Q:
        case IdentityId::TS_Q3Q:
            for (long q = 2; q <= 6; ++q) grid.push_back({q});
            break;
        case IdentityId::TS_Q5Q:
            for (long q = 2; q <= 5; ++q) grid.push_back({q});
            break;
        case IdentityId::TS_QEQ_COEFF:
            for (long p = 1; p <= 7; p += 2)
                for (long q = 2; q <= 6; ++q) grid.push_back({p, q});
            break;
        case IdentityId::TS_QEQ_EVEN:
            for (long n = 1; n <= 3; ++n)
                for (long q = 2; q <= 5; ++q) grid.push_back({n, q});
            break;
        case IdentityId::TS2E2:
            for (long n = 1; n <= 4; ++n) grid.push_back({n});
            break;
        case IdentityId::TS_Q345:
            for (long n = 1; n <= 3; ++n)
                for (long q = 3; q <= 5; ++q) grid.push_back({n, q});
            break;
        case IdentityId::LA_R:
        case IdentityId::LA_T:
            for (long p = 2; p <= 4; ++p)
                for (long q = 2; q <= 4; ++q) grid.push_back({p, q});
            break;
        case IdentityId::KNOWN_EVAL:
            for (long label = 0; label <= 7; ++label) grid.push_back({label});
            break;
        case IdentityId::CONV_EGG:
            for (long n = 0; n <= 30; ++n)
                for (long alpha = 0; alpha <= 10; ++alpha)
                    for (long gamma = 0; gamma <= 10; ++gamma)
                        for (long delta = 0; delta <= 1; ++delta)
                            for (long epsilon = 0; epsilon <= 1; ++epsilon)
                                grid.push_back({n, alpha, gamma, delta, epsilon});
            break;
        case IdentityId::CONV_BGG:
            for (long n = 0; n <= 40; ++n)
                for (long q = 2; q <= 40; ++q) grid.push_back({n, q});
            break;
        case IdentityId::PN_GENOCCHI:
            for (long n = 0; n <= 15; ++n)
                for (long k = 0; k <= 15; ++k) grid.push_back({n, k});
            break;
        case IdentityId::PMPN:
            for (long m = 0; m <= 10; ++m)
                for (long n = 0; n <= 10; ++n) grid.push_back({m, n, 20});
            break;
    }
    return grid;
}

namespace {

void verify_exact(IdentityId id, const std::vector<long>& p, VerificationRecord& rec) {
    BigRational lhs, rhs;
    switch (id) {
        case IdentityId::CONV_EGG: {
            auto sides = conv_eGG_eBG_sides(p[0], p[1], p[2], static_cast<int>(p[3]),
                                            static_cast<int>(p[4]));
            lhs = sides.first;
            rhs = sides.second;
            rec.lhs_terms = "binomial Genocchi-Genocchi convolution";
            rec.rhs_expr = "Genocchi + Bernoulli-Genocchi closed form";
            break;
        }
        case IdentityId::CONV_BGG: {
            auto sides = conv_BG_GG_sides(p[0], p[1]);
            lhs = sides.first;
            rhs = sides.second;
            rec.lhs_terms = "Bernoulli-Genocchi + Genocchi-Genocchi convolution";
            rec.rhs_expr = "central-binomial Genocchi closed form";
            break;
        }
        case IdentityId::PN_GENOCCHI: {
            const long n = p[0], k = p[1];
            lhs = compose_poly_tanh(derivative_poly(n), k).coeff(k);
            rhs = pn_coeff_closed_form(n, k);
            rec.lhs_terms = "[t^k] P_n(tanh t) by series composition";
            rec.rhs_expr = "Genocchi closed form for [t^k] P_n(tanh t)";
            break;
        }
        case IdentityId::PMPN: {
            lhs = check_linearization(p[0], p[1], p[2]);
            rhs = BigRational(0);
            rec.lhs_terms = "max |[t^l] P_m P_n - closed form| over l <= order";
            rec.rhs_expr = "0";
            break;
        }
        default:
            throw std::logic_error("verify_exact: not an exact identity");
    }
    BigRational res = lhs - rhs;
    rec.lhs = to_string(lhs);
    rec.rhs = to_string(rhs);
    rec.residual = to_string(res);
    rec.tolerance = "0";
    rec.passed = (res == 0);
    rec.marginal = false;
}

void numeric_attempt(const SumCombination& comb, const ConstExpr& rhs_ce, long tol_exp,
                     EvalContext& c, VerificationRecord& rec) {
    MPFloat lhs = c.combination(comb);
    MPFloat rhs = c.const_expr(rhs_ce);
    MPFloat res = (lhs - rhs).abs();
    MPFloat tol = MPFloat::pow10(-tol_exp, c.prec());
    rec.lhs = to_sig_string(lhs, c.digits());
    rec.rhs = to_sig_string(rhs, c.digits());
    rec.residual = res.to_string(6);
    rec.tolerance = "1e-" + std::to_string(tol_exp);
    rec.passed = res < tol;
    rec.marginal = (res * 10 >= tol) && (res <= tol * 10);
    rec.precision_bits = static_cast<long>(c.prec());
}

void run_numeric(const SumCombination& comb, const ConstExpr& rhs_ce, long tol_exp,
                 EvalContext& ctx, VerificationRecord& rec) {
    rec.lhs_terms = combination_to_string(comb);
    rec.rhs_expr = rhs_ce.to_string();
    numeric_attempt(comb, rhs_ce, tol_exp, ctx, rec);
    if (!rec.passed) {
        EvalContext retry_ctx(2 * ctx.digits());
        rec.retried = true;
        numeric_attempt(comb, rhs_ce, tol_exp, retry_ctx, rec);
    }
}

void verify_numeric(IdentityId id, const std::vector<long>& p, EvalContext& ctx,
                    VerificationRecord& rec) {
    const SumCombination comb = lhs_spec(id, p);
    const ConstExpr rhs_ce = rhs_const_expr(id, p);
    const long tol_exp = (id == IdentityId::KNOWN_EVAL) ? 12 : ctx.digits() - 10;
    run_numeric(comb, rhs_ce, tol_exp, ctx, rec);
}

VerificationRecord verify_point_safe(IdentityId id, const std::vector<long>& params,
                                     EvalContext& ctx) {
    try {
        return verify_one(id, params, ctx);
    } catch (const std::exception& e) {
        VerificationRecord rec;
        rec.id = id;
        rec.params = params;
        rec.exact = identity_info(id).exact;
        rec.passed = false;
        rec.error = e.what();
        return rec;
    }
}

}  // namespace

VerificationRecord verify_one(IdentityId id, const std::vector<long>& params, EvalContext& ctx) {
    const auto t0 = std::chrono::steady_clock::now();
    const IdentityInfo& info = identity_info(id);
    check_schema(info, params);

    VerificationRecord rec;
    rec.id = id;
    rec.params = params;
    rec.exact = info.exact;
    rec.weight = identity_weight(id, params);
    if (info.exact)
        verify_exact(id, params, rec);
    else
        verify_numeric(id, params, ctx, rec);
    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

std::vector<VerificationRecord> verify_grid(IdentityId id,
                                            const std::vector<std::vector<long>>& grid,
                                            long digits, int threads) {
    std::vector<VerificationRecord> out(grid.size());
    if (threads <= 1) {
        EvalContext ctx(digits);
        for (size_t i = 0; i < grid.size(); ++i) out[i] = verify_point_safe(id, grid[i], ctx);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        EvalContext ctx(digits);
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= grid.size()) break;
            out[i] = verify_point_safe(id, grid[i], ctx);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::vector<VerificationRecord> verify_paper_examples(long digits, int threads) {
    const auto& rows = paper_examples();
    std::vector<VerificationRecord> out(rows.size());
    auto run_row = [&rows, digits](size_t i, EvalContext& ctx) {
        const PaperExample& ex = rows[i];
        VerificationRecord rec;
        rec.id = IdentityId::KNOWN_EVAL;
        rec.label = ex.label;
        rec.exact = false;
        rec.weight = ex.lhs.empty() ? 0 : ex.lhs.front().second.p + ex.lhs.front().second.q;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            const long tol_exp = ex.oracle_grade ? 12 : digits - 10;
            run_numeric(ex.lhs, ex.rhs, tol_exp, ctx, rec);
        } catch (const std::exception& e) {
            rec.passed = false;
            rec.error = e.what();
        }
        rec.elapsed_ms = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - t0)
                             .count();
        return rec;
    };
    if (threads <= 1) {
        EvalContext ctx(digits);
        for (size_t i = 0; i < rows.size(); ++i) out[i] = run_row(i, ctx);
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        EvalContext ctx(digits);
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= rows.size()) break;
            out[i] = run_row(i, ctx);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

WeightReport weight_report(const std::vector<VerificationRecord>& records) {
    WeightReport rep;
    for (const auto& r : records) {
        const std::string bucket = r.exact ? "exact" : (r.weight % 2 != 0 ? "odd" : "even");
        const std::string group = r.label.empty() ? id_name(r.id) : "PAPER_EXAMPLE";
        auto& b = rep.by_identity[group][bucket];
        b.total += 1;
        rep.total.total += 1;
        if (r.passed) {
            b.passed += 1;
            rep.total.passed += 1;
        }
    }
    return rep;
}

namespace {

ordered_json record_to_json(const VerificationRecord& r, bool with_timing) {
    ordered_json j;
    j["identity"] = r.label.empty() ? id_name(r.id) : r.label;
    ordered_json params = ordered_json::object();
    if (r.label.empty()) {
        const auto& schema = identity_info(r.id).schema;
        for (size_t i = 0; i < r.params.size() && i < schema.size(); ++i)
            params[schema[i].name] = r.params[i];
    }
    j["params"] = params;
    j["kind"] = r.exact ? "exact" : "numeric";
    j["weight"] = r.weight;
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
    j["residual"] = r.residual;
    j["tolerance"] = r.tolerance;
    j["passed"] = r.passed;
    j["marginal"] = r.marginal;
    j["retried"] = r.retried;
    j["precision_bits"] = r.precision_bits;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    j["lhs_terms"] = r.lhs_terms;
    j["rhs_expr"] = r.rhs_expr;
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

std::string params_text(const VerificationRecord& r) {
    if (!r.label.empty()) return "";
    const auto& schema = identity_info(r.id).schema;
    std::string out;
    for (size_t i = 0; i < r.params.size() && i < schema.size(); ++i) {
        if (!out.empty()) out += " ";
        out += schema[i].name + "=" + std::to_string(r.params[i]);
    }
    return out;
}

std::string display_name(const VerificationRecord& r) {
    return r.label.empty() ? id_name(r.id) : r.label;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

}  // namespace

std::string record_to_json_line(const VerificationRecord& r, bool with_timing) {
    return record_to_json(r, with_timing).dump();
}

std::string records_to_text(const std::vector<VerificationRecord>& rs, bool with_timing) {
    std::ostringstream os;
    for (const auto& r : rs) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << display_name(r);
        const std::string pt = params_text(r);
        if (!pt.empty()) os << " " << pt;
        if (r.exact) {
            os << "  residual=" << r.residual << " (exact)";
        } else {
            os << "  weight=" << r.weight << "  residual=" << r.residual
               << "  tol=" << r.tolerance;
            if (r.marginal) os << "  [marginal]";
            if (r.retried) os << "  [retried]";
        }
        if (with_timing) os << "  (" << r.elapsed_ms << " ms)";
        if (!r.error.empty()) os << "  error: " << r.error;
        os << "\n";
    }
    return os.str();
}

std::string records_to_csv(const std::vector<VerificationRecord>& rs, bool with_timing) {
    std::ostringstream os;
    os << "identity,params,kind,weight,lhs,rhs,residual,tolerance,passed,marginal,retried,"
          "precision_bits";
    if (with_timing) os << ",elapsed_ms";
    os << ",lhs_terms,rhs_expr,error\n";
    for (const auto& r : rs) {
        os << display_name(r) << "," << csv_escape(params_text(r)) << ","
           << (r.exact ? "exact" : "numeric") << "," << r.weight << "," << csv_escape(r.lhs)
           << "," << csv_escape(r.rhs) << "," << csv_escape(r.residual) << ","
           << csv_escape(r.tolerance) << "," << (r.passed ? "true" : "false") << ","
           << (r.marginal ? "true" : "false") << "," << (r.retried ? "true" : "false") << ","
           << r.precision_bits;
        if (with_timing) os << "," << r.elapsed_ms;
        os << "," << csv_escape(r.lhs_terms) << "," << csv_escape(r.rhs_expr) << ","
           << csv_escape(r.error) << "\n";
    }
    return os.str();
}

std::string weight_report_to_json(const WeightReport& rep) {
    ordered_json j;
    ordered_json ids = ordered_json::object();
    for (const auto& [name, buckets] : rep.by_identity) {
        ordered_json b = ordered_json::object();
        for (const auto& [bucket, wb] : buckets) {
            b[bucket] = {{"passed", wb.passed}, {"total", wb.total}};
        }
        ids[name] = b;
    }
    j["identities"] = ids;
    j["total"] = {{"passed", rep.total.passed}, {"total", rep.total.total}};
    j["all_passed"] = (rep.total.passed == rep.total.total);
    return j.dump();
}

}  // namespace eulersum
