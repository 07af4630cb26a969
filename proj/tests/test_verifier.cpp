#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "eulersum/verifier.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace eulersum;
using nlohmann::ordered_json;

TEST_CASE("registry: names round trip, exactness flags, schemas") {
    const auto& reg = registry();
    REQUIRE(reg.size() == 20);
    std::set<std::string> names;
    for (const auto& info : reg) {
        CHECK(names.insert(info.name).second);
        auto back = id_from_name(info.name);
        REQUIRE(back.has_value());
        CHECK(*back == info.id);
        CHECK(id_name(info.id) == info.name);
        CHECK(!info.schema.empty());
    }
    CHECK(!id_from_name("NOPE").has_value());
    CHECK(identity_info(IdentityId::CONV_EGG).exact);
    CHECK(identity_info(IdentityId::CONV_BGG).exact);
    CHECK(identity_info(IdentityId::PN_GENOCCHI).exact);
    CHECK(identity_info(IdentityId::PMPN).exact);
    CHECK(!identity_info(IdentityId::SYM_TS).exact);
    CHECK(identity_info(IdentityId::SYM_TS).schema.size() == 3);
    CHECK(identity_info(IdentityId::SYM_TS).schema[2].name == "q");
    CHECK(identity_info(IdentityId::PMPN).schema[2].name == "order");
}

TEST_CASE("default grids: canonical order, domains, sizes") {
    const auto g = default_grid(IdentityId::SYM_TS, 12);
    CHECK(g.size() == 165);
    CHECK(g.front() == std::vector<long>{1, 1, 2});
    for (size_t i = 1; i < g.size(); ++i) CHECK(g[i - 1] < g[i]);  // strictly lexicographic
    for (const auto& t : g) {
        CHECK(t[0] >= 1);
        CHECK(t[1] >= 1);
        CHECK(t[2] >= 2);
        CHECK(t[0] + t[1] + t[2] <= 12);
    }
    CHECK(default_grid(IdentityId::SYM_T, 12).size() == 84);
    CHECK(default_grid(IdentityId::SYM_T, 12).front() == std::vector<long>{2, 2, 2});
    CHECK(default_grid(IdentityId::TS1Q).size() == 7);  // q = 2..8
    CHECK(default_grid(IdentityId::KNOWN_EVAL).size() == 8);
    CHECK(default_grid(IdentityId::CONV_EGG).size() == 31u * 11 * 11 * 2 * 2);
    CHECK(default_grid(IdentityId::CONV_BGG).size() == 41u * 39);  // n = 0..40, q = 2..40
    CHECK(default_grid(IdentityId::PN_GENOCCHI).size() == 16u * 16);
    const auto pm = default_grid(IdentityId::PMPN);
    CHECK(pm.size() == 121);
    for (const auto& t : pm) CHECK(t[2] == 20);
    // Weight capping respects the smaller cap.
    CHECK(default_grid(IdentityId::SYM_TS, 8).size() < g.size());
}

TEST_CASE("identity weight bookkeeping") {
    CHECK(identity_weight(IdentityId::SYM_TS, {1, 1, 3}) == 4);
    CHECK(identity_weight(IdentityId::SYM_T, {2, 3, 2}) == 6);
    CHECK(identity_weight(IdentityId::TS1Q, {5}) == 6);
    CHECK(identity_weight(IdentityId::TS_Q1Q, {4}) == 8);
    CHECK(identity_weight(IdentityId::TS_QEQ_COEFF, {3, 4}) == 10);
    CHECK(identity_weight(IdentityId::LA_R, {3, 4}) == 9);
    CHECK(identity_weight(IdentityId::KNOWN_EVAL, {4}) == 6);  // R_{2,4}
    CHECK(identity_weight(IdentityId::CONV_BGG, {5, 7}) == 0);
}

TEST_CASE("verify_one: numeric identity passes with tight residual") {
    EvalContext ctx(50);
    const VerificationRecord r = verify_one(IdentityId::SYM_TS, {1, 1, 3}, ctx);
    CHECK(r.passed);
    CHECK(!r.exact);
    CHECK(!r.retried);
    CHECK(r.error.empty());
    CHECK(r.weight == 4);
    CHECK(r.tolerance == "1e-40");
    CHECK(r.params == std::vector<long>{1, 1, 3});
    CHECK(r.lhs_terms == "T_{1,3} + Sbar_{1,3}");
    CHECK(r.precision_bits > 0);
    // Closed form of this instance: 14 ln2 zeta(3) - pi^4/12.
    const ConstExpr expect = make_rational(14) * (ce_ln2() * ce_zeta(3)) +
                             make_rational(-1, 12) * ce_pi_pow(4);
    CHECK(normalize(rhs_const_expr(IdentityId::SYM_TS, {1, 1, 3}), NormalizeMode::pi_form) ==
          normalize(expect, NormalizeMode::pi_form));
}

TEST_CASE("verify_one: exact identity yields a zero residual with zero tolerance") {
    EvalContext ctx(30);
    const VerificationRecord r = verify_one(IdentityId::CONV_BGG, {0, 2}, ctx);
    CHECK(r.passed);
    CHECK(r.exact);
    CHECK(r.tolerance == "0");
    CHECK(r.residual == "0");
    CHECK(r.weight == 0);

    const VerificationRecord g = verify_one(IdentityId::PN_GENOCCHI, {3, 7}, ctx);
    CHECK(g.passed);
    CHECK(g.exact);
}

TEST_CASE("verify_one: individually evaluated sums use the oracle-grade tolerance") {
    EvalContext ctx(50);
    const VerificationRecord r = verify_one(IdentityId::KNOWN_EVAL, {6}, ctx);  // R_{2,6}
    CHECK(r.passed);
    CHECK(r.tolerance == "1e-12");
    CHECK(r.lhs_terms == "R_{2,6}");
}

TEST_CASE("verify_grid: grid order is preserved and bad points become error records") {
    const std::vector<std::vector<long>> grid = {{1, 1, 2}, {1, 1, 1}, {2, 1, 2}};
    const auto rs = verify_grid(IdentityId::SYM_TS, grid, 30, 1);
    REQUIRE(rs.size() == 3);
    for (size_t i = 0; i < grid.size(); ++i) CHECK(rs[i].params == grid[i]);
    CHECK(rs[0].passed);
    CHECK(!rs[1].passed);
    CHECK(!rs[1].error.empty());
    CHECK(rs[2].passed);
}

TEST_CASE("verify_grid: thread count does not change the report") {
    const auto grid = default_grid(IdentityId::SYM_TS, 9);
    const auto seq = verify_grid(IdentityId::SYM_TS, grid, 30, 1);
    const auto par = verify_grid(IdentityId::SYM_TS, grid, 30, 4);
    REQUIRE(seq.size() == par.size());
    for (size_t i = 0; i < seq.size(); ++i)
        CHECK(record_to_json_line(seq[i], false) == record_to_json_line(par[i], false));
}

TEST_CASE("record JSON: field order, round trip, content") {
    EvalContext ctx(30);
    const VerificationRecord r = verify_one(IdentityId::SYM_R, {1, 2, 3}, ctx);
    const std::string line = record_to_json_line(r, false);
    const ordered_json j = ordered_json::parse(line);
    CHECK(j.dump() == line);  // byte-identical round trip
    std::vector<std::string> keys;
    for (const auto& item : j.items()) keys.push_back(item.key());
    const std::vector<std::string> expect = {"identity",  "params",   "kind",    "weight",
                                             "lhs",       "rhs",      "residual", "tolerance",
                                             "passed",    "marginal", "retried", "precision_bits",
                                             "lhs_terms", "rhs_expr"};
    CHECK(keys == expect);
    CHECK(j["identity"] == "SYM_R");
    CHECK(j["kind"] == "numeric");
    CHECK(j["params"]["m"] == 1);
    CHECK(j["params"]["p"] == 2);
    CHECK(j["params"]["q"] == 3);
    CHECK(j["passed"] == true);
    // Timing appears only on request, as the last field.
    const ordered_json jt = ordered_json::parse(record_to_json_line(r, true));
    CHECK(jt.contains("elapsed_ms"));
    CHECK(!j.contains("elapsed_ms"));
}

TEST_CASE("text and CSV renderers") {
    EvalContext ctx(30);
    std::vector<VerificationRecord> rs = {verify_one(IdentityId::TS1Q, {3}, ctx),
                                          verify_one(IdentityId::CONV_BGG, {1, 2}, ctx)};
    const std::string text = records_to_text(rs, false);
    CHECK(text.find("[PASS] TS1Q") != std::string::npos);
    CHECK(text.find("(exact)") != std::string::npos);
    const std::string csv = records_to_csv(rs, false);
    CHECK(csv.rfind("identity,params,kind,weight,lhs,rhs,residual,tolerance,passed,marginal,"
                    "retried,precision_bits,lhs_terms,rhs_expr,error",
                    0) == 0);
    // Two data rows after the header.
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
}

TEST_CASE("weight report: parity buckets and totals") {
    std::vector<VerificationRecord> rs;
    {
        EvalContext ctx(30);
        rs.push_back(verify_one(IdentityId::TS1Q, {2}, ctx));  // weight 3, odd
        rs.push_back(verify_one(IdentityId::TS1Q, {3}, ctx));  // weight 4, even
        rs.push_back(verify_one(IdentityId::CONV_BGG, {0, 2}, ctx));
    }
    const WeightReport rep = weight_report(rs);
    CHECK(rep.total.total == 3);
    CHECK(rep.total.passed == 3);
    CHECK(rep.by_identity.at("TS1Q").at("odd").total == 1);
    CHECK(rep.by_identity.at("TS1Q").at("even").total == 1);
    CHECK(rep.by_identity.at("CONV_BGG").at("exact").total == 1);
    const ordered_json j = ordered_json::parse(weight_report_to_json(rep));
    CHECK(j["all_passed"] == true);
    CHECK(j["total"]["passed"] == 3);

    const WeightReport empty = weight_report({});
    CHECK(empty.total.total == 0);
    CHECK(ordered_json::parse(weight_report_to_json(empty))["all_passed"] == true);
}

TEST_CASE("worked-example replay: labeled records, all pass at desk precision") {
    const auto rs = verify_paper_examples(30, 2);
    REQUIRE(rs.size() == 45);
    long oracle_rows = 0;
    for (const auto& r : rs) {
        CHECK(!r.label.empty());
        CHECK(r.passed);
        CHECK(r.error.empty());
        if (r.tolerance == "1e-12") ++oracle_rows;
        const ordered_json j = ordered_json::parse(record_to_json_line(r, false));
        CHECK(j["identity"] == r.label);
        CHECK(j["params"].empty());
    }
    CHECK(oracle_rows == 8);
}
