#include <CLI11.hpp>
#include <json.hpp>

#include "eulersum/bernoulli.hpp"
#include "eulersum/engine.hpp"
#include "eulersum/exact_kernel.hpp"
#include "eulersum/verifier.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

using namespace eulersum;

namespace {

struct Options {
    long digits = 50;
    std::string format = "text";
    int threads = 1;
    long max_weight = 12;
    std::string out_path;
    bool timing = false;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

long default_digits() {
    if (const char* env = std::getenv("EULERSUM_PREC")) {
        try {
            size_t idx = 0;
            long d = std::stol(env, &idx);
            if (idx == std::string(env).size() && d >= 15) return d;
        } catch (...) {
        }
        std::cerr << "warning: ignoring invalid EULERSUM_PREC='" << env << "'\n";
    }
    return 50;
}

int write_output(const std::string& content, const Options& opt) {
    if (opt.out_path.empty()) {
        std::cout << content;
        return 0;
    }
    std::ofstream f(opt.out_path);
    if (!f) {
        std::cerr << "error: cannot open output file '" << opt.out_path << "'\n";
        return 2;
    }
    f << content;
    return 0;
}

std::optional<std::pair<long, long>> parse_range(const std::string& s) {
    try {
        const auto pos = s.find("..");
        if (pos == std::string::npos) {
            size_t idx = 0;
            long v = std::stol(s, &idx);
            if (idx != s.size()) return std::nullopt;
            return std::make_pair(v, v);
        }
        const std::string lo_s = s.substr(0, pos), hi_s = s.substr(pos + 2);
        size_t i1 = 0, i2 = 0;
        long lo = std::stol(lo_s, &i1), hi = std::stol(hi_s, &i2);
        if (i1 != lo_s.size() || i2 != hi_s.size() || hi < lo) return std::nullopt;
        return std::make_pair(lo, hi);
    } catch (...) {
        return std::nullopt;
    }
}

long parse_long(const std::string& s, const char* what) {
    try {
        size_t idx = 0;
        long v = std::stol(s, &idx);
        if (idx != s.size()) throw UsageError(std::string("expected an integer for ") + what);
        return v;
    } catch (const UsageError&) {
        throw;
    } catch (...) {
        throw UsageError(std::string("expected an integer for ") + what + ", got '" + s + "'");
    }
}

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) {
        if (!out.empty()) out += " ";
        out += s;
    }
    return out;
}

std::string render_value(const std::string& target, const std::string& value,
                         const Options& opt) {
    if (opt.format == "json") {
        nlohmann::ordered_json j;
        j["target"] = target;
        j["value"] = value;
        return j.dump() + "\n";
    }
    if (opt.format == "csv") {
        return "target,value\n\"" + target + "\"," + value + "\n";
    }
    return value + "\n";
}

int cmd_compute(const std::vector<std::string>& target, const Options& opt) {
    if (target.empty())
        throw UsageError(
            "compute needs a target, e.g. 'T 1 2', 'zeta 3', 'genocchi 12', 'dpoly 3', "
            "'rho 2 3 1', 'pi'");
    const std::string& head = target[0];
    auto need = [&](size_t n) {
        if (target.size() != n + 1)
            throw UsageError("target '" + head + "' takes " + std::to_string(n) + " argument(s)");
    };
    auto arg = [&](size_t i) { return parse_long(target[i], head.c_str()); };

    std::string value;
    if (head == "T" || head == "S" || head == "Sbar" || head == "R") {
        need(2);
        Family f = (head == "T") ? Family::T_SUM
                                 : (head == "R" ? Family::R_SUM : Family::S_SUM);
        EvalContext ctx(opt.digits);
        value = ctx.euler_sum({f, arg(1), arg(2)}).to_string(opt.digits);
    } else if (head == "t" || head == "TT") {
        need(2);
        Family f = (head == "t") ? Family::DOUBLE_t : Family::DOUBLE_T;
        EvalContext ctx(opt.digits);
        value = ctx.double_value({f, arg(1), arg(2)}).to_string(opt.digits);
    } else if (head == "zeta" || head == "tbar") {
        need(1);
        EvalContext ctx(opt.digits);
        Atom a = (head == "zeta") ? zeta_atom(arg(1)) : tbar_atom(arg(1));
        value = ctx.atom(a).to_string(opt.digits);
    } else if (head == "pi" || head == "ln2" || head == "li4half" || head == "zb51" ||
               head == "zb71" || head == "z62") {
        need(0);
        Atom a = pi_atom();
        if (head == "ln2") a = ln2_atom();
        else if (head == "li4half") a = li4half_atom();
        else if (head == "zb51") a = azeta51_atom();
        else if (head == "zb71") a = azeta71_atom();
        else if (head == "z62") a = zeta62_atom();
        EvalContext ctx(opt.digits);
        value = ctx.atom(a).to_string(opt.digits);
    } else if (head == "bernoulli") {
        need(1);
        value = to_string(bernoulli(arg(1)));
    } else if (head == "genocchi") {
        need(1);
        value = to_string(genocchi(arg(1)));
    } else if (head == "dpoly") {
        need(1);
        value = derivative_poly(arg(1)).to_string();
    } else if (head == "rho") {
        need(3);
        value = to_string(rho(arg(1), arg(2), arg(3)));
    } else {
        throw UsageError("unknown compute target '" + head +
                         "' (families: T S Sbar R t TT; constants: zeta tbar pi ln2 li4half "
                         "zb51 zb71 z62; exact: bernoulli genocchi dpoly rho)");
    }
    return write_output(render_value(join(target), value, opt), opt);
}

std::string render_records(const std::vector<VerificationRecord>& records, const Options& opt) {
    if (opt.format == "json") {
        std::string out;
        for (const auto& r : records) out += record_to_json_line(r, opt.timing) + "\n";
        out += weight_report_to_json(weight_report(records)) + "\n";
        return out;
    }
    if (opt.format == "csv") return records_to_csv(records, opt.timing);
    std::string out = records_to_text(records, opt.timing);
    const WeightReport rep = weight_report(records);
    out += "summary: passed " + std::to_string(rep.total.passed) + "/" +
           std::to_string(rep.total.total) + "\n";
    return out;
}

int finish_verification(const std::vector<VerificationRecord>& records, const Options& opt) {
    const int rc = write_output(render_records(records, opt), opt);
    if (rc != 0) return rc;
    for (const auto& r : records)
        if (!r.passed) return 1;
    return 0;
}

int cmd_verify(const std::string& id_str,
               const std::map<std::string, std::string>& param_flags, const Options& opt) {
    std::vector<VerificationRecord> records;
    if (id_str == "all") {
        for (const auto& [name, val] : param_flags)
            if (!val.empty())
                throw UsageError("per-parameter flags cannot be combined with 'verify all'");
        for (const auto& info : registry()) {
            auto grid = default_grid(info.id, opt.max_weight);
            auto rs = verify_grid(info.id, grid, opt.digits, opt.threads);
            records.insert(records.end(), rs.begin(), rs.end());
        }
        return finish_verification(records, opt);
    }

    const auto id = id_from_name(id_str);
    if (!id) {
        std::string known;
        for (const auto& info : registry()) known += (known.empty() ? "" : ", ") + info.name;
        std::cerr << "error: unknown identity '" << id_str << "' (known: " << known
                  << ", or 'all')\n";
        return 2;
    }
    const IdentityInfo& info = identity_info(*id);

    // Reject flags that are not parameters of this identity.
    for (const auto& [name, val] : param_flags) {
        if (val.empty()) continue;
        bool ok = false;
        for (const auto& spec : info.schema) ok = ok || (spec.name == name);
        if (!ok) throw UsageError("--" + name + " is not a parameter of " + info.name);
    }

    std::vector<std::pair<long, long>> ranges;
    size_t user_provided = 0;
    size_t covered = 0;
    for (const auto& spec : info.schema) {
        auto it = param_flags.find(spec.name);
        if (it == param_flags.end() || it->second.empty()) {
            if (spec.name == "order") {
                ranges.emplace_back(20, 20);  // series order defaults to 20
                ++covered;
                continue;
            }
            ranges.emplace_back(0, -1);  // marker: not provided
            continue;
        }
        auto r = parse_range(it->second);
        if (!r)
            throw UsageError("bad value for --" + spec.name + " (expected N or A..B): '" +
                             it->second + "'");
        ranges.push_back(*r);
        ++user_provided;
        ++covered;
    }

    std::vector<std::vector<long>> grid;
    if (user_provided == 0) {
        grid = default_grid(*id, opt.max_weight);
    } else if (covered == info.schema.size()) {
        grid.push_back({});
        for (const auto& [lo, hi] : ranges) {
            std::vector<std::vector<long>> next;
            for (const auto& prefix : grid) {
                for (long v = lo; v <= hi; ++v) {
                    auto point = prefix;
                    point.push_back(v);
                    next.push_back(std::move(point));
                    if (next.size() > 200000)
                        throw UsageError("parameter grid too large (cap: 200000 points)");
                }
            }
            grid = std::move(next);
        }
    } else {
        throw UsageError(info.name +
                         ": provide every parameter (single values or A..B ranges) or none");
    }

    records = verify_grid(*id, grid, opt.digits, opt.threads);
    return finish_verification(records, opt);
}

int cmd_paper_examples(const Options& opt) {
    return finish_verification(verify_paper_examples(opt.digits, opt.threads), opt);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "eulersum: exact and high-precision verification of three families of linear Euler "
        "sums, their binomial-shift identities, and the underlying Bernoulli/Genocchi "
        "convolutions"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    opt.digits = default_digits();
    app.add_option("--prec", opt.digits, "working precision in decimal digits (default 50)")
        ->check(CLI::Range(15L, 10000L));
    app.add_option("--format", opt.format, "output format: text, json, or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", opt.threads, "worker threads for grids (default 1)")
        ->check(CLI::Range(1, 64));
    app.add_option("--max-weight", opt.max_weight,
                   "cap on m+p+q for the symmetric-family default grids (default 12)")
        ->check(CLI::Range(4L, 20L));
    app.add_option("--out", opt.out_path, "write the report to a file instead of stdout");
    app.add_flag("--timing", opt.timing, "include per-record timings in reports");

    auto* compute = app.add_subcommand(
        "compute", "evaluate one quantity (e.g. 'T 1 2', 'zeta 3', 'genocchi 12', 'dpoly 3')");
    std::vector<std::string> target;
    compute->add_option("target", target, "target specification")->expected(-1);

    auto* verify =
        app.add_subcommand("verify", "verify one identity, a parameter grid, or 'all'");
    std::string id_str;
    verify->add_option("id", id_str, "identity name (see README) or 'all'")->required();
    const std::vector<std::string> param_names = {"m",     "p",     "q",       "n",
                                                  "k",     "alpha", "gamma",   "delta",
                                                  "epsilon", "label", "order"};
    std::map<std::string, std::string> param_flags;
    for (const auto& name : param_names) {
        param_flags[name] = "";
        verify->add_option("--" + name, param_flags[name],
                           "parameter " + name + " (single value or A..B range)");
    }

    auto* pex = app.add_subcommand("paper-examples",
                                   "replay the fixed worked-example regression table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (compute->parsed()) return cmd_compute(target, opt);
        if (verify->parsed()) return cmd_verify(id_str, param_flags, opt);
        if (pex->parsed()) return cmd_paper_examples(opt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
