// compser: complementary series toolkit for SO(n,1) at desk scale.
//
// Subcommands: params window|map|chain, branch-table, branch-verify,
// spectrum, criterion check|scan, compare-tables. Every run is
// deterministic: no environment variables are consulted, artifacts carry a
// config echo, and --threads never changes output bytes.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compser/branch_table.hpp"
#include "compser/criterion.hpp"
#include "compser/errors.hpp"
#include "compser/harmonics.hpp"
#include "compser/intertwining.hpp"
#include "compser/params.hpp"
#include "compser/rational.hpp"

namespace {

using nlohmann::ordered_json;

// sysexits-style codes; criterion verdicts map to 0/2/3.
constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitDiverging = 3;
constexpr int kExitUsage = 64;
constexpr int kExitDomain = 65;
constexpr int kExitResource = 69;
constexpr int kExitIo = 74;

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void atomic_write(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw compser::IoError("cannot open '" + tmp.string() + "' for writing");
        os << content;
        if (!os.flush()) throw compser::IoError("write to '" + tmp.string() + "' failed");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) throw compser::IoError("rename to '" + path + "' failed: " + ec.message());
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        atomic_write(out_path, content);
    }
}

// Options can come from --config (JSON, identical keys); command-line flags
// take precedence. Appliers run after parsing, before validation.
struct CfgMerge {
    std::vector<std::function<void(const nlohmann::json&)>> appliers;

    template <typename T>
    CLI::Option* add(CLI::App* sub, const std::string& name, T& var, const std::string& desc) {
        auto* opt = sub->add_option(name, var, desc);
        const std::string key = name.substr(2);
        appliers.push_back([opt, &var, key](const nlohmann::json& cfg) {
            if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<T>();
        });
        return opt;
    }

    CLI::Option* add_flag(CLI::App* sub, const std::string& name, bool& var,
                          const std::string& desc) {
        auto* opt = sub->add_flag(name, var, desc);
        const std::string key = name.substr(2);
        appliers.push_back([opt, &var, key](const nlohmann::json& cfg) {
            if (opt->count() == 0 && cfg.contains(key)) var = cfg.at(key).get<bool>();
        });
        return opt;
    }

    void apply(const nlohmann::json& cfg) const {
        for (const auto& f : appliers) f(cfg);
    }
};

struct CommonOpts {
    std::string out;
    std::string format = "text";
    std::string config_path;
    int threads = 1;
    bool no_deterministic = false;
};

// The echoed RunConfig. --threads and --out are implementation/location
// details and are deliberately not part of it, so outputs stay byte-identical
// across thread counts and destinations.
ordered_json base_config(const std::string& command, const CommonOpts& common) {
    ordered_json cfg;
    cfg["command"] = command;
    cfg["format"] = common.format;
    if (common.no_deterministic) {
        const auto now = std::chrono::system_clock::now();
        const auto t = std::chrono::system_clock::to_time_t(now);
        char buf[32];
        std::strftime(buf, sizeof(buf), "%FT%TZ", std::gmtime(&t));
        cfg["timestamp"] = buf;
    }
    return cfg;
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

compser::harmonics::BranchTable load_table(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw compser::IoError("cannot open table '" + path + "'");
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
        std::stringstream ss;
        ss << is.rdbuf();
        return compser::harmonics::branch_table_from_json(ss.str());
    }
    return compser::harmonics::read_branch_table_csv(is);
}

int verdict_exit(compser::criterion::Verdict v) {
    switch (v) {
        case compser::criterion::Verdict::bounded: return kExitOk;
        case compser::criterion::Verdict::inconclusive: return kExitInconclusive;
        case compser::criterion::Verdict::diverging: return kExitDiverging;
    }
    return kExitInconclusive;
}

// ---------------------------------------------------------------- params --

int run_params_window(int n, int i, const CommonOpts& common) {
    auto [lo, hi] = compser::params::window_exact(n, i);
    auto cfg = base_config("params-window", common);
    cfg["n"] = n;
    cfg["i"] = i;

    const bool empty = lo >= hi;
    compser::params::Endpoints ep;
    if (!empty) ep = compser::params::endpoint_map(n, i);
    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "params-window";
        j["lo"] = lo.get_d();
        j["hi"] = hi.get_d();
        j["lo_exact"] = compser::to_string(lo);
        j["hi_exact"] = compser::to_string(hi);
        j["empty"] = empty;
        if (!empty) {
            j["u_end_exact"] = compser::to_string(ep.u_end);
            j["u_end_next_exact"] = compser::to_string(ep.u_end_next);
            j["second_endpoint_exact"] = compser::to_string(compser::params::second_endpoint(n, i));
        }
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "lo = " << fmt17(lo.get_d()) << " (" << compser::to_string(lo) << ")\n";
        os << "hi = " << fmt17(hi.get_d()) << " (" << compser::to_string(hi) << ")\n";
        os << "empty = " << (empty ? "true" : "false") << "\n";
        if (!empty) {
            os << "u_end -> u_end' : " << compser::to_string(ep.u_end) << " -> "
               << compser::to_string(ep.u_end_next) << "\n";
            os << "second endpoint : "
               << compser::to_string(compser::params::second_endpoint(n, i)) << "\n";
        }
        emit(common.out, os.str());
    }
    return kExitOk;
}

int run_params_map(int n, int i, double u, const CommonOpts& common) {
    const double up = compser::params::branch_param({n, i, u});
    auto cfg = base_config("params-map", common);
    cfg["n"] = n;
    cfg["i"] = i;
    cfg["u"] = u;
    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "params-map";
        j["u_prime"] = up;
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "u_prime = " << fmt17(up) << "\n";
        emit(common.out, os.str());
    }
    return kExitOk;
}

int run_params_chain(int n, int i, double u, int max_steps, const CommonOpts& common) {
    const auto trace = compser::params::iterate_chain({n, i, u}, max_steps);
    auto cfg = base_config("params-chain", common);
    cfg["n"] = n;
    cfg["i"] = i;
    cfg["u"] = u;
    cfg["max-steps"] = max_steps;

    const char* reason = trace.reason == compser::params::ChainStop::tempered ? "tempered"
                         : trace.reason == compser::params::ChainStop::max_steps ? "max-steps"
                                                                                 : "window-exit";
    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "params-chain";
        auto steps = ordered_json::array();
        for (const auto& s : trace.steps) {
            steps.push_back({{"n", s.n}, {"i", s.i}, {"u", s.u}});
        }
        j["steps"] = std::move(steps);
        j["terminated_tempered"] = trace.terminated_tempered;
        if (trace.terminal_m) j["terminal_m"] = *trace.terminal_m;
        j["stop_reason"] = reason;
        if (auto two = trace.two_step()) {
            j["two_step"] = {{"n", two->n}, {"i", two->i}, {"u", two->u}};
        }
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "start: n=" << n << " i=" << i << " u=" << fmt17(u) << "\n";
        for (const auto& s : trace.steps) {
            os << "  -> n=" << s.n << " i=" << s.i << " u=" << fmt17(s.u) << "\n";
        }
        os << "stop: " << reason;
        if (trace.terminal_m) os << " (terminal m=" << *trace.terminal_m << ")";
        os << "\n";
        if (auto two = trace.two_step()) {
            os << "two-rank image: n=" << two->n << " u=" << fmt17(two->u) << "\n";
        }
        emit(common.out, os.str());
    }
    return kExitOk;
}

// ---------------------------------------------------------------- tables --

int run_branch_table(int n, int mmax, int lmax, const std::string& mode, int exact_cap,
                     std::int64_t cell_cap, const CommonOpts& common) {
    require(mode == "fast" || mode == "exact", "--mode must be fast or exact");
    compser::harmonics::BuildOptions opts;
    opts.exact_mode_mmax_cap = exact_cap;
    opts.cell_cap = cell_cap;
    opts.threads = common.threads;
    const auto table = compser::harmonics::build_branch_table(
        n, mmax, lmax,
        mode == "exact" ? compser::harmonics::TableMode::exact
                        : compser::harmonics::TableMode::fast,
        opts);

    auto cfg = base_config("branch-table", common);
    cfg["n"] = n;
    cfg["mmax"] = mmax;
    cfg["lmax"] = lmax;
    cfg["mode"] = mode;

    if (common.format == "json") {
        emit(common.out, compser::harmonics::branch_table_to_json(table, cfg.dump()) + "\n");
    } else {
        std::ostringstream os;
        compser::harmonics::write_branch_table_csv(os, table, cfg.dump());
        emit(common.out, os.str());
    }
    return kExitOk;
}

int run_branch_verify(int n, int mmax, double tol, const CommonOpts& common) {
    double worst = 0.0;
    int worst_m = -1, worst_l = -1;
    bool zero_mismatch = false;
    for (int m = 0; m <= mmax; ++m) {
        for (int l = 0; l <= m; ++l) {
            const auto exact = compser::harmonics::branch_coeff_exact(n, m, l);
            const double fast = compser::harmonics::branch_coeff_fast(n, m, l);
            if (exact == 0) {
                if (fast != 0.0) {
                    zero_mismatch = true;
                    worst_m = m;
                    worst_l = l;
                }
                continue;
            }
            const double e = exact.get_d();
            const double rel = std::fabs(fast - e) / e;
            if (rel > worst) {
                worst = rel;
                worst_m = m;
                worst_l = l;
            }
        }
    }
    const bool ok = !zero_mismatch && worst <= tol;
    auto cfg = base_config("branch-verify", common);
    cfg["n"] = n;
    cfg["mmax"] = mmax;
    cfg["tol"] = tol;
    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "branch-verify";
        j["max_rel_error"] = worst;
        j["worst_slot"] = {worst_m, worst_l};
        j["zero_mismatch"] = zero_mismatch;
        j["ok"] = ok;
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "max relative error = " << fmt17(worst) << " at (m=" << worst_m
           << ", l=" << worst_l << ")\n";
        os << (ok ? "OK" : "MISMATCH") << " (tol = " << fmt17(tol) << ")\n";
        emit(common.out, os.str());
    }
    return ok ? kExitOk : kExitCheckFailed;
}

// -------------------------------------------------------------- spectrum --

int run_spectrum(int n, double u, int mmax, const CommonOpts& common) {
    const auto spec = compser::intertwining::lambda_spectrum(n, u, mmax);
    auto cfg = base_config("spectrum", common);
    cfg["n"] = n;
    cfg["u"] = u;
    cfg["mmax"] = mmax;

    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "spectrum";
        j["n"] = n;
        j["u"] = u;
        auto rows = ordered_json::array();
        for (int m = 0; m <= mmax; ++m) {
            rows.push_back({m, spec.lambda(m), spec.log_values[static_cast<std::size_t>(m)]});
        }
        j["rows"] = std::move(rows);
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# spectrum n=" << n << " u=" << fmt17(u) << " mmax=" << mmax << "\n";
        os << "# config " << cfg.dump() << "\n";
        os << "m,lambda,log_lambda\n";
        for (int m = 0; m <= mmax; ++m) {
            os << m << ',' << fmt17(spec.lambda(m)) << ','
               << fmt17(spec.log_values[static_cast<std::size_t>(m)]) << "\n";
        }
        emit(common.out, os.str());
    }
    return kExitOk;
}

// ------------------------------------------------------------- criterion --

struct CriterionSource {
    compser::harmonics::BranchTable table;
    bool gamma_route = false;  // i >= 1 evaluated on the internal i = 0 table
};

CriterionSource criterion_table(int n, int i, int mmax, int lmax, const std::string& table_path,
                                const std::string& mode, const CommonOpts& common) {
    CriterionSource src;
    if (!table_path.empty()) {
        src.table = load_table(table_path);
        require(src.table.n() == n, "loaded table has n=" + std::to_string(src.table.n()) +
                                        ", expected " + std::to_string(n));
        if (src.table.i() == i) {
            src.gamma_route = false;
        } else if (src.table.i() == 0 && i >= 1) {
            src.gamma_route = true;
        } else {
            throw compser::DomainError("table M-type i=" + std::to_string(src.table.i()) +
                                       " matches neither 0 nor the requested i");
        }
        return src;
    }
    require(mode == "fast" || mode == "exact", "--mode must be fast or exact");
    compser::harmonics::BuildOptions opts;
    opts.threads = common.threads;
    src.table = compser::harmonics::build_branch_table(
        n, mmax, lmax,
        mode == "exact" ? compser::harmonics::TableMode::exact
                        : compser::harmonics::TableMode::fast,
        opts);
    src.gamma_route = (i >= 1);
    return src;
}

int run_criterion_check(int n, int i, double u, int lmax, int mmax, double gamma,
                        const std::string& table_path, const std::string& mode,
                        const CommonOpts& common) {
    const auto src = criterion_table(n, i, mmax, lmax, table_path, mode, common);
    const int eval_i = src.gamma_route ? 0 : i;
    compser::params::ParamPoint p{n, eval_i, u};
    const auto rep = compser::criterion::evaluate_criterion(src.table, p, lmax, mmax, {},
                                                            common.threads);
    double rbound = rep.sup_bound;
    if (src.gamma_route) rbound = compser::criterion::ramified_bound(rep, gamma, i);

    auto cfg = base_config("criterion-check", common);
    cfg["n"] = n;
    cfg["i"] = i;
    cfg["u"] = u;
    cfg["lmax"] = lmax;
    cfg["mmax"] = mmax;
    if (src.gamma_route) cfg["gamma"] = gamma;
    if (!table_path.empty()) cfg["table"] = table_path;
    else cfg["mode"] = mode;

    if (common.format == "json") {
        auto j = ordered_json::parse(compser::criterion::report_to_json(rep));
        if (src.gamma_route) {
            j["ramified_comparison"] = {{"target_i", i}, {"gamma", gamma}, {"bound", rbound}};
        }
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "n=" << n << " i=" << i << " u=" << fmt17(u) << " u'=" << fmt17(rep.u_prime)
           << " lmax=" << lmax << " mmax=" << mmax << "\n";
        os << "verdict      : " << compser::criterion::verdict_name(rep.verdict) << "\n";
        os << "sup bound    : " << fmt17(rep.sup_bound) << " (attained at l=" << rep.argmax_l
           << ")\n";
        if (src.gamma_route) {
            os << "gamma bound  : " << fmt17(rbound) << " (gamma=" << fmt17(gamma)
               << ", target i=" << i << ")\n";
        }
        os << "l trend grows: " << (rep.l_trend_growing ? "yes" : "no") << "\n";
        os << "l,partial_sum,tail_estimate,fitted_tail_exponent,bound\n";
        for (const auto& row : rep.per_l) {
            os << row.l << ',' << fmt17(row.partial_sum) << ',' << fmt17(row.tail_estimate)
               << ',' << fmt17(row.fitted_tail_exponent) << ',' << fmt17(row.bound) << "\n";
        }
        emit(common.out, os.str());
    }
    return verdict_exit(rep.verdict);
}

int run_criterion_scan(int n, int i, int steps, int lmax, int mmax,
                       const std::string& table_path, const std::string& mode,
                       const CommonOpts& common) {
    const auto src = criterion_table(n, i, mmax, lmax, table_path, mode, common);
    const auto scan = compser::criterion::endpoint_scan(src.table, n, i, steps, lmax, mmax, {},
                                                        common.threads);
    auto cfg = base_config("criterion-scan", common);
    cfg["n"] = n;
    cfg["i"] = i;
    cfg["steps"] = steps;
    cfg["lmax"] = lmax;
    cfg["mmax"] = mmax;
    if (!table_path.empty()) cfg["table"] = table_path;
    else cfg["mode"] = mode;

    int worst = kExitOk;
    for (const auto& [u, rep] : scan) worst = std::max(worst, verdict_exit(rep.verdict));

    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "criterion-scan";
        auto rows = ordered_json::array();
        for (const auto& [u, rep] : scan) {
            auto jr = ordered_json::parse(compser::criterion::report_to_json(rep));
            rows.push_back({{"u", u}, {"report", std::move(jr)}});
        }
        j["points"] = std::move(rows);
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "u,sup_bound,verdict,argmax_l\n";
        for (const auto& [u, rep] : scan) {
            os << fmt17(u) << ',' << fmt17(rep.sup_bound) << ','
               << compser::criterion::verdict_name(rep.verdict) << ',' << rep.argmax_l << "\n";
        }
        emit(common.out, os.str());
    }
    return worst;
}

int run_compare_tables(const std::string& ram_path, const std::string& unram_path,
                       const CommonOpts& common) {
    const auto ram = load_table(ram_path);
    const auto unram = load_table(unram_path);
    const auto cmp = compser::criterion::compare_tables(ram, unram);

    auto cfg = base_config("compare-tables", common);
    cfg["ramified"] = ram_path;
    cfg["unramified"] = unram_path;

    if (common.format == "json") {
        ordered_json j;
        j["schema"] = "compare-tables";
        j["gamma_hat"] = cmp.gamma_hat;
        auto v = ordered_json::array();
        for (const auto& [m, l] : cmp.violations) v.push_back({m, l});
        j["violations"] = std::move(v);
        j["config"] = cfg;
        emit(common.out, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "# config " << cfg.dump() << "\n";
        os << "gamma_hat = " << fmt17(cmp.gamma_hat) << "\n";
        os << "violations = " << cmp.violations.size() << "\n";
        for (const auto& [m, l] : cmp.violations) os << "  (m=" << m << ", l=" << l << ")\n";
        emit(common.out, os.str());
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"complementary series toolkit: branching coefficients, intertwining "
                 "spectra, and series-boundedness certification for SO(n,1)"};
    app.require_subcommand(1);

    CfgMerge cfg_merge;
    CommonOpts common;
    app.add_option("--config", common.config_path,
                   "JSON config file with the same keys as the flags (flags win)");

    // Shared per-subcommand options are registered on each subcommand.
    auto add_common = [&](CLI::App* sub) {
        cfg_merge.add(sub, "--out", common.out, "write the artifact to this path (atomic)");
        cfg_merge.add(sub, "--format", common.format, "output format: text, json, csv");
        cfg_merge.add(sub, "--threads", common.threads,
                      "worker threads (never changes output bytes)");
        cfg_merge.add_flag(sub, "--no-deterministic", common.no_deterministic,
                           "include a timestamp in the config echo");
    };

    int n = 0, i = 0, mmax = 0, lmax = 0, steps = 5, max_steps = 64, exact_cap = 60;
    double u = 0.0, tol = 1e-10, gamma = 1.0;
    std::int64_t cell_cap = 100000000;
    std::string mode = "fast", table_path, ram_path, unram_path;

    auto* params = app.add_subcommand("params", "parameter arithmetic of complementary series");
    auto* pw = params->add_subcommand("window", "branching window (1/(n-1), 1-2i/(n-1))");
    cfg_merge.add(pw, "--n", n, "rank parameter of SO(n,1)");
    cfg_merge.add(pw, "--i", i, "exterior-power degree of the M-type");
    add_common(pw);
    auto* pm = params->add_subcommand("map", "u' = ((n-1)u - 1)/(n-2)");
    cfg_merge.add(pm, "--n", n, "rank parameter");
    cfg_merge.add(pm, "--i", i, "M-type degree");
    cfg_merge.add(pm, "--u", u, "continuous parameter");
    add_common(pm);
    auto* pc = params->add_subcommand("chain", "iterated one-rank restriction");
    cfg_merge.add(pc, "--n", n, "rank parameter");
    cfg_merge.add(pc, "--i", i, "M-type degree");
    cfg_merge.add(pc, "--u", u, "continuous parameter");
    cfg_merge.add(pc, "--max-steps", max_steps, "step budget");
    add_common(pc);

    auto* bt = app.add_subcommand("branch-table", "build a dense C(m,l,0) table");
    cfg_merge.add(bt, "--n", n, "rank parameter");
    cfg_merge.add(bt, "--mmax", mmax, "largest K-type degree m");
    cfg_merge.add(bt, "--lmax", lmax, "largest equatorial degree l");
    cfg_merge.add(bt, "--mode", mode, "fast (log-Gamma) or exact (rational oracle)");
    cfg_merge.add(bt, "--exact-cap", exact_cap, "mmax cap for exact mode");
    cfg_merge.add(bt, "--cell-cap", cell_cap, "total table cell cap");
    add_common(bt);

    auto* bv = app.add_subcommand("branch-verify", "compare fast path against the exact oracle");
    cfg_merge.add(bv, "--n", n, "rank parameter");
    cfg_merge.add(bv, "--mmax", mmax, "verify all slots l <= m <= mmax");
    cfg_merge.add(bv, "--tol", tol, "relative tolerance");
    add_common(bv);

    auto* sp = app.add_subcommand("spectrum", "intertwining eigenvalues lambda_m(u)");
    cfg_merge.add(sp, "--n", n, "rank parameter");
    cfg_merge.add(sp, "--u", u, "continuous parameter in (0,1)");
    cfg_merge.add(sp, "--mmax", mmax, "largest K-type degree");
    add_common(sp);

    auto* crit = app.add_subcommand("criterion", "series-boundedness certification");
    auto* cc = crit->add_subcommand("check", "evaluate the criterion at one parameter point");
    cfg_merge.add(cc, "--n", n, "rank parameter");
    cfg_merge.add(cc, "--i", i, "M-type degree (i >= 1 uses the gamma comparison "
                                "unless --table supplies ramified data)");
    cfg_merge.add(cc, "--u", u, "continuous parameter");
    cfg_merge.add(cc, "--lmax", lmax, "largest equatorial type l");
    cfg_merge.add(cc, "--mmax", mmax, "series truncation (>= 4*lmax)");
    cfg_merge.add(cc, "--gamma", gamma, "comparison constant for the ramified bound");
    cfg_merge.add(cc, "--table", table_path, "branch table CSV/JSON instead of internal build");
    cfg_merge.add(cc, "--mode", mode, "internal table mode: fast or exact");
    add_common(cc);
    auto* cs = crit->add_subcommand("scan", "criterion along u approaching the endpoint");
    cfg_merge.add(cs, "--n", n, "rank parameter");
    cfg_merge.add(cs, "--i", i, "M-type degree");
    cfg_merge.add(cs, "--steps", steps, "number of scan points (>= 2)");
    cfg_merge.add(cs, "--lmax", lmax, "largest equatorial type l");
    cfg_merge.add(cs, "--mmax", mmax, "series truncation (>= 4*lmax)");
    cfg_merge.add(cs, "--table", table_path, "branch table CSV/JSON instead of internal build");
    cfg_merge.add(cs, "--mode", mode, "internal table mode: fast or exact");
    add_common(cs);

    auto* ct = app.add_subcommand("compare-tables", "gamma_hat and violations between tables");
    cfg_merge.add(ct, "--ramified", ram_path, "ramified (i >= 1) table path");
    cfg_merge.add(ct, "--unramified", unram_path, "unramified (i = 0) table path");
    add_common(ct);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (!common.config_path.empty()) {
            std::ifstream is(common.config_path);
            if (!is) throw compser::IoError("cannot open config '" + common.config_path + "'");
            nlohmann::json cfg;
            try {
                is >> cfg;
            } catch (const nlohmann::json::exception& e) {
                throw compser::IoError(std::string("config parse: ") + e.what());
            }
            cfg_merge.apply(cfg);
        }

        if (pw->parsed()) {
            require(n >= 3, "params window: --n (>= 3) is required");
            return run_params_window(n, i, common);
        }
        if (pm->parsed()) {
            require(n >= 3, "params map: --n (>= 3) is required");
            require(pm->count("--u") || u != 0.0, "params map: --u is required");
            return run_params_map(n, i, u, common);
        }
        if (pc->parsed()) {
            require(n >= 3, "params chain: --n (>= 3) is required");
            return run_params_chain(n, i, u, max_steps, common);
        }
        if (bt->parsed()) {
            require(n >= 3 && mmax >= 0 && lmax >= 0,
                    "branch-table: --n, --mmax, --lmax are required");
            return run_branch_table(n, mmax, lmax, mode, exact_cap, cell_cap, common);
        }
        if (bv->parsed()) {
            require(n >= 3 && mmax >= 0, "branch-verify: --n and --mmax are required");
            return run_branch_verify(n, mmax, tol, common);
        }
        if (sp->parsed()) {
            require(n >= 3 && mmax >= 0, "spectrum: --n and --mmax are required");
            return run_spectrum(n, u, mmax, common);
        }
        if (cc->parsed()) {
            require(n >= 3 && lmax >= 0 && mmax >= 1,
                    "criterion check: --n, --u, --lmax, --mmax are required");
            return run_criterion_check(n, i, u, lmax, mmax, gamma, table_path, mode, common);
        }
        if (cs->parsed()) {
            require(n >= 3 && lmax >= 0 && mmax >= 1,
                    "criterion scan: --n, --steps, --lmax, --mmax are required");
            return run_criterion_scan(n, i, steps, lmax, mmax, table_path, mode, common);
        }
        if (ct->parsed()) {
            require(!ram_path.empty() && !unram_path.empty(),
                    "compare-tables: --ramified and --unramified are required");
            return run_compare_tables(ram_path, unram_path, common);
        }
        throw UsageError("no subcommand given");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const compser::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const compser::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return kExitResource;
    } catch (const compser::IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
