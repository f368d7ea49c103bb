// zgtool: command-line surface over the toolkit.  Every subcommand emits one
// machine-readable report on stdout (JSON by default, TSV with --format tsv);
// diagnostics go to stderr.  Same argv twice gives byte-identical output
// unless --timing is requested.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zetagaps/ahgaps.hpp"
#include "zetagaps/arithmetic.hpp"
#include "zetagaps/kernels.hpp"
#include "zetagaps/ledger.hpp"
#include "zetagaps/mollifier.hpp"
#include "zetagaps/optimize.hpp"
#include "zetagaps/repro.hpp"
#include "zetagaps/zerodata.hpp"

using nlohmann::ordered_json;
using namespace zetagaps;

namespace {

std::string fmt10(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

// all floating output carries 10 significant digits; rounding through text
// keeps the JSON dump consistent with the TSV columns
double sig10(double v) { return std::strtod(fmt10(v).c_str(), nullptr); }

KernelKind parse_kind(const std::string& s) {
    if (s == "C1" || s == "c1") return KernelKind::C1;
    if (s == "C2" || s == "c2") return KernelKind::C2;
    throw std::invalid_argument("kind must be C1 or C2, got '" + s + "'");
}

std::vector<double> parse_list(const std::string& s, char sep) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
        const std::size_t next = s.find(sep, pos);
        const std::string tok = s.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("empty entry in list '" + s + "'");
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::pair<double, double> parse_pair(const std::string& s, char sep) {
    auto v = parse_list(s, sep);
    if (v.size() != 2) throw std::invalid_argument("expected two numbers in '" + s + "'");
    return {v[0], v[1]};
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

struct UsageError {
    std::string msg;
};

// Config file: key=value per line, '#' comments.  Keys mirror the long flags
// of the chosen subcommand; expansion inserts them right after the subcommand
// token, so everything typed on the command line comes later and wins.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size())
            path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0)
            path = args[i].substr(9);
    }
    if (path.empty()) return args;

    std::size_t sub = args.size();
    for (std::size_t i = 0; i < args.size(); ++i)
        if (!args[i].empty() && args[i][0] != '-') {
            sub = i;
            break;
        }
    if (sub == args.size()) throw UsageError{"--config requires a subcommand"};

    std::ifstream in(path);
    if (!in) throw UsageError{"cannot open config file '" + path + "'"};
    std::vector<std::string> expanded;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw UsageError{"config line " + std::to_string(lineno) + " is not key=value: '" +
                             t + "'"};
        const std::string key = trim(t.substr(0, eq)), val = trim(t.substr(eq + 1));
        if (key.empty()) throw UsageError{"config line " + std::to_string(lineno) + ": empty key"};
        expanded.push_back("--" + key + "=" + val);
    }
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(sub) + 1, expanded.begin(),
                expanded.end());
    return args;
}

struct Common {
    std::string format = "json";
    bool timing = false;
    int threads = 1;
    std::string config;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "tsv"}));
    cmd->add_flag("--timing", c.timing, "append runtime_ms to the report");
    cmd->add_option("--threads", c.threads, "worker cap (all computations run serially)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--config", c.config, "key=value file mirroring the flags; flags win");
}

void flatten(const ordered_json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, out);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "." + std::to_string(i++), out);
    } else {
        out += prefix;
        out += '\t';
        if (j.is_number_float())
            out += fmt10(j.get<double>());
        else if (j.is_string())
            out += j.get<std::string>();
        else
            out += j.dump();
        out += '\n';
    }
}

void emit(const ordered_json& j, const Common& c, const std::string& tsv_table = "") {
    if (c.format == "json") {
        std::cout << j.dump(2) << "\n";
    } else if (!tsv_table.empty()) {
        std::cout << tsv_table;
    } else {
        std::string flat;
        flatten(j, "", flat);
        std::cout << flat;
    }
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

const SieveTable& shared_sieve(std::int64_t limit) {
    static std::int64_t cached_limit = 0;
    static const SieveTable* table = nullptr;
    if (table == nullptr || cached_limit != limit) {
        delete table;
        table = new SieveTable(limit);
        cached_limit = limit;
    }
    return *table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for zero-gap densities and mollified polynomials"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    int rc = 0;

    // ---- expect -------------------------------------------------------------
    struct {
        Common common;
        std::string kind = "C1", beta = "0,1";
        double r = 1.0, alpha = 1.0, eta = 0.0, d = 0.0;
    } ex;
    {
        auto* cmd = app.add_subcommand("expect", "closed-form mollified expectation");
        add_common(cmd, ex.common);
        cmd->add_option("--kind", ex.kind, "kernel profile, C1 or C2");
        cmd->add_option("--r", ex.r, "coefficient exponent r");
        cmd->add_option("--alpha", ex.alpha, "kernel dilation");
        cmd->add_option("--eta", ex.eta, "taper exponent");
        cmd->add_option("--beta", ex.beta, "sign-flip window exponents b1,b2");
        cmd->add_option("--d", ex.d, "shift in average-gap units");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            MollifierSpec spec;
            spec.kind = parse_kind(ex.kind);
            spec.coeff.r = ex.r;
            spec.coeff.eta = ex.eta;
            std::tie(spec.coeff.beta1, spec.coeff.beta2) = parse_pair(ex.beta, ',');
            spec.alpha = ex.alpha;
            spec.d = ex.d;
            const auto rep = expectation_closed(spec);
            ordered_json out;
            out["subcommand"] = "expect";
            out["inputs"] = {{"kind", ex.kind},
                             {"r", sig10(ex.r)},
                             {"alpha", sig10(ex.alpha)},
                             {"eta", sig10(ex.eta)},
                             {"beta", {sig10(spec.coeff.beta1), sig10(spec.coeff.beta2)}},
                             {"d", sig10(ex.d)}};
            out["value"] = sig10(rep.value);
            out["abs_error"] = sig10(rep.abs_error);
            out["method"] = rep.note.empty() ? "closed-form double integral"
                                             : "closed-form double integral; " + rep.note;
            if (ex.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, ex.common);
        });
    }

    // ---- expect-oracle ------------------------------------------------------
    struct {
        Common common;
        std::string kind = "C1", beta = "0,1";
        double r = 1.0, alpha = 1.0, eta = 0.0, d = 0.0, T = 1e6, cutoff = 0.0;
        std::int64_t sieve_limit = 1000000;
    } exo;
    {
        auto* cmd = app.add_subcommand("expect-oracle",
                                       "finite-T expectation by prime-power summation");
        add_common(cmd, exo.common);
        cmd->add_option("--kind", exo.kind, "kernel profile, C1 or C2");
        cmd->add_option("--r", exo.r, "coefficient exponent r");
        cmd->add_option("--alpha", exo.alpha, "kernel dilation");
        cmd->add_option("--eta", exo.eta, "taper exponent");
        cmd->add_option("--beta", exo.beta, "sign-flip window exponents b1,b2");
        cmd->add_option("--d", exo.d, "shift in average-gap units");
        cmd->add_option("--T", exo.T, "polynomial height");
        cmd->add_option("--cutoff", exo.cutoff, "coefficient cutoff (0 = T/log^2 T)");
        cmd->add_option("--sieve-limit", exo.sieve_limit, "prime sieve extent");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            MollifierSpec spec;
            spec.kind = parse_kind(exo.kind);
            spec.coeff.r = exo.r;
            spec.coeff.eta = exo.eta;
            std::tie(spec.coeff.beta1, spec.coeff.beta2) = parse_pair(exo.beta, ',');
            spec.coeff.T = exo.T;
            spec.coeff.cutoff = exo.cutoff;
            spec.alpha = exo.alpha;
            spec.d = exo.d;
            const auto rep = expectation_oracle(spec, shared_sieve(exo.sieve_limit));
            ordered_json out;
            out["subcommand"] = "expect-oracle";
            out["inputs"] = {{"kind", exo.kind},
                             {"r", sig10(exo.r)},
                             {"alpha", sig10(exo.alpha)},
                             {"eta", sig10(exo.eta)},
                             {"beta", {sig10(spec.coeff.beta1), sig10(spec.coeff.beta2)}},
                             {"d", sig10(exo.d)},
                             {"T", sig10(exo.T)},
                             {"cutoff", sig10(spec.coeff.effective_cutoff())},
                             {"sieve_limit", exo.sieve_limit}};
            out["value"] = sig10(rep.value);
            out["abs_error"] = sig10(rep.abs_error);
            out["method"] = rep.note.empty() ? "finite-T prime-power summation"
                                             : "finite-T prime-power summation; " + rep.note;
            if (exo.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, exo.common);
        });
    }

    // ---- measure ------------------------------------------------------------
    struct {
        Common common;
        std::string beta = "0,1";
        double r = 1.0, eta = 0.0, a = 0.0, b = 0.0, c = 0.0, T = 0.0, cutoff = 0.0;
        std::int64_t sieve_limit = 1000000;
    } ms;
    {
        auto* cmd = app.add_subcommand("measure", "measure of the union of shifted windows");
        add_common(cmd, ms.common);
        cmd->add_option("--r", ms.r, "coefficient exponent r");
        cmd->add_option("--eta", ms.eta, "taper exponent");
        cmd->add_option("--beta", ms.beta, "sign-flip window exponents b1,b2");
        auto* oa = cmd->add_option("--a", ms.a, "window lower shift");
        auto* ob = cmd->add_option("--b", ms.b, "window upper shift");
        auto* oc = cmd->add_option("--c", ms.c, "symmetric window width: (-c/2, c/2)");
        oa->needs(ob);
        ob->needs(oa);
        oc->excludes(oa)->excludes(ob);
        cmd->add_option("--T", ms.T, "polynomial height; 0 = closed form, >0 = finite-T sum");
        cmd->add_option("--cutoff", ms.cutoff, "coefficient cutoff (0 = T/log^2 T)");
        cmd->add_option("--sieve-limit", ms.sieve_limit, "prime sieve extent");
        cmd->callback([&, cmd] {
            const auto t0 = std::chrono::steady_clock::now();
            IntervalQuery q;
            if (cmd->count("--a") != 0) {
                q.a = ms.a;
                q.b = ms.b;
            } else {
                const double width = cmd->count("--c") != 0 ? ms.c : 0.5;
                q.a = -width / 2;
                q.b = width / 2;
            }
            CoeffSpec coeff;
            coeff.r = ms.r;
            coeff.eta = ms.eta;
            std::tie(coeff.beta1, coeff.beta2) = parse_pair(ms.beta, ',');
            ordered_json out;
            out["subcommand"] = "measure";
            out["inputs"] = {{"r", sig10(ms.r)},
                             {"eta", sig10(ms.eta)},
                             {"beta", {sig10(coeff.beta1), sig10(coeff.beta2)}},
                             {"a", sig10(q.a)},
                             {"b", sig10(q.b)}};
            MeasureReport rep;
            std::string method;
            if (ms.T > 0.0) {
                coeff.T = ms.T;
                coeff.cutoff = ms.cutoff;
                const auto& sieve = shared_sieve(ms.sieve_limit);
                const auto N = static_cast<std::int64_t>(
                    std::min<double>(static_cast<double>(ms.sieve_limit),
                                     coeff.effective_cutoff()));
                const auto a_tab = coeff_table(N, coeff, sieve);
                rep = interval_measure_oracle(a_tab, ms.T, q, sieve);
                method = "finite-T prime-pair summation";
                out["inputs"]["T"] = sig10(ms.T);
                out["inputs"]["cutoff"] = sig10(coeff.effective_cutoff());
                out["inputs"]["sieve_limit"] = ms.sieve_limit;
            } else {
                rep = interval_measure_closed(coeff, q);
                method = "closed-form double integral";
            }
            out["value"] = sig10(rep.value);
            out["abs_error"] = sig10(rep.abs_error);
            out["method"] = rep.note.empty() ? method : method + "; " + rep.note;
            if (ms.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, ms.common);
        });
    }

    // ---- mu-positive --------------------------------------------------------
    struct {
        Common common;
        std::string beta = "0,1";
        double r = 1.0, eta = 0.0, T = 1e6, cutoff = 0.0;
        std::int64_t sieve_limit = 1000000;
    } mp;
    {
        auto* cmd = app.add_subcommand("mu-positive", "finite-T prime-pair positivity sum");
        add_common(cmd, mp.common);
        cmd->add_option("--r", mp.r, "coefficient exponent r");
        cmd->add_option("--eta", mp.eta, "taper exponent");
        cmd->add_option("--beta", mp.beta, "sign-flip window exponents b1,b2");
        cmd->add_option("--T", mp.T, "polynomial height");
        cmd->add_option("--cutoff", mp.cutoff, "coefficient cutoff (0 = T/log^2 T)");
        cmd->add_option("--sieve-limit", mp.sieve_limit, "prime sieve extent");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            CoeffSpec coeff;
            coeff.r = mp.r;
            coeff.eta = mp.eta;
            std::tie(coeff.beta1, coeff.beta2) = parse_pair(mp.beta, ',');
            coeff.T = mp.T;
            coeff.cutoff = mp.cutoff;
            const auto& sieve = shared_sieve(mp.sieve_limit);
            const auto N = static_cast<std::int64_t>(std::min<double>(
                static_cast<double>(mp.sieve_limit), coeff.effective_cutoff()));
            const double v = mu_positive_eq5(coeff_table(N, coeff, sieve), mp.T, sieve);
            ordered_json out;
            out["subcommand"] = "mu-positive";
            out["inputs"] = {{"r", sig10(mp.r)},
                             {"eta", sig10(mp.eta)},
                             {"beta", {sig10(coeff.beta1), sig10(coeff.beta2)}},
                             {"T", sig10(mp.T)},
                             {"cutoff", sig10(coeff.effective_cutoff())},
                             {"sieve_limit", mp.sieve_limit}};
            out["value"] = sig10(v);
            out["abs_error"] = 0.0;
            out["method"] = "finite-T prime-pair positivity sum";
            if (mp.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, mp.common);
        });
    }

    // ---- gaps-lp ------------------------------------------------------------
    struct {
        Common common;
        std::string objective, sense = "min";
        double g1 = -1.0, g1_min = -1.0, g1_max = -1.0, K = 10.0;
        std::vector<std::string> fixes;
    } lp;
    {
        auto* cmd = app.add_subcommand("gaps-lp", "extremize a gap density over the constraint "
                                                  "polytope");
        add_common(cmd, lp.common);
        cmd->add_option("--objective", lp.objective, "density to extremize, e.g. g1.5")
            ->required();
        cmd->add_option("--sense", lp.sense, "min or max")
            ->check(CLI::IsMember({"min", "max"}));
        cmd->add_option("--g1", lp.g1, "pin g_1 to this value");
        cmd->add_option("--g1-min", lp.g1_min, "lower bound for g_1");
        cmd->add_option("--g1-max", lp.g1_max, "upper bound for g_1");
        cmd->add_option("--K", lp.K, "support endpoint of the half-integer grid");
        cmd->add_option("--fix", lp.fixes, "extra pin sigma=value (repeatable)")
            ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
        cmd->callback([&, cmd] {
            const auto t0 = std::chrono::steady_clock::now();
            std::string obj = lp.objective;
            if (!obj.empty() && (obj[0] == 'g' || obj[0] == 'G')) obj.erase(0, 1);
            if (!obj.empty() && obj[0] == '_') obj.erase(0, 1);
            const double target = std::stod(obj);
            auto cs = AhConstraintSet::defaults();
            if (cmd->count("--g1") != 0) cs.g_one_bounds = {lp.g1, lp.g1};
            if (cmd->count("--g1-min") != 0) cs.g_one_bounds.first = lp.g1_min;
            if (cmd->count("--g1-max") != 0) cs.g_one_bounds.second = lp.g1_max;
            for (const auto& f : lp.fixes) {
                const auto [s, v] = parse_pair(f, '=');
                cs.extra_fixings.emplace_back(s, v);
            }
            const auto res = lp_extremize(target, lp.sense == "min" ? LpSense::Min : LpSense::Max,
                                          cs, lp.K);
            ordered_json out;
            out["subcommand"] = "gaps-lp";
            out["inputs"] = {{"objective", "g" + fmt10(target)},
                             {"sense", lp.sense},
                             {"g1_bounds", {sig10(cs.g_one_bounds.first),
                                            sig10(cs.g_one_bounds.second)}},
                             {"K", sig10(lp.K)}};
            if (res.feasible) {
                out["value"] = sig10(res.value);
                ordered_json wit = ordered_json::object();
                for (const auto& [sigma, g] : res.witness.g) wit[fmt10(sigma)] = sig10(g);
                out["witness"] = wit;
            } else {
                out["value"] = nullptr;
                out["certificate"] = res.certificate;
            }
            out["feasible"] = res.feasible;
            out["error"] = 0.0;
            out["method"] = "exact vertex enumeration in 50-digit arithmetic";
            if (lp.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, lp.common);
        });
    }

    // ---- gaps-check ---------------------------------------------------------
    struct {
        Common common;
        std::string g;
        bool reference = false;
        double tol = 2e-3;
    } gc;
    {
        auto* cmd = app.add_subcommand("gaps-check",
                                       "residuals of a density vector against the constraints");
        add_common(cmd, gc.common);
        auto* og = cmd->add_option("--g", gc.g,
                                   "densities at sigma = 0.5, 1, 1.5, ... (comma separated)");
        auto* orf = cmd->add_flag("--reference", gc.reference, "use the published densities");
        og->excludes(orf);
        cmd->add_option("--tol", gc.tol, "residual tolerance");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            GapDensities g;
            if (gc.reference || gc.g.empty()) {
                g = agued_reference();
            } else {
                g.support_max = 10.0;
                double sigma = 0.5;
                for (double v : parse_list(gc.g, ',')) {
                    g.g[sigma] = v;
                    sigma += 0.5;
                }
                g.support_max = std::max(g.support_max, sigma - 0.5);
            }
            const auto rs = check_densities(g, AhConstraintSet::defaults(), gc.tol);
            bool all_ok = true;
            ordered_json rows = ordered_json::array();
            std::string tsv = "constraint\tresidual\tsatisfied\n";
            for (const auto& r : rs) {
                all_ok = all_ok && r.satisfied;
                rows.push_back({{"name", r.name},
                                {"residual", sig10(r.residual)},
                                {"satisfied", r.satisfied}});
                tsv += r.name + "\t" + fmt10(r.residual) + "\t" +
                       (r.satisfied ? "true" : "false") + "\n";
            }
            ordered_json out;
            out["subcommand"] = "gaps-check";
            out["inputs"] = {{"sum", sig10(g.sum())},
                             {"mass", sig10(g.mass())},
                             {"tol", sig10(gc.tol)}};
            out["values"] = rows;
            out["all_satisfied"] = all_ok;
            out["error"] = 0.0;
            out["method"] = "constraint residual evaluation";
            if (gc.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, gc.common, tsv);
            if (!all_ok) rc = 1;
        });
    }

    // ---- ledger -------------------------------------------------------------
    struct {
        Common common;
        std::string beta = "0,1";
        double r = 1.0, eta = 0.0, c = -1.0;
    } lg;
    {
        auto* cmd = app.add_subcommand("ledger", "derived mass quantities around zeros");
        add_common(cmd, lg.common);
        cmd->add_option("--r", lg.r, "coefficient exponent r");
        cmd->add_option("--eta", lg.eta, "taper exponent");
        cmd->add_option("--beta", lg.beta, "sign-flip window exponents b1,b2");
        cmd->add_option("--c", lg.c, "extra report entry: mass of (-c, c) windows");
        cmd->callback([&, cmd] {
            const auto t0 = std::chrono::steady_clock::now();
            CoeffSpec coeff;
            coeff.r = lg.r;
            coeff.eta = lg.eta;
            std::tie(coeff.beta1, coeff.beta2) = parse_pair(lg.beta, ',');
            const auto rep = ledger_report(coeff);
            ordered_json vals;
            vals["quarter_window_mass"] = sig10(rep.mu_pm_c);
            vals["outside_quarter_window"] = sig10(rep.mu_out);
            vals["half_gap_mass_lower"] = sig10(rep.half_gap_bounds.first);
            vals["half_gap_mass_upper"] = sig10(rep.half_gap_bounds.second);
            vals["beyond_half_gap_lower"] = sig10(rep.after_half_gap_lower);
            ordered_json iso = ordered_json::object();
            for (const auto& [name, v] : rep.isolated_identity_terms) iso[name] = sig10(v);
            vals["isolated_half_gap_identity"] = iso;
            if (cmd->count("--c") != 0)
                vals["window_mass_at_c"] = sig10(mu_around_zeros(coeff, lg.c).value);
            ordered_json out;
            out["subcommand"] = "ledger";
            out["inputs"] = {{"r", sig10(lg.r)},
                             {"eta", sig10(lg.eta)},
                             {"beta", {sig10(coeff.beta1), sig10(coeff.beta2)}}};
            out["values"] = vals;
            out["error"] = 0.0;
            out["method"] = rep.note.empty() ? "closed-form interval measures"
                                             : "closed-form interval measures; " + rep.note;
            if (lg.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, lg.common);
        });
    }

    // ---- corollary ----------------------------------------------------------
    struct {
        Common common;
        std::string variant = "as-printed", at;
        double theta = 0.0;
    } co;
    {
        auto* cmd = app.add_subcommand("corollary", "five-zero window bound: maximum over "
                                                    "configurations, or one evaluation");
        add_common(cmd, co.common);
        auto* ot = cmd->add_option("--theta", co.theta, "minimal double-gap sum");
        cmd->add_option("--variant", co.variant, "double-gap constraint family")
            ->check(CLI::IsMember({"as-printed", "symmetric"}));
        auto* oa = cmd->add_option("--at", co.at,
                                   "evaluate the objective at t,x,y,z,w instead of maximizing");
        oa->excludes(ot);
        cmd->callback([&, cmd] {
            const auto t0 = std::chrono::steady_clock::now();
            ordered_json out;
            out["subcommand"] = "corollary";
            if (cmd->count("--at") != 0) {
                const auto v = parse_list(co.at, ',');
                if (v.size() != 5)
                    throw std::invalid_argument("--at needs five numbers t,x,y,z,w");
                GapConfiguration cfg{v[0], v[1], v[2], v[3], v[4]};
                out["inputs"] = {{"t", sig10(cfg.t)},
                                 {"x", sig10(cfg.x)},
                                 {"y", sig10(cfg.y)},
                                 {"z", sig10(cfg.z)},
                                 {"w", sig10(cfg.w)}};
                out["value"] = sig10(corollary_objective(cfg));
                out["error"] = 0.0;
                out["method"] = "pointwise objective";
            } else {
                if (cmd->count("--theta") == 0)
                    throw std::invalid_argument("corollary needs --theta (or --at)");
                const auto variant = co.variant == "symmetric" ? ConstraintVariant::Symmetric
                                                               : ConstraintVariant::AsPrinted;
                const auto rep = corollary_max(co.theta, variant);
                out["inputs"] = {{"theta", sig10(co.theta)}, {"variant", co.variant}};
                out["value"] = sig10(rep.value);
                out["argmax"] = {{"t", sig10(rep.argmax.t)},
                                 {"x", sig10(rep.argmax.x)},
                                 {"y", sig10(rep.argmax.y)},
                                 {"z", sig10(rep.argmax.z)},
                                 {"w", sig10(rep.argmax.w)}};
                out["active_constraints"] = rep.active_constraints;
                out["certified_radius"] = sig10(rep.certified_radius);
                ordered_json alts = ordered_json::array();
                for (const auto& [name, v] : rep.alternates)
                    alts.push_back({{"name", name}, {"value", sig10(v)}});
                out["alternates"] = alts;
                out["error"] = 0.0;
                out["method"] = "multistart ascent with 1e-3 grid certificate";
            }
            if (co.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, co.common);
        });
    }

    // ---- threshold ----------------------------------------------------------
    struct {
        Common common;
        std::string variant = "as-printed";
        double target = 0.0;
    } th;
    {
        auto* cmd = app.add_subcommand("threshold",
                                       "double-gap threshold forced by an expectation value");
        add_common(cmd, th.common);
        cmd->add_option("--target", th.target, "expectation value to invert")->required();
        cmd->add_option("--variant", th.variant, "double-gap constraint family")
            ->check(CLI::IsMember({"as-printed", "symmetric"}));
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            const auto variant = th.variant == "symmetric" ? ConstraintVariant::Symmetric
                                                           : ConstraintVariant::AsPrinted;
            const double theta = threshold_search(th.target, variant);
            ordered_json out;
            out["subcommand"] = "threshold";
            out["inputs"] = {{"target", sig10(th.target)}, {"variant", th.variant}};
            out["value"] = sig10(theta);
            out["error"] = 1e-4;
            out["method"] = "bisection on the window-bound maximum";
            if (th.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, th.common);
        });
    }

    // ---- upper-bound --------------------------------------------------------
    struct {
        Common common;
        std::string kind = "C1";
        double tail_at = -1.0;
    } ub;
    {
        auto* cmd = app.add_subcommand("upper-bound", "square-root upper bound maxima and the "
                                                      "tail-energy integral");
        add_common(cmd, ub.common);
        auto* ok = cmd->add_option("--kind", ub.kind, "kernel profile, C1 or C2");
        auto* ot = cmd->add_option("--tail-energy-at", ub.tail_at,
                                   "evaluate the tail-energy integral F at this point instead");
        ot->excludes(ok);
        cmd->callback([&, cmd] {
            const auto t0 = std::chrono::steady_clock::now();
            ordered_json out;
            out["subcommand"] = "upper-bound";
            if (cmd->count("--tail-energy-at") != 0) {
                out["inputs"] = {{"tail_energy_at", sig10(ub.tail_at)}};
                out["value"] = sig10(F_integral(ub.tail_at));
                out["error"] = 0.0;
                out["method"] = "adaptive quadrature";
            } else {
                const auto s = parse_kind(ub.kind) == KernelKind::C1 ? upp_bound_c1()
                                                                     : upp_bound_c2();
                out["inputs"] = {{"kind", ub.kind}};
                out["value"] = sig10(s.value);
                out["argmax"] = sig10(s.argmax);
                out["active_constraints"] = s.active_constraints;
                out["certified_radius"] = sig10(s.certified_radius);
                out["error"] = 0.0;
                out["method"] = "stationary point with derivative certificate";
            }
            if (ub.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, ub.common);
        });
    }

    // ---- search -------------------------------------------------------------
    struct {
        Common common;
        std::string rs = "1,1.4,1.8", etas = "0,0.2,0.4", betas = "0:1", kind = "C1";
        double alpha = 1.0;
    } se;
    {
        auto* cmd = app.add_subcommand("search", "expectation / half-window sweep over a "
                                                 "parameter grid");
        add_common(cmd, se.common);
        cmd->add_option("--r", se.rs, "r values, comma separated");
        cmd->add_option("--eta", se.etas, "eta values, comma separated");
        cmd->add_option("--beta", se.betas, "b1:b2 pairs, comma separated");
        cmd->add_option("--kind", se.kind, "kernel profile, C1 or C2");
        cmd->add_option("--alpha", se.alpha, "kernel dilation");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            std::vector<std::pair<double, double>> betas;
            for (std::size_t pos = 0; pos <= se.betas.size();) {
                const auto next = se.betas.find(',', pos);
                betas.push_back(parse_pair(
                    se.betas.substr(pos, next == std::string::npos ? next : next - pos), ':'));
                if (next == std::string::npos) break;
                pos = next + 1;
            }
            const auto rows = param_search(parse_list(se.rs, ','), parse_list(se.etas, ','),
                                           betas, parse_kind(se.kind), se.alpha);
            ordered_json jrows = ordered_json::array();
            std::string tsv = "r\teta\tbeta1\tbeta2\texpectation\twindow_c_half\tok\n";
            for (const auto& row : rows) {
                jrows.push_back({{"r", sig10(row.r)},
                                 {"eta", sig10(row.eta)},
                                 {"beta", {sig10(row.beta1), sig10(row.beta2)}},
                                 {"expectation", sig10(row.expectation)},
                                 {"window_c_half", sig10(row.window_c_half)},
                                 {"ok", row.ok}});
                tsv += fmt10(row.r) + "\t" + fmt10(row.eta) + "\t" + fmt10(row.beta1) + "\t" +
                       fmt10(row.beta2) + "\t" + fmt10(row.expectation) + "\t" +
                       fmt10(row.window_c_half) + "\t" + (row.ok ? "true" : "false") + "\n";
            }
            ordered_json out;
            out["subcommand"] = "search";
            out["inputs"] = {{"kind", se.kind}, {"alpha", sig10(se.alpha)}};
            out["values"] = jrows;
            out["error"] = 0.0;
            out["method"] = "closed-form sweep, expectation-descending order";
            if (se.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, se.common, tsv);
        });
    }

    // ---- zeros-eval ---------------------------------------------------------
    struct {
        Common common;
        std::string zeros = std::string(ZG_DATA_DIR) + "/zeros_100k.txt", kind = "C1";
        std::int64_t start = 0, count = -1, sieve_limit = 1000000;
        double t = 0.0, alpha = 1.0, T = 1e3, window = 0.0;
        bool primes = false;
    } ze;
    {
        auto* cmd = app.add_subcommand("zeros-eval", "kernel sum over zero ordinates, optionally "
                                                     "against the prime-side evaluation");
        add_common(cmd, ze.common);
        cmd->add_option("--zeros", ze.zeros, "ordinate file, one per line");
        cmd->add_option("--start", ze.start, "first ordinate index to load");
        cmd->add_option("--count", ze.count, "number of ordinates to load (-1 = all)");
        cmd->add_option("--t", ze.t, "evaluation height")->required();
        cmd->add_option("--alpha", ze.alpha, "kernel dilation");
        cmd->add_option("--T", ze.T, "resolution height");
        cmd->add_option("--kind", ze.kind, "kernel profile, C1 or C2");
        cmd->add_option("--window", ze.window, "ordinate window half-width (0 = minimal legal)");
        cmd->add_flag("--primes", ze.primes, "also evaluate the prime side and report the gap");
        cmd->add_option("--sieve-limit", ze.sieve_limit, "prime sieve extent for --primes");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            const ZeroList zl = parse_zeros(ze.zeros, ze.start, ze.count);
            const double window =
                ze.window > 0.0 ? ze.window : 50.0 * 2.0 * 3.14159265358979323846 / std::log(ze.T);
            const auto res = c_from_zeros(ze.t, ze.alpha, ze.T, parse_kind(ze.kind), zl, window);
            ordered_json out;
            out["subcommand"] = "zeros-eval";
            out["inputs"] = {{"zeros", ze.zeros},       {"start", ze.start},
                             {"count", ze.count},       {"t", sig10(ze.t)},
                             {"alpha", sig10(ze.alpha)}, {"T", sig10(ze.T)},
                             {"kind", ze.kind},         {"window", sig10(window)}};
            if (ze.primes) {
                const double pc = c_from_primes(ze.t, ze.alpha, ze.T, parse_kind(ze.kind),
                                                shared_sieve(ze.sieve_limit));
                out["values"] = {{"zero_side", sig10(res.value)},
                                 {"prime_side", sig10(pc)},
                                 {"difference", sig10(res.value - pc)}};
                out["error"] = sig10(res.tail_bound);
                out["method"] = "kernel sum over ordinates vs explicit-formula prime side";
            } else {
                out["value"] = sig10(res.value);
                out["error"] = sig10(res.tail_bound);
                out["method"] = "kernel sum over ordinates";
            }
            if (ze.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, ze.common);
        });
    }

    // ---- zeros-hist ---------------------------------------------------------
    struct {
        Common common;
        std::string zeros = std::string(ZG_DATA_DIR) + "/zeros_100k.txt";
        std::int64_t start = 0, count = -1;
        double bin_width = 0.05;
    } zh;
    {
        auto* cmd = app.add_subcommand("zeros-hist", "normalized-gap histogram of an ordinate "
                                                     "file");
        add_common(cmd, zh.common);
        cmd->add_option("--zeros", zh.zeros, "ordinate file, one per line");
        cmd->add_option("--start", zh.start, "first ordinate index to load");
        cmd->add_option("--count", zh.count, "number of ordinates to load (-1 = all)");
        cmd->add_option("--bin-width", zh.bin_width, "histogram bin width, in [0.01, 0.5]");
        cmd->callback([&] {
            const auto t0 = std::chrono::steady_clock::now();
            const ZeroList zl = parse_zeros(zh.zeros, zh.start, zh.count);
            const auto ng = normalize(zl);
            const auto hist = gap_histogram(ng, zh.bin_width);
            double mean = 0.0;
            for (double d : ng.deltas) mean += d;
            mean /= static_cast<double>(ng.deltas.size());
            ordered_json bins = ordered_json::object();
            std::string tsv = "bin_lower_edge\tfrequency\n";
            for (const auto& [edge, freq] : hist) {
                bins[fmt10(edge)] = sig10(freq);
                tsv += fmt10(edge) + "\t" + fmt10(freq) + "\n";
            }
            ordered_json out;
            out["subcommand"] = "zeros-hist";
            out["inputs"] = {{"zeros", zh.zeros},
                             {"start", zh.start},
                             {"count", zh.count},
                             {"bin_width", sig10(zh.bin_width)}};
            out["values"] = {{"gap_count", static_cast<std::int64_t>(ng.deltas.size())},
                             {"mean_gap", sig10(mean)},
                             {"bins", bins}};
            out["error"] = 0.0;
            out["method"] = "binned relative frequencies of unit-mean gaps";
            if (zh.common.timing) out["runtime_ms"] = sig10(elapsed_ms(t0));
            emit(out, zh.common, tsv);
        });
    }

    // ---- repro --------------------------------------------------------------
    struct {
        Common common;
        std::string data = ZG_DATA_DIR;
    } rp;
    {
        auto* cmd = app.add_subcommand("repro", "run the full acceptance table");
        add_common(cmd, rp.common);
        cmd->add_option("--data", rp.data, "directory holding zeros_100k.txt");
        cmd->callback([&] {
            const auto rows = acceptance_table(rp.data);
            ordered_json jrows = ordered_json::array();
            std::string tsv;
            int failed = 0;
            for (const auto& r : rows) {
                failed += r.passed ? 0 : 1;
                ordered_json jr = {{"criterion", r.index},
                                   {"name", r.name},
                                   {"passed", r.passed},
                                   {"detail", r.detail}};
                if (rp.common.timing) jr["runtime_ms"] = sig10(r.seconds * 1000.0);
                jrows.push_back(jr);
                char idx[8];
                std::snprintf(idx, sizeof(idx), "%02d", r.index);
                tsv += std::string(r.passed ? "PASS" : "FAIL") + "\t" + idx + "\t" + r.name +
                       "\t" + r.detail + "\n";
            }
            ordered_json out;
            out["subcommand"] = "repro";
            out["inputs"] = {{"data", rp.data}};
            out["values"] = jrows;
            out["passed"] = static_cast<int>(rows.size()) - failed;
            out["failed"] = failed;
            out["error"] = 0.0;
            out["method"] = "acceptance table";
            emit(out, rp.common, tsv);
            if (failed != 0) rc = 1;
        });
    }

    try {
        std::vector<std::string> args(argv + 1, argv + argc);
        args = expand_config(std::move(args));
        std::reverse(args.begin(),
                     args.end());  // CLI11's vector overload consumes from the back
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "argument error: " << e.what() << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "argument error: " << e.msg << "\n\n" << app.help() << std::flush;
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "argument error: " << e.what() << "\n"
                  << "run 'zgtool <subcommand> --help' for usage\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "argument error: " << e.what() << "\n"
                  << "run 'zgtool <subcommand> --help' for usage\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "computation failed: " << e.what() << "\n";
        return 1;
    }
    return rc;
}
