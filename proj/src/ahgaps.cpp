#include "zetagaps/ahgaps.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace zetagaps {

namespace {

using mp = boost::multiprecision::cpp_bin_float_50;

// half-integer grid 0.5, 1.0, ..., K
std::vector<double> sigma_grid(double K) {
    if (!(K >= 2.0)) throw std::invalid_argument("support bound K must be >= 2");
    std::vector<double> grid;
    for (double s = 0.5; s <= K + 1e-9; s += 0.5) grid.push_back(s);
    return grid;
}

bool on_grid(const std::vector<double>& grid, double s) {
    for (double g : grid)
        if (std::abs(g - s) < 1e-9) return true;
    return false;
}

}  // namespace

double GapDensities::sum() const {
    double t = 0.0;
    for (const auto& [s, v] : g) t += v;
    return t;
}

double GapDensities::mass() const {
    double t = 0.0;
    for (const auto& [s, v] : g) t += s * v;
    return t;
}

AhConstraintSet AhConstraintSet::defaults() {
    AhConstraintSet cs;
    const double pi2 = 9.869604401089358;  // pi^2
    cs.g_half_fixed = 0.5 - 2.0 / pi2;
    cs.g_one_bounds = {4.0 / pi2, 0.5};
    return cs;
}

G15MinChain closed_bound_g15_min() {
    G15MinChain out;
    const double pi2 = 9.869604401089358;
    out.intermediate = 0.3 - 3.0 / pi2;
    out.bound = 0.1 - 2.0 * out.intermediate;  // = 6/pi^2 - 1/2
    return out;
}

double closed_bound_g15_conditional(double g1) {
    return 0.1 + 2.0 * (0.5 - g1 + 0.0039635);
}

GkMaxBound closed_bound_gk_max(double k, double g1) {
    if (!(k >= 1.5)) throw std::invalid_argument("tail index must be >= 1.5");
    GkMaxBound out;
    out.printed = (0.18951 - 2.0 * (0.5 - g1)) / k;
    const double inv_pi2 = 0.10132118364233778;  // 1/pi^2
    out.exact_chain = (0.1 + inv_pi2 - 0.0118905 - 2.0 * (0.5 - g1)) / k;
    return out;
}

LpResult lp_extremize(double target_sigma, LpSense sense, const AhConstraintSet& cs, double K) {
    const std::vector<double> grid = sigma_grid(K);
    if (!on_grid(grid, target_sigma))
        throw std::invalid_argument("target density index must lie on the half-integer grid");
    if (!cs.sum_to_one || !cs.mass_to_one)
        throw std::invalid_argument("both normalization constraints are required");

    const mp F = mp(cs.g_half_fixed);
    const mp g1_lo = mp(cs.g_one_bounds.first);
    const mp g1_hi = mp(cs.g_one_bounds.second);
    if (g1_lo > g1_hi) throw std::invalid_argument("empty g_1 range");

    // right-hand sides after the fixed entries are substituted out
    mp S1 = 1 - F;
    mp S2 = 1 - F / 2;
    std::vector<std::pair<double, mp>> fixed;  // sigma -> value, sigma > 1
    for (const auto& [s, v] : cs.extra_fixings) {
        if (!on_grid(grid, s) || s < 1.5)
            throw std::invalid_argument("extra fixing must name a free half-integer index");
        if (v < 0.0) throw std::invalid_argument("extra fixing must be nonnegative");
        fixed.emplace_back(s, mp(v));
        S1 -= mp(v);
        S2 -= mp(s) * mp(v);
    }

    // free variables: g_1 plus every sigma >= 1.5 not fixed
    std::vector<double> free_sigma{1.0};
    for (double s : grid) {
        if (s < 1.5) continue;
        bool is_fixed = false;
        for (const auto& [fs, fv] : fixed)
            if (std::abs(fs - s) < 1e-9) is_fixed = true;
        if (!is_fixed) free_sigma.push_back(s);
    }

    const mp eps = mp("1e-40");
    bool found = false;
    mp best_value = 0;
    std::vector<mp> best_g;
    std::string best_basis;

    auto consider = [&](const std::vector<mp>& g, const std::string& basis) {
        mp obj = 0;
        if (std::abs(target_sigma - 0.5) < 1e-9) {
            obj = F;
        } else {
            for (std::size_t i = 0; i < free_sigma.size(); ++i)
                if (std::abs(free_sigma[i] - target_sigma) < 1e-9) obj = g[i];
            for (const auto& [fs, fv] : fixed)
                if (std::abs(fs - target_sigma) < 1e-9) obj = fv;
        }
        const bool better = sense == LpSense::Min ? obj < best_value : obj > best_value;
        bool tie_break = false;
        if (found && obj == best_value) {  // deterministic: lexicographically smallest vertex
            for (std::size_t i = 0; i < free_sigma.size(); ++i) {
                if (g[i] < best_g[i]) {
                    tie_break = true;
                    break;
                }
                if (g[i] > best_g[i]) break;
            }
        }
        if (!found || better || tie_break) {
            found = true;
            best_value = obj;
            best_g = g;
            best_basis = basis;
        }
    };

    const std::size_t n = free_sigma.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool g1_basic = (i == 0);  // free_sigma[0] == 1
            const int bound_cases = g1_basic ? 1 : 2;
            for (int bc = 0; bc < bound_cases; ++bc) {
                mp R1 = S1, R2 = S2;
                mp g1_val = 0;
                if (!g1_basic) {
                    g1_val = bc == 0 ? g1_lo : g1_hi;
                    R1 -= g1_val;
                    R2 -= g1_val;
                }
                const mp si = mp(free_sigma[i]);
                const mp sj = mp(free_sigma[j]);
                mp gi = (R2 - sj * R1) / (si - sj);
                mp gj = R1 - gi;
                if (gi < -eps || gj < -eps) continue;
                if (gi < 0) gi = 0;
                if (gj < 0) gj = 0;
                if (g1_basic && (gi < g1_lo - eps || gi > g1_hi + eps)) continue;
                std::vector<mp> g(n, mp(0));
                g[i] = gi;
                g[j] = gj;
                if (!g1_basic) g[0] = g1_val;
                std::ostringstream basis;
                basis << "basic {" << free_sigma[i] << ", " << free_sigma[j] << "}";
                if (!g1_basic) basis << ", g_1 at " << (bc == 0 ? "lower" : "upper") << " bound";
                consider(g, basis.str());
            }
        }
    }

    LpResult out;
    if (!found) {
        out.feasible = false;
        out.certificate = "no feasible vertex: normalization cannot be met with the given fixings";
        return out;
    }
    out.feasible = true;
    out.value = static_cast<double>(best_value);
    out.certificate = best_basis;
    out.witness.support_max = K;
    out.witness.g[0.5] = cs.g_half_fixed;
    for (std::size_t i = 0; i < n; ++i) out.witness.g[free_sigma[i]] = static_cast<double>(best_g[i]);
    for (const auto& [fs, fv] : fixed) out.witness.g[fs] = static_cast<double>(fv);
    return out;
}

GapDensities agued_reference() {
    GapDensities g;
    g.support_max = 10.0;
    g.g[0.5] = 0.297;
    g.g[1.0] = 0.453;
    g.g[1.5] = 0.207;
    g.g[2.0] = 0.0397;
    g.g[2.5] = 0.003;
    return g;
}

std::vector<ConstraintResidual> check_densities(const GapDensities& g, const AhConstraintSet& cs,
                                                double tol) {
    std::vector<ConstraintResidual> out;
    auto push = [&](const std::string& name, double residual) {
        out.push_back({name, residual, residual <= tol});
    };
    if (cs.sum_to_one) push("sum_to_one", std::abs(g.sum() - 1.0));
    if (cs.mass_to_one) push("mass_to_one", std::abs(g.mass() - 1.0));
    auto lookup = [&](double s) {
        auto it = g.g.find(s);
        return it == g.g.end() ? 0.0 : it->second;
    };
    push("g_half_fixed", std::abs(lookup(0.5) - cs.g_half_fixed));
    const double g1 = lookup(1.0);
    push("g_one_range",
         std::max({cs.g_one_bounds.first - g1, g1 - cs.g_one_bounds.second, 0.0}));
    double worst_neg = 0.0;
    for (const auto& [s, v] : g.g) worst_neg = std::max(worst_neg, -v);
    push("nonnegativity", worst_neg);
    for (const auto& [s, v] : cs.extra_fixings) {
        std::ostringstream name;
        name << "fixed_g_" << s;
        push(name.str(), std::abs(lookup(s) - v));
    }
    return out;
}

}  // namespace zetagaps
