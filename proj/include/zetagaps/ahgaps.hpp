#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zetagaps {

// Gap-length densities g_sigma on the half-integer support {0.5, 1, ..., K}.
struct GapDensities {
    double support_max = 10.0;              // K
    std::map<double, double> g;             // sigma -> density

    double sum() const;
    double mass() const;                    // sum sigma * g_sigma
};

// The constraint system: sum g = 1, sum sigma g = 1, g_{0.5} fixed at
// 1/2 - 2/pi^2, g_1 in [4/pi^2, 1/2], everything nonnegative.
struct AhConstraintSet {
    bool sum_to_one = true;
    bool mass_to_one = true;
    double g_half_fixed;                          // 1/2 - 2/pi^2
    std::pair<double, double> g_one_bounds;       // (4/pi^2, 1/2)
    std::vector<std::pair<double, double>> extra_fixings;  // (sigma, value)

    static AhConstraintSet defaults();
};

// g_{1.5} >= 0.1 - 2 (0.3 - 3/pi^2) = 6/pi^2 - 1/2, with the intermediate
// 0.3 - 3/pi^2 ~ -0.0039635 exposed.
struct G15MinChain {
    double bound;          // 6/pi^2 - 1/2
    double intermediate;   // 0.3 - 3/pi^2
};
G15MinChain closed_bound_g15_min();

// g_{1.5} >= 0.1 + 2 (0.5 - g1 + 0.0039635), g1 in [4/pi^2, 1/2].
double closed_bound_g15_conditional(double g1);

// g_k <= (0.18951 - 2(0.5 - g1))/k as printed, plus the proof-chain variant
// with constant 0.1 + 1/pi^2 - 0.0118905 ~ 0.189431 (they differ by ~8e-5;
// the LP oracle arbitrates).
struct GkMaxBound {
    double printed;
    double exact_chain;
};
GkMaxBound closed_bound_gk_max(double k, double g1);

enum class LpSense { Min, Max };

struct LpResult {
    double value = 0.0;
    GapDensities witness;
    bool feasible = true;
    std::string certificate;  // violated constraint description when infeasible
};

// Exact extremization of g_target over the constraint polytope by vertex
// enumeration in 50-digit arithmetic (every constraint constant is affine in
// 1/pi^2, so this stays exact far beyond double precision).
LpResult lp_extremize(double target_sigma, LpSense sense, const AhConstraintSet& cs,
                      double K = 10.0);

// The AGUE reference densities as printed.
GapDensities agued_reference();

struct ConstraintResidual {
    std::string name;
    double residual;   // <= 0 means satisfied (with equality residual = |lhs-rhs|)
    bool satisfied;
};
std::vector<ConstraintResidual> check_densities(const GapDensities& g, const AhConstraintSet& cs,
                                                double tol);

}  // namespace zetagaps
