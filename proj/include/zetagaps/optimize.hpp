#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetagaps/kernels.hpp"
#include "zetagaps/mollifier.hpp"

namespace zetagaps {

// Local picture around an evaluation point inside a gap: x is the gap holding
// the point at offset t, y the next gap to the right, z the previous gap and w
// the one before that.  t = x is allowed and marks evaluation at the zero
// separating x from y (the supremum of the window bound lives there).
struct GapConfiguration {
    double t = 0.0;
    double x = 0.0, y = 0.0, z = 0.0, w = 0.0;

    void validate(bool ah_constrained = true) const;
};

// Chat2(t) + Chat2(x-t) + Chat2(x+y-t) + Chat2(z+t) + Chat2(z+w+t)
double corollary_objective(const GapConfiguration& cfg);

enum class ConstraintVariant { AsPrinted, Symmetric };

struct OptimumReport {
    double value = 0.0;
    GapConfiguration argmax;
    std::vector<std::string> active_constraints;
    double certified_radius = 0.0;
    // side computations: the same search without the symmetric tie or with the
    // raw (unclamped) objective, reported for comparison
    std::vector<std::pair<std::string, double>> alternates;
};

// Maximum of the five-zero window bound at the separating zero, with the
// nonpositive kernel terms dropped (Chat2 < 0 beyond argument 1, so dropping
// them only raises the bound):
//
//   B(x,y,z,w) = [Chat2(x)]+ + [Chat2(y)]+ + [Chat2(z+x)]+ + [Chat2(z+w+x)]+
//
// over symmetric configurations x = y, z = w subject to x,y,z,w >= 1/2 and the
// double-gap sums >= theta (AsPrinted: {x+y, x+w, w+z}; Symmetric: {x+y, z+w}).
// Multistart ascent (>= 1e3 low-discrepancy starts) plus boundary enumeration,
// certified by a 1e-3 grid sweep with Lipschitz slack 4*5*step.  Ties along
// the flat z,w-plateau resolve to z + x = 2, the kernel's double zero.
OptimumReport corollary_max(double theta, ConstraintVariant variant = ConstraintVariant::AsPrinted);

// Smallest theta (to 1e-4, by bisection over [1.0, 1.5]) whose corollary_max
// value drops below E_target: the double-gap threshold forced by expectation
// E_target.
double threshold_search(double E_target, ConstraintVariant variant = ConstraintVariant::AsPrinted);

struct ScalarOptimum {
    double value = 0.0;
    double argmax = 0.0;
    std::vector<std::string> active_constraints;
    double certified_radius = 0.0;
};

// max over [0,1] of (2/sqrt(3)) sqrt(x - x^4); stationary point x* = 4^{-1/3}
// gives the certificate.
ScalarOptimum upp_bound_c1();

// F(x) = int_0^{1-x} (1 - u + sin(2 pi u)/(2 pi))^2 du
double F_integral(double x);

// max over [0,1] of 2 sqrt(x F(x)) by golden section + derivative sign check.
ScalarOptimum upp_bound_c2();

struct ParamRow {
    double r = 0.0, eta = 0.0, beta1 = 0.0, beta2 = 0.0;
    double expectation = 0.0;
    double window_c_half = 0.0;  // interval measure over (-1/4, 1/4)
    bool ok = true;
};

// Evaluates expectation_closed and the half-window measure over the cartesian
// grid; rows sorted by expectation descending (ties by parameter order).
std::vector<ParamRow> param_search(const std::vector<double>& rs, const std::vector<double>& etas,
                                   const std::vector<std::pair<double, double>>& betas,
                                   KernelKind kind, double alpha);

}  // namespace zetagaps
