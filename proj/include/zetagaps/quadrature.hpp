#pragma once

#include <functional>
#include <vector>

namespace zetagaps {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;   // accumulated G7/K15 discrepancy estimate
    int panels = 0;
    bool converged = true;
};

// Adaptive Gauss-Kronrod 7/15 over [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-10, int max_panels = 4000);

// Same, forcing panel boundaries at the given interior breakpoints.
QuadResult integrate_with_breaks(const std::function<double(double)>& f, double a, double b,
                                 const std::vector<double>& breaks, double tol = 1e-10,
                                 int max_panels = 4000);

// int_0^V f(v) dv where f ~ v^p near 0 and ~ (V-v)^q near V (p, q > -1).
// Split at V/2 with power substitutions v = (V/2) w^s, s = max(1, 1/(p+1))
// (mirrored with 1/(q+1) at the top) so the transformed integrand is smooth.
QuadResult integrate_power_endpoints(const std::function<double(double)>& f, double V,
                                     double p, double q, double tol = 1e-11);

struct Quad2dResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
};

// Double integral over the triangle { u_lo <= u <= u_hi, 0 <= v <= 1 - u } with
// v-endpoint power behavior v^p at 0 and (1-u-v)^q at the top.  u_breaks forces
// outer panel boundaries (e.g. at window-sign jumps).
Quad2dResult quad2d(const std::function<double(double, double)>& f, double u_lo, double u_hi,
                    double p, double q, double tol = 1e-9,
                    const std::vector<double>& u_breaks = {});

}  // namespace zetagaps
