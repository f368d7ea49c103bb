#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetagaps/arithmetic.hpp"
#include "zetagaps/kernels.hpp"

namespace zetagaps {

struct MollifierSpec {
    CoeffSpec coeff;
    double alpha = 1.0;
    double d = 0.0;  // shift in units of 2 pi / log T
    KernelKind kind = KernelKind::C1;

    void validate() const;
};

enum class Method { ClosedForm, FiniteT };

struct MeasureReport {
    double value = 0.0;
    double abs_error = 0.0;
    Method method = Method::ClosedForm;
    std::optional<double> T_used;
    std::string note;  // e.g. dropped-pole warning for alpha >= 2
};

struct IntervalQuery {
    double a = 0.0;
    double b = 0.0;  // shift endpoints in average-gap units, a <= b
};

// Mollified expectation of the test function, closed form:
//
//             2r  /min(a,1) /1-u
//   E = ----------|        |     s(u) cos(2 pi d u) C_i(u/alpha) v^{r^2-1}
//       a B(r^2,  /0       /0         (1-v)^eta (1-u-v)^eta  dv du
//          2eta+1)
//
// with s(u) = +1 inside the Liouville window (beta1 < u <= beta2), -1 outside.
MeasureReport expectation_closed(const MollifierSpec& spec);

// Finite-T direct summation over prime powers:
//   num = -(2/(alpha log T)) sum_{mn < T0, n < T^alpha} a(mn) a(m) Lambda(n)/(mn)
//                                  W_i(n) cos(2 pi d log n/log T)
//   den = sum_{m < T0} a(m)^2/m
// W_1(n) = 1 - log n/(alpha log T);  W_2 adds sin(2 pi log n/(alpha log T))/(2 pi).
MeasureReport expectation_oracle(const MollifierSpec& spec, const SieveTable& sieve);

// Measure of the union of shifted windows (gamma~ + (a, b]), closed form:
//   (b - a) - (r/pi) I / B(r^2, 2 eta + 1)
//   I = int_0^1 int_0^{1-u} lam(u) (sin(2 pi b u) - sin(2 pi a u))/u
//                                 v^{r^2-1} (1-v)^eta (1-u-v)^eta dv du
MeasureReport interval_measure_closed(const CoeffSpec& coeff, const IntervalQuery& q);

// Finite-T counterpart over an explicit coefficient array a[1..N] (a[0] unused):
//   (b - a) - (1/pi) sum_{mp <= N, p prime} a(mp) a(m)/(mp)
//                 (sin(2 pi b log p/log T) - sin(2 pi a log p/log T)) / den
MeasureReport interval_measure_oracle(const std::vector<double>& a, double T,
                                      const IntervalQuery& q, const SieveTable& sieve);

// sum_{mp <= N} a(m) a(mp)/(mp) sin(pi log p/(2 log T)) / sum_{m <= N} a(m)^2/m
double mu_positive_eq5(const std::vector<double>& a, double T, const SieveTable& sieve);

}  // namespace zetagaps
