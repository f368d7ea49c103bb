#pragma once

#include <string>
#include <utility>
#include <vector>

#include "zetagaps/arithmetic.hpp"
#include "zetagaps/mollifier.hpp"

namespace zetagaps {

// Derived measure quantities around normalized zeros, all affine combinations
// of interval_measure_closed values.
struct LedgerReport {
    double mu_pm_c = 0.0;                 // mass of (gamma~ - c, gamma~ + c)
    double mu_out = 0.0;                  // 1 - mu_pm_{0.25}
    std::pair<double, double> half_gap_bounds{0.0, 0.0};
    double after_half_gap_lower = 0.0;
    std::vector<std::pair<std::string, double>> isolated_identity_terms;
    std::string note;
};

// interval_measure_closed(coeff, (-c, c)).  For c > 0.25 the shifted windows
// can overlap under the minimum-gap-1/2 hypothesis; a multiplicity warning is
// attached instead of clamping.
MeasureReport mu_around_zeros(const CoeffSpec& coeff, double c);

double mu_out(const CoeffSpec& coeff);

// hi = mu( union gamma~ +- [0.25, 0.5] ),  lo = hi - mu_out: brackets the mass
// carried by gaps of length 1/2.
std::pair<double, double> half_gap_mass_bounds(const CoeffSpec& coeff);

// mu(E1) + mu(E2) - 1 with E1 = union gamma~ + (0, 0.5), E2 = gamma~ + (0.5, 1):
// inclusion-exclusion lower bound for half-gap-then-half-window mass.
double after_half_gap_lower(const CoeffSpec& coeff);

// |E1| + |E2| - 1 for E1 = gamma~ + (0.5, 1), E2 = gamma~ - (0.5, 1), plus the
// named unknown terms of the isolated-half-gap identity with their [0, min] bound.
std::vector<std::pair<std::string, double>> isolated_half_gap_identity(const CoeffSpec& coeff);

LedgerReport ledger_report(const CoeffSpec& coeff);

}  // namespace zetagaps
