#include "zetagaps/ledger.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zetagaps {

MeasureReport mu_around_zeros(const CoeffSpec& coeff, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("window half-width must be positive");
    MeasureReport out = interval_measure_closed(coeff, {-c, c});
    if (c > 0.25)
        out.note += std::string(out.note.empty() ? "" : "; ") +
                    "half-width > 1/4: neighboring windows may overlap, mass counts multiplicity";
    return out;
}

double mu_out(const CoeffSpec& coeff) { return 1.0 - mu_around_zeros(coeff, 0.25).value; }

std::pair<double, double> half_gap_mass_bounds(const CoeffSpec& coeff) {
    const double right = interval_measure_closed(coeff, {0.25, 0.5}).value;
    const double left = interval_measure_closed(coeff, {-0.5, -0.25}).value;
    const double hi = left + right;
    return {hi - mu_out(coeff), hi};
}

double after_half_gap_lower(const CoeffSpec& coeff) {
    const double e1 = interval_measure_closed(coeff, {0.0, 0.5}).value;
    const double e2 = interval_measure_closed(coeff, {0.5, 1.0}).value;
    return e1 + e2 - 1.0;
}

std::vector<std::pair<std::string, double>> isolated_half_gap_identity(const CoeffSpec& coeff) {
    const double e1 = interval_measure_closed(coeff, {0.5, 1.0}).value;
    const double e2 = interval_measure_closed(coeff, {-1.0, -0.5}).value;
    std::vector<std::pair<std::string, double>> out;
    out.emplace_back("mass_right_half_to_one", e1);
    out.emplace_back("mass_left_half_to_one", e2);
    out.emplace_back("overlap_lower_bound", e1 + e2 - 1.0);
    out.emplace_back("unknown_overlap_min", 0.0);
    out.emplace_back("unknown_overlap_max", std::min(e1, e2));
    return out;
}

LedgerReport ledger_report(const CoeffSpec& coeff) {
    LedgerReport out;
    MeasureReport base = mu_around_zeros(coeff, 0.25);
    out.mu_pm_c = base.value;
    out.mu_out = 1.0 - base.value;
    out.half_gap_bounds = half_gap_mass_bounds(coeff);
    out.after_half_gap_lower = after_half_gap_lower(coeff);
    out.isolated_identity_terms = isolated_half_gap_identity(coeff);
    out.note = base.note;
    return out;
}

}  // namespace zetagaps
