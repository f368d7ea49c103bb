#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zetagaps/ledger.hpp"

using namespace zetagaps;

namespace {
double dist_to_interval(double x, std::pair<double, double> iv) {
    if (x < iv.first) return iv.first - x;
    if (x > iv.second) return x - iv.second;
    return 0.0;
}
}  // namespace

TEST_CASE("quarter-window mass and its complement") {
    CoeffSpec plain;
    auto mu = mu_around_zeros(plain, 0.25);
    CHECK(mu.value == doctest::Approx(0.9673695648912517).epsilon(2e-7));
    CHECK(mu.note.empty());
    CHECK(mu_out(plain) == doctest::Approx(1.0 - mu.value).epsilon(1e-14));

    auto wide = mu_around_zeros(plain, 0.3);
    CHECK_FALSE(wide.note.empty());
    CHECK_THROWS(mu_around_zeros(plain, 0.0));
}

TEST_CASE("half-gap mass bracket") {
    CoeffSpec plain;
    auto [lo, hi] = half_gap_mass_bounds(plain);
    CHECK(lo == doctest::Approx(0.7736950099028163).epsilon(2e-7));
    CHECK(hi == doctest::Approx(0.8063254450115646).epsilon(2e-7));
    CHECK(lo < hi);

    // the bracket and its complement sit on the expected mass splits
    CHECK(dist_to_interval(0.77, {lo, hi}) < 0.03);
    CHECK(dist_to_interval(0.23, {1.0 - hi, 1.0 - lo}) < 0.03);

    // reconstruction: hi - lo is exactly the outside mass
    CHECK(hi - lo == doctest::Approx(mu_out(plain)).epsilon(1e-12));
}

TEST_CASE("mass beyond a half gap") {
    CoeffSpec plain;
    CHECK(after_half_gap_lower(plain) == doctest::Approx(0.45141166679014044).epsilon(2e-7));
}

TEST_CASE("isolated half-gap identity terms") {
    CoeffSpec plain;
    auto terms = isolated_half_gap_identity(plain);
    REQUIRE(terms.size() == 5);
    const double e1 = terms[0].second, e2 = terms[1].second;
    CHECK(e1 == doctest::Approx(0.5645642).epsilon(1e-5));
    CHECK(e1 == doctest::Approx(e2).epsilon(1e-10));  // reflection symmetry
    CHECK(terms[2].second == doctest::Approx(e1 + e2 - 1.0).epsilon(1e-14));
    CHECK(terms[2].second == doctest::Approx(0.1291283).epsilon(1e-4));
    CHECK(terms[3].second == 0.0);
    CHECK(terms[4].second == doctest::Approx(std::min(e1, e2)).epsilon(1e-14));
}

TEST_CASE("assembled report is consistent with its parts") {
    CoeffSpec plain;
    auto rep = ledger_report(plain);
    CHECK(rep.mu_pm_c == doctest::Approx(mu_around_zeros(plain, 0.25).value).epsilon(1e-13));
    CHECK(rep.mu_out == doctest::Approx(mu_out(plain)).epsilon(1e-13));
    CHECK(rep.half_gap_bounds.first == doctest::Approx(half_gap_mass_bounds(plain).first).epsilon(1e-13));
    CHECK(rep.after_half_gap_lower ==
          doctest::Approx(after_half_gap_lower(plain)).epsilon(1e-13));
    CHECK(rep.isolated_identity_terms.size() == 5);
}
