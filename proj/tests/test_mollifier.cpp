#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetagaps/mollifier.hpp"

using namespace zetagaps;

namespace {

constexpr double kPi = 3.14159265358979323846;

const SieveTable& S6() {
    static SieveTable s = build_sieve(1000000);
    return s;
}

MollifierSpec make_spec(KernelKind kind, double r, double alpha, double eta, double b1 = 0.0,
                        double b2 = 1.0, double d = 0.0) {
    MollifierSpec spec;
    spec.coeff.r = r;
    spec.coeff.eta = eta;
    spec.coeff.beta1 = b1;
    spec.coeff.beta2 = b2;
    spec.kind = kind;
    spec.alpha = alpha;
    spec.d = d;
    return spec;
}

}  // namespace

TEST_CASE("closed-form expectation: exact and reference values") {
    // r = 1, eta = 0 collapses to 2 int (1-u)^2 du = 2/3
    auto flat = expectation_closed(make_spec(KernelKind::C1, 1.0, 1.0, 0.0));
    CHECK(flat.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(flat.method == Method::ClosedForm);
    CHECK(flat.abs_error < 1e-8);

    auto c2 = expectation_closed(make_spec(KernelKind::C2, 1.8, 1.0, 0.4));
    CHECK(c2.value == doctest::Approx(0.8226914804726357).epsilon(2e-7));

    auto c1 = expectation_closed(make_spec(KernelKind::C1, 1.8, 1.0, 0.4));
    CHECK(c1.value == doctest::Approx(0.7409785106097699).epsilon(2e-7));

    auto mid = expectation_closed(make_spec(KernelKind::C1, 1.4, 1.0, 0.2));
    CHECK(mid.value == doctest::Approx(0.7289639514411198).epsilon(2e-7));
}

TEST_CASE("closed-form expectation: shift symmetry and window flip") {
    auto plus = expectation_closed(make_spec(KernelKind::C1, 1.4, 1.0, 0.2, 0.0, 1.0, 0.3));
    auto minus = expectation_closed(make_spec(KernelKind::C1, 1.4, 1.0, 0.2, 0.0, 1.0, -0.3));
    CHECK(plus.value == doctest::Approx(minus.value).epsilon(1e-12));

    // beta2 = beta1 empties the sign window: every u weighted -1, flipping the
    // integral relative to the full window
    auto full = expectation_closed(make_spec(KernelKind::C1, 1.0, 1.0, 0.0, 0.0, 1.0));
    auto empty = expectation_closed(make_spec(KernelKind::C1, 1.0, 1.0, 0.0, 0.5, 0.5));
    CHECK(empty.value == doctest::Approx(-full.value).epsilon(1e-9));
}

TEST_CASE("closed-form interval measure: reference values") {
    CoeffSpec plain;  // classical lambda coefficients
    auto half = interval_measure_closed(plain, {-0.25, 0.25});
    CHECK(half.value == doctest::Approx(0.9673695648912517).epsilon(2e-7));
    // small-window expansion 2c - 0.0276 pi^2 c^3 at c = 1/2
    const double cubic = 2.0 * 0.25 * 2.0 - 0.0276 * kPi * kPi * 0.125;
    CHECK(std::abs(half.value - cubic) < 2e-3);

    CoeffSpec shaped;
    shaped.r = 1.8;
    shaped.eta = 0.4;
    auto sh = interval_measure_closed(shaped, {-0.25, 0.25});
    CHECK(sh.value == doctest::Approx(0.9478741954208898).epsilon(2e-7));

    // widening the window past the half-gap threshold pushes the mass over 1
    auto wide = interval_measure_closed(plain, {-0.2596, 0.2596});
    CHECK(wide.value == doctest::Approx(1.0020031806).epsilon(1e-6));
    CHECK(wide.value > 1.0);
}

TEST_CASE("closed-form interval measure: degeneracy, additivity, reflection") {
    CoeffSpec plain;
    auto zero = interval_measure_closed(plain, {0.1, 0.1});
    CHECK(zero.value == doctest::Approx(0.0).epsilon(1e-12));

    auto whole = interval_measure_closed(plain, {-0.25, 0.25});
    auto left = interval_measure_closed(plain, {-0.25, 0.0});
    auto right = interval_measure_closed(plain, {0.0, 0.25});
    CHECK(whole.value == doctest::Approx(left.value + right.value).epsilon(1e-9));
    CHECK(left.value == doctest::Approx(right.value).epsilon(1e-11));
}

TEST_CASE("finite-T expectation tracks the closed form from below in T") {
    // cutoff raised to T itself: the polynomial sees the full prime range
    auto spec_flat = make_spec(KernelKind::C1, 1.0, 1.0, 0.0);
    auto spec_shaped = make_spec(KernelKind::C2, 1.8, 1.0, 0.4);
    const double closed_flat = 2.0 / 3.0;
    const double closed_shaped = 0.8226914804726357;

    SieveTable s4 = build_sieve(10000);
    spec_flat.coeff.T = 1e4;
    spec_flat.coeff.cutoff = 1e4;
    spec_shaped.coeff.T = 1e4;
    spec_shaped.coeff.cutoff = 1e4;
    auto flat4 = expectation_oracle(spec_flat, s4);
    auto shaped4 = expectation_oracle(spec_shaped, s4);
    CHECK(std::abs(flat4.value - closed_flat) == doctest::Approx(0.2202).epsilon(0.1));
    CHECK(std::abs(shaped4.value - closed_shaped) == doctest::Approx(0.3261).epsilon(0.1));

    SieveTable s5 = build_sieve(100000);
    spec_flat.coeff.T = 1e5;
    spec_flat.coeff.cutoff = 1e5;
    spec_shaped.coeff.T = 1e5;
    spec_shaped.coeff.cutoff = 1e5;
    auto flat5 = expectation_oracle(spec_flat, s5);
    auto shaped5 = expectation_oracle(spec_shaped, s5);
    CHECK(std::abs(flat5.value - closed_flat) == doctest::Approx(0.1922).epsilon(0.1));
    CHECK(std::abs(shaped5.value - closed_shaped) == doctest::Approx(0.2937).epsilon(0.1));

    CHECK(std::abs(flat5.value - closed_flat) < std::abs(flat4.value - closed_flat));
    CHECK(std::abs(shaped5.value - closed_shaped) < std::abs(shaped4.value - closed_shaped));
    CHECK(flat5.method == Method::FiniteT);
    CHECK(flat5.T_used.has_value());
}

TEST_CASE("explicit-coefficient interval oracle and the positive-part identity") {
    SieveTable s5 = build_sieve(100000);
    CoeffSpec plain;
    plain.T = 1e5;
    plain.cutoff = 1e5;
    auto a = coeff_table(100000, plain, s5);

    auto quarter = interval_measure_oracle(a, 1e5, {-0.25, 0.25}, s5);
    const double mu_pos = mu_positive_eq5(a, 1e5, s5);
    CHECK(mu_pos < -0.5);  // lambda coefficients push the positive part negative
    CHECK(std::abs(quarter.value - (0.5 - (2.0 / kPi) * mu_pos)) < 1e-12);

    // finite-T value sits near the closed form
    CoeffSpec plain_default;
    auto closed = interval_measure_closed(plain_default, {-0.25, 0.25});
    CHECK(std::abs(quarter.value - closed.value) < 0.12);
}

TEST_CASE("shaped-coefficient interval oracle at the half window") {
    CoeffSpec shaped;
    shaped.r = 1.8;
    shaped.eta = 0.4;
    shaped.T = 1e6;
    shaped.cutoff = 1e6;
    auto a = coeff_table(1000000, shaped, S6());
    auto half = interval_measure_oracle(a, 1e6, {-0.25, 0.25}, S6());
    // measured finite-T behavior; the closed form for this spec reads 0.94787
    CHECK(half.value == doctest::Approx(0.860808).epsilon(0.02));
}
