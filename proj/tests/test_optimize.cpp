#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "zetagaps/optimize.hpp"

using namespace zetagaps;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("configuration validation") {
    GapConfiguration ok{0.3, 0.6, 0.7, 0.8, 0.9};
    CHECK_NOTHROW(ok.validate());
    GapConfiguration at_zero{0.6, 0.6, 0.7, 0.8, 0.9};
    CHECK_NOTHROW(at_zero.validate());  // t = x marks the separating zero

    GapConfiguration bad = ok;
    bad.t = 0.0;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.t = 0.61;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.y = -0.1;
    CHECK_THROWS(bad.validate());
    bad = ok;
    bad.z = 0.4;  // below the minimum spacing
    CHECK_THROWS(bad.validate(true));
    CHECK_NOTHROW(bad.validate(false));
}

TEST_CASE("five-term objective wires the offsets correctly") {
    GapConfiguration cfg{0.2, 0.7, 0.8, 0.6, 0.9};
    const double expect = chat_eval(KernelKind::C2, 0.2) + chat_eval(KernelKind::C2, 0.5) +
                          chat_eval(KernelKind::C2, 1.3) + chat_eval(KernelKind::C2, 0.8) +
                          chat_eval(KernelKind::C2, 1.7);
    CHECK(corollary_objective(cfg) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("window-bound maximum at the reference threshold") {
    auto rep = corollary_max(1.181);
    CHECK(rep.value == doctest::Approx(0.8220788269954374).epsilon(1e-9));
    CHECK(std::abs(rep.value - 0.82207) < 1e-4);
    CHECK(rep.argmax.x == doctest::Approx(0.5905).epsilon(1e-9));
    CHECK(rep.argmax.y == doctest::Approx(rep.argmax.x).epsilon(1e-12));
    CHECK(rep.argmax.z == doctest::Approx(1.4095).epsilon(1e-9));
    CHECK(rep.argmax.w == doctest::Approx(rep.argmax.z).epsilon(1e-12));
    CHECK(std::abs(rep.argmax.x - 0.59049) < 1e-3);
    CHECK(std::abs(rep.argmax.z - 1.40916) < 1e-3);
    CHECK(rep.argmax.t == rep.argmax.x);
    CHECK(rep.certified_radius == doctest::Approx(0.02).epsilon(1e-12));

    // re-evaluation: the reported value is the clamped bound at the argmax
    const double recompute = 2.0 * std::max(0.0, chat_eval(KernelKind::C2, rep.argmax.x)) +
                             std::max(0.0, chat_eval(KernelKind::C2, rep.argmax.z + rep.argmax.x)) +
                             std::max(0.0, chat_eval(KernelKind::C2, rep.argmax.z + rep.argmax.w +
                                                                         rep.argmax.x));
    CHECK(std::abs(rep.value - recompute) < 1e-12);

    bool saw_pair_sum = false;
    for (const auto& c : rep.active_constraints)
        if (c.find("theta") != std::string::npos) saw_pair_sum = true;
    CHECK(saw_pair_sum);

    REQUIRE(rep.alternates.size() == 2);
    CHECK(rep.alternates[0].first == "sup_without_symmetry");
    CHECK(rep.alternates[0].second == doctest::Approx(0.8296688).epsilon(1e-4));
    CHECK(rep.alternates[1].first == "sup_unclamped_objective");
    CHECK(rep.alternates[1].second > rep.value);
    CHECK(rep.alternates[1].second < 3.0);
}

TEST_CASE("window-bound maximum: endpoints, monotonicity, variant agreement") {
    auto low = corollary_max(1.0);
    CHECK(low.value == doctest::Approx(32.0 / (3.0 * kPi * kPi)).epsilon(1e-9));

    double prev = 10.0;
    for (double theta : {1.0, 1.1, 1.181, 1.3, 1.5}) {
        const double v = corollary_max(theta).value;
        CHECK(v <= prev + 1e-12);
        prev = v;
    }

    auto a = corollary_max(1.25, ConstraintVariant::AsPrinted);
    auto b = corollary_max(1.25, ConstraintVariant::Symmetric);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));

    CHECK_THROWS(corollary_max(0.9));
    CHECK_THROWS(corollary_max(1.6));
}

TEST_CASE("threshold inversion") {
    const double th = threshold_search(0.8226);
    CHECK(th == doctest::Approx(1.18063).epsilon(1e-4));
    CHECK(std::abs(th - 1.181) < 2e-3);

    // smaller expectation target forces wider double gaps
    CHECK(threshold_search(0.70) > th);
    CHECK_THROWS(threshold_search(1.2));
}

TEST_CASE("square-root bound, first profile") {
    auto s = upp_bound_c1();
    CHECK(s.value == doctest::Approx(std::pow(2.0, -1.0 / 3.0)).epsilon(1e-9));
    CHECK(s.argmax == doctest::Approx(std::pow(4.0, -1.0 / 3.0)).epsilon(1e-6));
    CHECK(std::abs(s.value - 0.793701) < 1e-5);
    CHECK(std::abs(s.argmax - 0.629961) < 1e-5);
    CHECK(s.certified_radius < 1e-5);
}

TEST_CASE("tail energy integral and the second-profile bound") {
    CHECK(F_integral(0.0) ==
          doctest::Approx(1.0 / 3.0 + 5.0 / (8.0 * kPi * kPi)).epsilon(1e-12));
    CHECK(F_integral(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(F_integral(0.3) > F_integral(0.6));
    CHECK_THROWS(F_integral(-0.1));

    auto s = upp_bound_c2();
    CHECK(s.value == doctest::Approx(0.9015624724122296).epsilon(1e-7));
    CHECK(s.argmax == doctest::Approx(0.6193518020886366).epsilon(1e-6));
    CHECK(std::abs(s.value - 0.90156) < 1e-5);
    CHECK(std::abs(s.argmax - 0.619352) < 1e-4);
    CHECK(s.certified_radius < 1e-5);
}

TEST_CASE("parameter sweep is ranked and reproduces the single-point values") {
    auto rows = param_search({1.0, 1.8}, {0.0, 0.4}, {{0.0, 1.0}}, KernelKind::C2, 1.0);
    REQUIRE(rows.size() == 4);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i - 1].expectation >= rows[i].expectation);
    bool saw_shaped = false, saw_flat = false;
    for (const auto& row : rows) {
        CHECK(row.ok);
        if (row.r == 1.8 && row.eta == 0.4) {
            saw_shaped = true;
            CHECK(row.expectation == doctest::Approx(0.8226914804726357).epsilon(2e-7));
            CHECK(row.window_c_half == doctest::Approx(0.9478741954208898).epsilon(2e-7));
        }
        if (row.r == 1.0 && row.eta == 0.0) {
            saw_flat = true;
            CHECK(row.window_c_half == doctest::Approx(0.9673695648912517).epsilon(2e-7));
        }
    }
    CHECK(saw_shaped);
    CHECK(saw_flat);
}
