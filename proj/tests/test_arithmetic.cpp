#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "zetagaps/arithmetic.hpp"

using namespace zetagaps;

namespace {

const SieveTable& S() {
    static SieveTable s = build_sieve(1000000);
    return s;
}

// trial-division oracles, independent of the sieve
int omega_with_multiplicity(std::int64_t n) {
    int c = 0;
    for (std::int64_t p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            n /= p;
            ++c;
        }
    return n > 1 ? c + 1 : c;
}

double psi_oracle(std::int64_t x) {
    double out = 0.0;
    for (std::int64_t p = 2; p <= x; ++p) {
        if (omega_with_multiplicity(p) != 1) continue;
        for (std::int64_t q = p; q <= x; q *= p) out += std::log(static_cast<double>(p));
    }
    return out;
}

}  // namespace

TEST_CASE("prime-power log table and psi") {
    CHECK(S().mangoldt(1) == 0.0);
    CHECK(S().mangoldt(2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(S().mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(S().mangoldt(9) == doctest::Approx(std::log(3.0)).epsilon(1e-15));
    CHECK(S().mangoldt(6) == 0.0);
    CHECK(S().mangoldt(100) == 0.0);

    CHECK(S().is_prime(2));
    CHECK(S().is_prime(97));
    CHECK_FALSE(S().is_prime(1));
    CHECK_FALSE(S().is_prime(91));
    CHECK(S().smallest_prime_factor(91) == 7);
    CHECK(S().smallest_prime_factor(97) == 97);

    CHECK(S().chebyshev_psi(100) == doctest::Approx(94.045).epsilon(1e-5));
    CHECK(S().chebyshev_psi(100) == doctest::Approx(psi_oracle(100)).epsilon(1e-13));
    CHECK(S().chebyshev_psi(10000) == doctest::Approx(psi_oracle(10000)).epsilon(1e-13));

    CHECK_THROWS_AS(build_sieve(1), std::invalid_argument);
    CHECK_THROWS_AS(build_sieve(100000001), std::invalid_argument);
}

TEST_CASE("generalized divisor function") {
    for (double r : {0.7, 1.0, 1.4, 1.8, 2.0, 3.0}) {
        CHECK(divisor_r(1, r, S()) == 1.0);
        CHECK(divisor_r(2, r, S()) == doctest::Approx(r).epsilon(1e-14));
        CHECK(divisor_r(97, r, S()) == doctest::Approx(r).epsilon(1e-14));
    }
    CHECK(divisor_r(4, 1.8, S()) == doctest::Approx(2.52).epsilon(1e-13));
    CHECK(divisor_r(12, 1.4, S()) == doctest::Approx(2.352).epsilon(1e-13));
    for (std::int64_t n : {1, 2, 12, 360, 9973}) CHECK(divisor_r(n, 1.0, S()) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("divisor function is multiplicative and matches integer convolutions") {
    std::mt19937 rng(20260823);
    std::uniform_int_distribution<std::int64_t> pick(2, 900);
    int tried = 0;
    while (tried < 200) {
        const std::int64_t m = pick(rng), n = pick(rng);
        if (std::gcd(m, n) != 1) continue;
        ++tried;
        for (double r : {1.4, 1.8, 2.6}) {
            const double lhs = divisor_r(m * n, r, S());
            const double rhs = divisor_r(m, r, S()) * divisor_r(n, r, S());
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }

    // d_2 = number of divisors, d_3 = sum_{d | n} d_2(d), by direct convolution
    const int N = 10000;
    std::vector<int> d2(N + 1, 0), d3(N + 1, 0);
    for (int d = 1; d <= N; ++d)
        for (int n = d; n <= N; n += d) d2[n] += 1;
    for (int d = 1; d <= N; ++d)
        for (int n = d; n <= N; n += d) d3[n] += d2[d];
    for (int n = 1; n <= N; ++n) {
        CHECK(divisor_r(n, 1.0, S()) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(divisor_r(n, 2.0, S()) == doctest::Approx(d2[n]).epsilon(1e-12));
        CHECK(divisor_r(n, 3.0, S()) == doctest::Approx(d3[n]).epsilon(1e-12));
    }
}

TEST_CASE("sign window over the full prime range is the classical parity") {
    CoeffSpec spec;
    spec.beta1 = 0.0;
    spec.beta2 = 1.0;
    spec.T = 1e6;
    for (std::int64_t n = 1; n <= 100000; ++n) {
        const int expect = omega_with_multiplicity(n) % 2 == 0 ? 1 : -1;
        if (liouville_window(n, spec, S()) != expect) {
            REQUIRE(liouville_window(n, spec, S()) == expect);
        }
    }
}

TEST_CASE("sign window only sees primes inside the band") {
    CoeffSpec spec;
    spec.beta1 = 1.0 / 3.0;  // T^b1 = 100
    spec.beta2 = 2.0 / 3.0;  // T^b2 = 10000
    spec.T = 1e6;
    CHECK(liouville_window(97, spec, S()) == 1);      // below the band
    CHECK(liouville_window(101, spec, S()) == -1);    // inside
    CHECK(liouville_window(10007, spec, S()) == 1);   // above
    CHECK(liouville_window(101 * 101, spec, S()) == 1);
    CHECK(liouville_window(2 * 101, spec, S()) == -1);
    CHECK(liouville_window(2 * 3 * 5, spec, S()) == 1);
    CHECK(liouville_window(7 * 89 * 101, spec, S()) == -1);  // only 101 lands in the band
}

TEST_CASE("coefficient recipe: cutoff, taper, and size bound") {
    CoeffSpec plain;  // r = 1, eta = 0, full window: a(n) = classical lambda
    plain.T = 1e6;
    const double cut = plain.effective_cutoff();
    CHECK(cut == doctest::Approx(1e6 / std::pow(std::log(1e6), 2)).epsilon(1e-14));
    CHECK(coeff_a(2, plain, S()) == -1.0);
    CHECK(coeff_a(4, plain, S()) == 1.0);
    CHECK(coeff_a(30, plain, S()) == -1.0);
    CHECK(coeff_a(static_cast<std::int64_t>(cut) + 1, plain, S()) == 0.0);
    CHECK(coeff_a(1000000, plain, S()) == 0.0);

    CoeffSpec shaped;
    shaped.r = 1.8;
    shaped.eta = 0.4;
    shaped.beta1 = 0.2;
    shaped.beta2 = 0.8;
    shaped.T = 1e6;
    for (std::int64_t n = 1; n <= 3000; ++n) {
        const double a = coeff_a(n, shaped, S());
        CHECK(std::abs(a) <= divisor_r(n, shaped.r, S()) + 1e-12);
    }

    // at n = T the taper vanishes for eta > 0 and equals 1 for eta = 0
    CoeffSpec at_top = shaped;
    at_top.cutoff = 1e6;
    CHECK(coeff_a(1000000, at_top, S()) == 0.0);
    CoeffSpec at_top_flat = plain;
    at_top_flat.cutoff = 1e6;
    CHECK(std::abs(coeff_a(1000000, at_top_flat, S())) == 1.0);
}

TEST_CASE("bulk coefficient table matches the per-index recipe") {
    CoeffSpec shaped;
    shaped.r = 1.8;
    shaped.eta = 0.4;
    shaped.beta1 = 0.2;
    shaped.beta2 = 0.8;
    shaped.T = 1e6;
    auto table = coeff_table(6000, shaped, S());
    REQUIRE(table.size() == 6001);
    for (std::int64_t n = 1; n <= 6000; ++n)
        CHECK(table[static_cast<std::size_t>(n)] ==
              doctest::Approx(coeff_a(n, shaped, S())).epsilon(1e-13));

    CoeffSpec plain;
    plain.T = 1e6;
    plain.cutoff = 1e6;
    auto lam = coeff_table(5000, plain, S());
    for (std::int64_t n = 1; n <= 5000; ++n) {
        const int expect = omega_with_multiplicity(n) % 2 == 0 ? 1 : -1;
        CHECK(lam[static_cast<std::size_t>(n)] == expect);
    }
}

TEST_CASE("mean-square divisor sums and their log-power fit") {
    auto tiny = divisor_square_partial(2.0, 1.0, S());
    CHECK(tiny.sum == 1.0);

    auto harmonic = divisor_square_partial(1e6, 1.0, S());
    // sum_{m < 1e6} 1/m = log(1e6) + gamma + o(1)
    CHECK(harmonic.sum == doctest::Approx(std::log(1e6) + 0.57721566490153286).epsilon(2e-6));
    CHECK(harmonic.a_r_fit == doctest::Approx(harmonic.sum / std::log(1e6)).epsilon(1e-14));

    auto lo = divisor_square_partial(1e5, 1.8, S());
    auto hi = divisor_square_partial(1e6, 1.8, S());
    CHECK(std::abs(hi.a_r_fit / lo.a_r_fit - 1.0) < 0.10);
}

TEST_CASE("parameter validation") {
    CoeffSpec bad;
    bad.r = 0.0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = CoeffSpec{};
    bad.beta2 = 1.2;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = CoeffSpec{};
    bad.beta1 = 0.5;
    bad.beta2 = 0.3;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = CoeffSpec{};
    bad.cutoff = 2e6;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = CoeffSpec{};
    bad.eta = -0.1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    CHECK_THROWS_AS(coeff_a(0, CoeffSpec{}, S()), std::out_of_range);
}
