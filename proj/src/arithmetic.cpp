#include "zetagaps/arithmetic.hpp"

#include <cmath>
#include <stdexcept>

namespace zetagaps {

namespace {

// binom(r + k - 1, k) for real r > 0, the coefficient of the k-th prime power
// in the d_r Euler product
double dr_prime_power(double r, int k) {
    if (k == 0) return 1.0;
    if (k > 60) throw std::invalid_argument("prime-power exponent out of range");
    return std::exp(std::lgamma(r + k) - std::lgamma(r) - std::lgamma(static_cast<double>(k) + 1.0));
}

}  // namespace

SieveTable::SieveTable(std::int64_t limit) : limit_(limit) {
    if (limit < 2 || limit > 100000000) throw std::invalid_argument("sieve limit outside [2, 1e8]");
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (spf_[static_cast<std::size_t>(i)] != 0) continue;
        for (std::int64_t j = i; j <= limit; j += i)
            if (spf_[static_cast<std::size_t>(j)] == 0)
                spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
}

double SieveTable::mangoldt(std::int64_t n) const {
    if (n < 1 || n > limit_) throw std::out_of_range("mangoldt query beyond sieve limit");
    if (n < 2) return 0.0;
    const std::int64_t p = spf_[static_cast<std::size_t>(n)];
    std::int64_t m = n;
    while (m % p == 0) m /= p;
    return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

double SieveTable::chebyshev_psi(std::int64_t x) const {
    if (x > limit_) throw std::out_of_range("psi query beyond sieve limit");
    double psi = 0.0;
    for (std::int64_t p = 2; p <= x; ++p) {
        if (!is_prime(p)) continue;
        const double lp = std::log(static_cast<double>(p));
        for (std::int64_t q = p; q <= x; q *= p) {
            psi += lp;
            if (q > x / p) break;  // q * p would overflow past x anyway
        }
    }
    return psi;
}

SieveTable build_sieve(std::int64_t limit) { return SieveTable(limit); }

double CoeffSpec::effective_cutoff() const {
    if (cutoff > 0.0) return cutoff;
    const double lt = std::log(T);
    return T / (lt * lt);
}

void CoeffSpec::validate() const {
    if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
    if (!(eta >= 0.0)) throw std::invalid_argument("eta must be nonnegative");
    if (!(0.0 <= beta1 && beta1 <= beta2 && beta2 <= 1.0))
        throw std::invalid_argument("window must satisfy 0 <= beta1 <= beta2 <= 1");
    if (!(T > 10.0)) throw std::invalid_argument("T must exceed 10");
    if (cutoff < 0.0 || effective_cutoff() > T)
        throw std::invalid_argument("cutoff must lie in (0, T]");
}

double divisor_r(std::int64_t n, double r, const SieveTable& sieve) {
    if (n < 1 || n > sieve.limit()) throw std::out_of_range("divisor_r query beyond sieve limit");
    if (!(r > 0.0)) throw std::invalid_argument("r must be positive");
    double out = 1.0;
    std::int64_t m = n;
    while (m > 1) {
        const std::int64_t p = sieve.smallest_prime_factor(m);
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        out *= dr_prime_power(r, k);
    }
    return out;
}

int liouville_window(std::int64_t n, const CoeffSpec& spec, const SieveTable& sieve) {
    if (n < 1 || n > sieve.limit()) throw std::out_of_range("query beyond sieve limit");
    const double lt = std::log(spec.T);
    int count = 0;
    std::int64_t m = n;
    while (m > 1) {
        const std::int64_t p = sieve.smallest_prime_factor(m);
        const double lp = std::log(static_cast<double>(p));
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (lp > spec.beta1 * lt && lp <= spec.beta2 * lt) count += k;
    }
    return (count % 2 == 0) ? 1 : -1;
}

double coeff_a(std::int64_t n, const CoeffSpec& spec, const SieveTable& sieve) {
    spec.validate();
    if (n < 1) throw std::out_of_range("coefficient index must be >= 1");
    if (static_cast<double>(n) > spec.effective_cutoff()) return 0.0;
    double w = 1.0 - std::log(static_cast<double>(n)) / std::log(spec.T);
    if (w < 0.0) w = 0.0;  // n == T up to rounding
    return liouville_window(n, spec, sieve) * divisor_r(n, spec.r, sieve) * std::pow(w, spec.eta);
}

std::vector<double> coeff_table(std::int64_t N, const CoeffSpec& spec, const SieveTable& sieve) {
    spec.validate();
    if (N < 1 || N > sieve.limit()) throw std::out_of_range("table size beyond sieve limit");
    const double lt = std::log(spec.T);
    const double cut = spec.effective_cutoff();
    // multiplicative part first: m[n] = lambda_window(n) d_r(n)
    std::vector<double> out(static_cast<std::size_t>(N) + 1, 0.0);
    out[0] = 0.0;
    if (N >= 1) out[1] = 1.0;
    std::vector<double> dr_pow(61);
    for (int k = 0; k <= 60; ++k) dr_pow[static_cast<std::size_t>(k)] = dr_prime_power(spec.r, k);
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t p = sieve.smallest_prime_factor(n);
        std::int64_t m = n;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        const double lp = std::log(static_cast<double>(p));
        const bool in_window = lp > spec.beta1 * lt && lp <= spec.beta2 * lt;
        const double sign = (in_window && k % 2 == 1) ? -1.0 : 1.0;
        out[static_cast<std::size_t>(n)] =
            out[static_cast<std::size_t>(m)] * sign * dr_pow[static_cast<std::size_t>(k)];
    }
    for (std::int64_t n = 1; n <= N; ++n) {
        if (static_cast<double>(n) > cut) {
            out[static_cast<std::size_t>(n)] = 0.0;
            continue;
        }
        double w = 1.0 - std::log(static_cast<double>(n)) / lt;
        if (w < 0.0) w = 0.0;
        out[static_cast<std::size_t>(n)] *= std::pow(w, spec.eta);
    }
    return out;
}

DivisorSquarePartial divisor_square_partial(double x, double r, const SieveTable& sieve) {
    if (!(x >= 2.0)) throw std::invalid_argument("partial sum needs x >= 2");
    if (x > static_cast<double>(sieve.limit()) + 1.0)
        throw std::out_of_range("partial sum beyond sieve limit");
    const std::int64_t N = static_cast<std::int64_t>(std::ceil(x)) - 1;  // strict m < x
    std::vector<double> dr(static_cast<std::size_t>(N) + 1, 0.0);
    dr[1] = 1.0;
    for (std::int64_t n = 2; n <= N; ++n) {
        const std::int64_t p = sieve.smallest_prime_factor(n);
        std::int64_t m = n;
        int k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        dr[static_cast<std::size_t>(n)] = dr[static_cast<std::size_t>(m)] * dr_prime_power(r, k);
    }
    double sum = 0.0;
    for (std::int64_t n = N; n >= 1; --n) {  // small terms first
        const double d = dr[static_cast<std::size_t>(n)];
        sum += d * d / static_cast<double>(n);
    }
    DivisorSquarePartial out;
    out.sum = sum;
    out.a_r_fit = sum / std::pow(std::log(x), r * r);
    return out;
}

}  // namespace zetagaps
