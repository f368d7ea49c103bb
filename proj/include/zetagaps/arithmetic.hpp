#pragma once

#include <cstdint>
#include <vector>

namespace zetagaps {

// Eratosthenes-backed tables: von Mangoldt Lambda(n) and smallest prime factor.
// Immutable after construction; queries are pure.
class SieveTable {
  public:
    explicit SieveTable(std::int64_t limit);

    std::int64_t limit() const { return limit_; }
    // log p when n = p^k, else 0; reconstructed from the factor table so the
    // sieve stays 4 bytes per entry
    double mangoldt(std::int64_t n) const;
    std::int32_t smallest_prime_factor(std::int64_t n) const {
        return spf_[static_cast<std::size_t>(n)];
    }
    bool is_prime(std::int64_t n) const { return n >= 2 && spf_[static_cast<std::size_t>(n)] == n; }

    // psi(x) = sum_{n <= x} Lambda(n)
    double chebyshev_psi(std::int64_t x) const;

  private:
    std::int64_t limit_;
    std::vector<std::int32_t> spf_;
};

SieveTable build_sieve(std::int64_t limit);

// Dirichlet-polynomial coefficient recipe
//   a(n) = lambda_{beta1,beta2}(n) d_r(n) (1 - log n/log T)^eta,    n <= cutoff
// where lambda_{beta1,beta2} is completely multiplicative with value -1 exactly
// on primes in (T^beta1, T^beta2].
struct CoeffSpec {
    double r = 1.0;
    double eta = 0.0;
    double beta1 = 0.0;
    double beta2 = 1.0;
    double T = 1e6;
    double cutoff = 0.0;  // 0 -> default T/log^2 T

    double effective_cutoff() const;
    void validate() const;  // throws std::invalid_argument on violated bounds
};

// d_r(n): multiplicative with d_r(p^k) = binom(r+k-1, k), via log-gamma.
double divisor_r(std::int64_t n, double r, const SieveTable& sieve);

// (-1)^{#{prime factors of n with multiplicity in (T^b1, T^b2]}}
int liouville_window(std::int64_t n, const CoeffSpec& spec, const SieveTable& sieve);

double coeff_a(std::int64_t n, const CoeffSpec& spec, const SieveTable& sieve);

// Fills out[n] = coeff_a(n) for 1 <= n <= N via one multiplicative pass (much
// faster than per-n factorization when N ~ 1e6).
std::vector<double> coeff_table(std::int64_t N, const CoeffSpec& spec, const SieveTable& sieve);

struct DivisorSquarePartial {
    double sum;       // exact sum_{m < x} d_r(m)^2 / m
    double a_r_fit;   // sum / (log x)^{r^2}
};
DivisorSquarePartial divisor_square_partial(double x, double r, const SieveTable& sieve);

}  // namespace zetagaps
