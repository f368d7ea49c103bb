#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetagaps/arithmetic.hpp"
#include "zetagaps/kernels.hpp"

namespace zetagaps {

struct ZeroList {
    std::vector<double> gammas;  // ordinates, strictly increasing, all > 0
    std::string source;
};

// Text format: one ordinate per line, '#' comments and blank lines skipped.
// Throws std::runtime_error naming the offending line on parse failure or
// ordering violation; empty files are an error too.
ZeroList parse_zeros(const std::string& path, std::int64_t start = 0, std::int64_t count = -1);

// Shortest-round-trip decimals, one per line; parse(serialize(parse(f)))
// reproduces the same doubles bit for bit.
void serialize_zeros(const ZeroList& zl, const std::string& path);

struct NormalizedGaps {
    std::vector<double> tilde;   // gamma/(2 pi) * log(gamma/(2 pi))
    std::vector<double> deltas;  // consecutive gaps of gamma/(2 pi) * (log(gamma/(2 pi)) - 1)
};

// Two rescalings: tilde is the bare one; deltas are differenced on the
// density-exact scale (mean gap -> 1), which is what the half-integer gap
// statistics are stated on.  Requires every gamma > 2 pi.
NormalizedGaps normalize(const ZeroList& zl);

struct CEvalResult {
    double value = 0.0;
    double tail_bound = 0.0;  // kernel-tail estimate for the omitted zeros
};

// Zero-side evaluation: -1/alpha + sum over |gamma - t| < window of
// Chat(kind, alpha (gamma - t) log T / (2 pi)).  The list must cover
// [t - window, t + window]; window must be >= 50 * 2 pi / log T.
CEvalResult c_from_zeros(double t, double alpha, double T, KernelKind kind,
                         const ZeroList& zl, double window);

// Prime-side evaluation of the same quantity through the explicit formula:
// -(2/(alpha log T)) sum_{n < T^alpha} Lambda(n) n^{-1/2} cos(t log n) W(u_n)
// plus the pole pair 2 Re[ T^{alpha(1/2 - it)} / ((1/2 - it)^2 alpha^2 log^2 T) ],
// W the kernel weight, u_n = log n / (alpha log T).
double c_from_primes(double t, double alpha, double T, KernelKind kind, const SieveTable& sieve);

// Histogram of deltas: bin lower edge -> relative frequency (sums to 1).
// bin_width must lie in [0.01, 0.5].
std::map<double, double> gap_histogram(const NormalizedGaps& ng, double bin_width);

}  // namespace zetagaps
