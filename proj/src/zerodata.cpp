#include "zetagaps/zerodata.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace zetagaps {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 2.0 * kPi;

}  // namespace

ZeroList parse_zeros(const std::string& path, std::int64_t start, std::int64_t count) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open zero file: " + path);
    ZeroList out;
    out.source = path;
    std::string line;
    std::int64_t lineno = 0;
    std::int64_t prev_line = 0;
    double prev = 0.0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos || line[b] == '#') continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        const char* first = line.data() + b;
        const char* last = line.data() + e + 1;
        double v = 0.0;
        auto res = std::from_chars(first, last, v);
        if (res.ec != std::errc{} || res.ptr != last) {
            std::ostringstream msg;
            msg << path << ": unparsable ordinate at line " << lineno;
            throw std::runtime_error(msg.str());
        }
        if (!out.gammas.empty() && v <= prev) {
            std::ostringstream msg;
            msg << path << ": ordinates not strictly increasing at line " << lineno
                << " (previous at line " << prev_line << ")";
            throw std::runtime_error(msg.str());
        }
        out.gammas.push_back(v);
        prev = v;
        prev_line = lineno;
    }
    if (out.gammas.empty()) throw std::runtime_error("no ordinates in zero file: " + path);
    if (start < 0 || start >= static_cast<std::int64_t>(out.gammas.size()))
        throw std::invalid_argument("slice start outside the dataset");
    if (start > 0 || count >= 0) {
        const std::int64_t avail = static_cast<std::int64_t>(out.gammas.size()) - start;
        const std::int64_t take = count < 0 ? avail : std::min(count, avail);
        if (take <= 0) throw std::invalid_argument("empty slice of zero file");
        std::vector<double> sliced(out.gammas.begin() + start, out.gammas.begin() + start + take);
        out.gammas = std::move(sliced);
    }
    return out;
}

void serialize_zeros(const ZeroList& zl, const std::string& path) {
    std::ofstream outf(path);
    if (!outf) throw std::runtime_error("cannot open output file: " + path);
    char buf[64];
    for (double g : zl.gammas) {
        auto res = std::to_chars(buf, buf + sizeof(buf), g);
        outf.write(buf, res.ptr - buf);
        outf.put('\n');
    }
    if (!outf) throw std::runtime_error("failed writing zero file: " + path);
}

NormalizedGaps normalize(const ZeroList& zl) {
    NormalizedGaps out;
    out.tilde.reserve(zl.gammas.size());
    std::vector<double> unit;  // density-exact rescaling, mean gap 1
    unit.reserve(zl.gammas.size());
    for (double g : zl.gammas) {
        if (!(g > kTwoPi)) throw std::domain_error("ordinate must exceed 2 pi for normalization");
        const double x = g / kTwoPi;
        const double lx = std::log(x);
        out.tilde.push_back(x * lx);
        unit.push_back(x * (lx - 1.0));
    }
    out.deltas.reserve(unit.size() > 0 ? unit.size() - 1 : 0);
    for (std::size_t i = 1; i < unit.size(); ++i) out.deltas.push_back(unit[i] - unit[i - 1]);
    return out;
}

CEvalResult c_from_zeros(double t, double alpha, double T, KernelKind kind, const ZeroList& zl,
                         double window) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(T > 10.0)) throw std::invalid_argument("T must exceed 10");
    const double logT = std::log(T);
    if (!(window >= 50.0 * kTwoPi / logT))
        throw std::invalid_argument("window must span at least 50 * 2 pi / log T");
    if (zl.gammas.empty() || zl.gammas.front() > t - window || zl.gammas.back() < t + window)
        throw std::runtime_error("zero list does not cover the requested window");
    const double scale = alpha * logT / kTwoPi;
    auto lo = std::lower_bound(zl.gammas.begin(), zl.gammas.end(), t - window);
    auto hi = std::upper_bound(zl.gammas.begin(), zl.gammas.end(), t + window);
    double sum = 0.0;
    for (auto it = lo; it != hi; ++it) {
        if (std::abs(*it - t) >= window) continue;
        sum += chat_eval(kind, scale * (*it - t));
    }
    CEvalResult out;
    out.value = -1.0 / alpha + sum;
    // beyond V = scale * window both kernels obey |Chat| <= 1/(pi v)^2; the
    // local zero density per unit v is log(t/2pi)/(alpha log T)
    const double V = scale * window;
    const double rho = std::log(std::max(t, 20.0) / kTwoPi) / (alpha * logT);
    out.tail_bound = 2.0 * rho / (kPi * kPi * V);
    return out;
}

double c_from_primes(double t, double alpha, double T, KernelKind kind, const SieveTable& sieve) {
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
    if (!(T > 10.0)) throw std::invalid_argument("T must exceed 10");
    const double logT = std::log(T);
    const double reach = std::pow(T, alpha);
    if (reach > static_cast<double>(sieve.limit()) + 1.0)
        throw std::out_of_range("T^alpha exceeds the sieve limit");
    const std::int64_t N = static_cast<std::int64_t>(std::ceil(reach)) - 1;
    double sum = 0.0;
    for (std::int64_t n = 2; n <= N; ++n) {
        const double lam = sieve.mangoldt(n);
        if (lam == 0.0) continue;
        const double un = std::log(static_cast<double>(n)) / (alpha * logT);
        if (un >= 1.0) continue;
        double w = 1.0 - un;
        if (kind == KernelKind::C2) w += std::sin(kTwoPi * un) / kTwoPi;
        sum += lam / std::sqrt(static_cast<double>(n)) *
               std::cos(t * std::log(static_cast<double>(n))) * w;
    }
    const std::complex<double> s_half(0.5, -t);
    const std::complex<double> pole =
        std::exp(alpha * logT * s_half) / (s_half * s_half * alpha * alpha * logT * logT);
    return -(2.0 / (alpha * logT)) * sum + 2.0 * pole.real();
}

std::map<double, double> gap_histogram(const NormalizedGaps& ng, double bin_width) {
    if (!(bin_width >= 0.01 && bin_width <= 0.5))
        throw std::invalid_argument("bin width must lie in [0.01, 0.5]");
    if (ng.deltas.empty()) throw std::invalid_argument("no gaps to bin");
    std::map<std::int64_t, std::int64_t> counts;
    for (double d : ng.deltas) counts[static_cast<std::int64_t>(std::floor(d / bin_width))] += 1;
    std::map<double, double> out;
    const double total = static_cast<double>(ng.deltas.size());
    for (const auto& [idx, c] : counts)
        out[static_cast<double>(idx) * bin_width] = static_cast<double>(c) / total;
    return out;
}

}  // namespace zetagaps
