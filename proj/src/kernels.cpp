#include "zetagaps/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "zetagaps/quadrature.hpp"

namespace zetagaps {

namespace {

constexpr double kPi = 3.14159265358979323846;

double sinc_sq(double x) {
    if (std::abs(x) < 1e-8) {
        const double x2 = x * x;
        return 1.0 - x2 / 3.0;  // (sin x / x)^2 = 1 - x^2/3 + O(x^4)
    }
    const double s = std::sin(x) / x;
    return s * s;
}

}  // namespace

double c_eval(KernelKind kind, double u) {
    if (u < 0.0 || u > 1.0) throw std::domain_error("kernel argument outside [0, 1]");
    if (kind == KernelKind::C1) return 1.0 - u;
    return 1.0 - u + std::sin(2.0 * kPi * u) / (2.0 * kPi);
}

double chat_eval(KernelKind kind, double v) {
    const double base = sinc_sq(kPi * v);
    if (kind == KernelKind::C1) return base;
    const double av = std::abs(v);
    const double w = av - 1.0;
    if (std::abs(w) < 1e-4) {
        // expansion about the removable singularity at |v| = 1:
        //   Chat_2(1 + w) = -w/2 (1 - 5w/2 + (17/4 - pi^2/3) w^2 + (-49/8 + 5 pi^2/6) w^3 + ...)
        const double c2 = 17.0 / 4.0 - kPi * kPi / 3.0;
        const double c3 = -49.0 / 8.0 + 5.0 * kPi * kPi / 6.0;
        return -0.5 * w * (1.0 + w * (-2.5 + w * (c2 + w * c3)));
    }
    return base / (1.0 - v * v);
}

double fourier_pair_check(KernelKind kind, double v) {
    auto f = [&](double u) { return c_eval(kind, u) * std::cos(2.0 * kPi * u * v); };
    QuadResult r = integrate(f, 0.0, 1.0, 1e-12);
    return std::abs(2.0 * r.value - chat_eval(kind, v));
}

LatticeSup ah_lattice_sup(double alpha, double d, std::int64_t n) {
    if (!(alpha > 0.0)) throw std::domain_error("alpha must be positive");
    if (n < 1) throw std::domain_error("lattice truncation must be >= 1");
    const double step = kPi * alpha / 2.0;
    // symmetric accumulation, small |k| last, to keep the rounding error flat in n
    double sum = 0.0;
    for (std::int64_t k = n; k >= 1; --k) sum += sinc_sq(step * k + d) + sinc_sq(-step * k + d);
    sum += sinc_sq(d);
    LatticeSup out;
    out.value = -1.0 / alpha + sum;
    out.tail_bound = 32.0 / (kPi * kPi * alpha * alpha * static_cast<double>(n));
    return out;
}

}  // namespace zetagaps
