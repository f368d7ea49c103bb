#include "zetagaps/mollifier.hpp"

#include <cmath>
#include <stdexcept>

#include "zetagaps/quadrature.hpp"

namespace zetagaps {

namespace {

constexpr double kPi = 3.14159265358979323846;

double log_beta(double p, double q) {
    return std::lgamma(p) + std::lgamma(q) - std::lgamma(p + q);
}

// (sin(2 pi b u) - sin(2 pi a u)) / u, continuous at u = 0
double sin_diff_over_u(double a, double b, double u) {
    if (std::abs(u) < 1e-9) return 2.0 * kPi * (b - a);
    return (std::sin(2.0 * kPi * b * u) - std::sin(2.0 * kPi * a * u)) / u;
}

}  // namespace

void MollifierSpec::validate() const {
    coeff.validate();
    if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
}

MeasureReport expectation_closed(const MollifierSpec& spec) {
    spec.validate();
    const double r = spec.coeff.r;
    const double eta = spec.coeff.eta;
    const double b1 = spec.coeff.beta1;
    const double b2 = spec.coeff.beta2;
    const double r2 = r * r;
    const double U = std::min(spec.alpha, 1.0);
    auto f = [&](double u, double v) {
        const double s = (u > b1 && u <= b2) ? 1.0 : -1.0;
        return s * std::cos(2.0 * kPi * spec.d * u) * c_eval(spec.kind, u / spec.alpha) *
               std::pow(v, r2 - 1.0) * std::pow(1.0 - v, eta) * std::pow(1.0 - u - v, eta);
    };
    Quad2dResult q = quad2d(f, 0.0, U, r2 - 1.0, eta, 1e-10, {b1, b2});
    const double den = spec.alpha * std::exp(log_beta(r2, 2.0 * eta + 1.0));
    MeasureReport out;
    out.value = 2.0 * r * q.value / den;
    out.abs_error = 2.0 * r * q.error / den;
    out.method = Method::ClosedForm;
    if (!q.converged) out.note = "quadrature tolerance not met";
    if (spec.alpha >= 2.0)
        out.note += std::string(out.note.empty() ? "" : "; ") +
                    "alpha >= 2: second-order pole term omitted by the closed form";
    return out;
}

MeasureReport expectation_oracle(const MollifierSpec& spec, const SieveTable& sieve) {
    spec.validate();
    const double T = spec.coeff.T;
    const double logT = std::log(T);
    const double alpha = spec.alpha;
    const std::int64_t N =
        std::min(sieve.limit(), static_cast<std::int64_t>(spec.coeff.effective_cutoff()));
    const std::vector<double> a = coeff_table(N, spec.coeff, sieve);
    double den = 0.0;
    for (std::int64_t m = N; m >= 1; --m) {
        const double am = a[static_cast<std::size_t>(m)];
        den += am * am / static_cast<double>(m);
    }
    double num = 0.0;
    for (std::int64_t n = 2; n <= N; ++n) {
        const double lam = sieve.mangoldt(n);
        if (lam == 0.0) continue;
        const double un = std::log(static_cast<double>(n)) / (alpha * logT);
        if (un >= 1.0) continue;  // prime power outside the polynomial's support
        double w = 1.0 - un;
        if (spec.kind == KernelKind::C2) w += std::sin(2.0 * kPi * un) / (2.0 * kPi);
        double inner = 0.0;
        for (std::int64_t m = 1; m * n <= N; ++m)
            inner += a[static_cast<std::size_t>(m * n)] * a[static_cast<std::size_t>(m)] /
                     static_cast<double>(m * n);
        num += lam * w * std::cos(2.0 * kPi * spec.d * alpha * un) * inner;
    }
    MeasureReport out;
    out.value = -(2.0 / (alpha * logT)) * num / den;
    out.method = Method::FiniteT;
    out.T_used = T;
    out.note = "direct prime-power sum; truncation error not bounded";
    return out;
}

MeasureReport interval_measure_closed(const CoeffSpec& coeff, const IntervalQuery& q) {
    coeff.validate();
    if (!(q.a <= q.b)) throw std::invalid_argument("interval endpoints must satisfy a <= b");
    const double r = coeff.r;
    const double eta = coeff.eta;
    const double r2 = r * r;
    auto f = [&](double u, double v) {
        const double lam = (u > coeff.beta1 && u <= coeff.beta2) ? -1.0 : 1.0;
        return lam * sin_diff_over_u(q.a, q.b, u) * std::pow(v, r2 - 1.0) *
               std::pow(1.0 - v, eta) * std::pow(1.0 - u - v, eta);
    };
    Quad2dResult integ = quad2d(f, 0.0, 1.0, r2 - 1.0, eta, 1e-10, {coeff.beta1, coeff.beta2});
    const double beta = std::exp(log_beta(r2, 2.0 * eta + 1.0));
    MeasureReport out;
    out.value = (q.b - q.a) - (r / kPi) * integ.value / beta;
    out.abs_error = (r / kPi) * integ.error / beta;
    out.method = Method::ClosedForm;
    if (!integ.converged) out.note = "quadrature tolerance not met";
    if (q.b - q.a > 0.5)
        out.note += std::string(out.note.empty() ? "" : "; ") +
                    "window exceeds the minimum gap; shifted copies may overlap";
    return out;
}

MeasureReport interval_measure_oracle(const std::vector<double>& a, double T,
                                      const IntervalQuery& q, const SieveTable& sieve) {
    if (a.size() < 3) throw std::invalid_argument("coefficient array too short");
    if (!(q.a <= q.b)) throw std::invalid_argument("interval endpoints must satisfy a <= b");
    const std::int64_t N = static_cast<std::int64_t>(a.size()) - 1;
    if (N > sieve.limit()) throw std::out_of_range("coefficient array beyond sieve limit");
    const double logT = std::log(T);
    double den = 0.0;
    for (std::int64_t m = N; m >= 1; --m) {
        const double am = a[static_cast<std::size_t>(m)];
        den += am * am / static_cast<double>(m);
    }
    double s = 0.0;
    for (std::int64_t p = 2; p <= N; ++p) {
        if (!sieve.is_prime(p)) continue;
        double inner = 0.0;
        for (std::int64_t m = 1; m * p <= N; ++m)
            inner += a[static_cast<std::size_t>(m * p)] * a[static_cast<std::size_t>(m)] /
                     static_cast<double>(m * p);
        const double x = std::log(static_cast<double>(p)) / logT;
        s += inner * (std::sin(2.0 * kPi * q.b * x) - std::sin(2.0 * kPi * q.a * x));
    }
    MeasureReport out;
    out.value = (q.b - q.a) - (1.0 / kPi) * s / den;
    out.method = Method::FiniteT;
    out.T_used = T;
    out.note = "prime sum over explicit coefficients; truncation error not bounded";
    return out;
}

double mu_positive_eq5(const std::vector<double>& a, double T, const SieveTable& sieve) {
    if (a.size() < 3) throw std::invalid_argument("coefficient array too short");
    const std::int64_t N = static_cast<std::int64_t>(a.size()) - 1;
    if (N > sieve.limit()) throw std::out_of_range("coefficient array beyond sieve limit");
    const double logT = std::log(T);
    double den = 0.0;
    for (std::int64_t m = N; m >= 1; --m) {
        const double am = a[static_cast<std::size_t>(m)];
        den += am * am / static_cast<double>(m);
    }
    double s = 0.0;
    for (std::int64_t p = 2; p <= N; ++p) {
        if (!sieve.is_prime(p)) continue;
        double inner = 0.0;
        for (std::int64_t m = 1; m * p <= N; ++m)
            inner += a[static_cast<std::size_t>(m * p)] * a[static_cast<std::size_t>(m)] /
                     static_cast<double>(m * p);
        const double x = std::log(static_cast<double>(p)) / logT;
        s += inner * std::sin(0.5 * kPi * x);
    }
    return s / den;
}

}  // namespace zetagaps
