#include "zetagaps/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace zetagaps {

namespace {

// Gauss-Kronrod 7/15 nodes and weights on [-1, 1] (positive half; the rule is
// symmetric).  Even indices are Kronrod-only nodes, odd ones carry the
// embedded Gauss-7 rule, index 7 is the center.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, value, err;
};

struct PanelLess {
    bool operator()(const Panel& p, const Panel& q) const { return p.err < q.err; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    const double fc = f(mid);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double fsum = f(mid - dx) + f(mid + dx);
        resk += kWgk[j] * fsum;
        if (j % 2 == 1) resg += kWg[j / 2] * fsum;
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * half;
    p.err = std::abs((resk - resg) * half);
    return p;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b, double tol,
                     int max_panels) {
    QuadResult out;
    if (a == b) return out;
    if (a > b) {
        out = integrate(f, b, a, tol, max_panels);
        out.value = -out.value;
        return out;
    }
    std::priority_queue<Panel, std::vector<Panel>, PanelLess> heap;
    Panel root = gk15(f, a, b);
    double total = root.value;
    double toterr = root.err;
    heap.push(root);
    int panels = 1;
    while (toterr > tol * std::max(1.0, std::abs(total)) && panels < max_panels) {
        Panel worst = heap.top();
        heap.pop();
        total -= worst.value;
        toterr -= worst.err;
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) {  // interval exhausted at double precision
            total += worst.value;
            toterr += worst.err;
            break;
        }
        Panel left = gk15(f, worst.a, m);
        Panel right = gk15(f, m, worst.b);
        total += left.value + right.value;
        toterr += left.err + right.err;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    out.value = total;
    out.error = toterr;
    out.panels = panels;
    out.converged = toterr <= tol * std::max(1.0, std::abs(total));
    return out;
}

QuadResult integrate_with_breaks(const std::function<double(double)>& f, double a, double b,
                                 const std::vector<double>& breaks, double tol, int max_panels) {
    if (a > b) {
        QuadResult r = integrate_with_breaks(f, b, a, breaks, tol, max_panels);
        r.value = -r.value;
        return r;
    }
    std::vector<double> pts;
    pts.push_back(a);
    for (double c : breaks)
        if (c > a && c < b) pts.push_back(c);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    QuadResult out;
    const int pieces = static_cast<int>(pts.size()) - 1;
    for (int i = 0; i < pieces; ++i) {
        QuadResult piece =
            integrate(f, pts[i], pts[i + 1], tol / std::max(1, pieces), max_panels);
        out.value += piece.value;
        out.error += piece.error;
        out.panels += piece.panels;
        out.converged = out.converged && piece.converged;
    }
    return out;
}

QuadResult integrate_power_endpoints(const std::function<double(double)>& f, double V, double p,
                                     double q, double tol) {
    QuadResult out;
    if (V <= 0.0) return out;
    if (p <= -1.0 || q <= -1.0) throw std::invalid_argument("endpoint exponent must exceed -1");
    const double h = 0.5 * V;
    // lower half: v = h w^s, integrand h s w^{s-1} f(h w^s) is bounded at w = 0
    const double s0 = std::max(1.0, 1.0 / (p + 1.0));
    QuadResult lo = integrate(
        [&](double w) { return h * s0 * std::pow(w, s0 - 1.0) * f(h * std::pow(w, s0)); }, 0.0,
        1.0, 0.5 * tol);
    // upper half mirrored: v = V - h w^s
    const double s1 = std::max(1.0, 1.0 / (q + 1.0));
    QuadResult hi = integrate(
        [&](double w) { return h * s1 * std::pow(w, s1 - 1.0) * f(V - h * std::pow(w, s1)); },
        0.0, 1.0, 0.5 * tol);
    out.value = lo.value + hi.value;
    out.error = lo.error + hi.error;
    out.panels = lo.panels + hi.panels;
    out.converged = lo.converged && hi.converged;
    return out;
}

Quad2dResult quad2d(const std::function<double(double, double)>& f, double u_lo, double u_hi,
                    double p, double q, double tol, const std::vector<double>& u_breaks) {
    Quad2dResult out;
    if (u_hi <= u_lo) return out;
    const double inner_tol = std::max(1e-13, 1e-2 * tol);
    bool inner_ok = true;
    auto outer = [&](double u) {
        QuadResult inner =
            integrate_power_endpoints([&](double v) { return f(u, v); }, 1.0 - u, p, q, inner_tol);
        inner_ok = inner_ok && inner.converged;
        return inner.value;
    };
    QuadResult r = integrate_with_breaks(outer, u_lo, u_hi, u_breaks, tol);
    out.value = r.value;
    out.error = r.error;
    out.converged = r.converged && inner_ok;
    return out;
}

}  // namespace zetagaps
