#pragma once

#include <cstdint>

namespace zetagaps {

enum class KernelKind { C1, C2 };

// The two test-function profiles on [0, 1]:
//   C_1(u) = 1 - u
//   C_2(u) = 1 - u + sin(2 pi u)/(2 pi)
// Outside [0, 1] evaluation is a domain error (the profiles are defined with
// compact support; use chat_eval for the transform side).
double c_eval(KernelKind kind, double u);

// Fourier transforms of the even extensions u -> C(|u|):
//   Chat_1(v) = (sin(pi v)/(pi v))^2
//   Chat_2(v) = (sin(pi v)/(pi v))^2 / (1 - v^2)
// Chat_2 has removable singularities at v = +-1 (value 0, slope -1/2 in |v|),
// handled by a Taylor series switch for | |v| - 1 | < 1e-4.
double chat_eval(KernelKind kind, double v);

// | 2 int_0^1 C(u) cos(2 pi u v) du - Chat(v) |, the transform-pair residual.
double fourier_pair_check(KernelKind kind, double v);

struct LatticeSup {
    double value;       // -1/alpha + sum_{|k| <= n} (sin(x_k)/x_k)^2, x_k = k pi alpha/2 + d
    double tail_bound;  // 32/(pi^2 alpha^2 n), bounding the dropped |k| > n mass
};

// Half-integer lattice evaluation of C_{1,alpha}: under the alternative
// hypothesis the zero ordinates sit on a lattice of spacing corresponding to
// x_k = k pi alpha/2 + d.  Poisson summation gives value = 2/alpha - 1/alpha
// exactly when alpha <= 2 (so 1 at alpha = 1 for every shift d, 1/2 at alpha = 2).
LatticeSup ah_lattice_sup(double alpha, double d, std::int64_t n);

}  // namespace zetagaps
