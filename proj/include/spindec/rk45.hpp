#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "spindec/errors.hpp"

// Small adaptive embedded Runge-Kutta integrator (Dormand-Prince 5(4)) for
// the low-dimensional characteristic systems. Header-only and deterministic:
// fixed coefficients, no allocation on the hot path.

namespace spindec {

struct RkOptions {
    double rtol = 1e-10;
    double atol = 1e-14;
    std::size_t max_steps = 1000000;
};

// Integrates y' = deriv(t, y) from t0 to t1 (t1 >= t0). Calls
// observer(t, y) after the initial point and every accepted step when
// provided. Throws QuadratureNotConverged if the step count is exhausted or
// the step size underflows.
template <std::size_t N, class Deriv, class Observer>
std::array<double, N> rk45_integrate(Deriv&& deriv, std::array<double, N> y,
                                     double t0, double t1, const RkOptions& opt,
                                     Observer&& observer) {
    using State = std::array<double, N>;

    static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    static constexpr double a21 = 1.0 / 5;
    static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187,
                            a53 = 64448.0 / 6561, a54 = -212.0 / 729;
    static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33,
                            a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                            a65 = -5103.0 / 18656;
    static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                            b5 = -2187.0 / 6784, b6 = 11.0 / 84;
    static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                            e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    observer(t0, y);
    const double span = t1 - t0;
    if (span == 0.0) return y;

    double t = t0;
    double h = span / 100.0;
    const double hmin = span * 1e-14;
    State k1 = deriv(t, y);

    for (std::size_t step = 0; step < opt.max_steps; ++step) {
        if (t >= t1) return y;
        h = std::min(h, t1 - t);

        State yt;
        for (std::size_t i = 0; i < N; ++i) yt[i] = y[i] + h * a21 * k1[i];
        const State k2 = deriv(t + c2 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        const State k3 = deriv(t + c3 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        const State k4 = deriv(t + c4 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        const State k5 = deriv(t + c5 * h, yt);
        for (std::size_t i = 0; i < N; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                a64 * k4[i] + a65 * k5[i]);
        const State k6 = deriv(t + h, yt);
        State ynew;
        for (std::size_t i = 0; i < N; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] +
                                  b6 * k6[i]);
        const State k7 = deriv(t + h, ynew);  // FSAL

        double errnorm = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] +
                                    e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
            const double scale =
                opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            errnorm += (err / scale) * (err / scale);
        }
        errnorm = std::sqrt(errnorm / static_cast<double>(N));

        if (errnorm <= 1.0) {
            t += h;
            y = ynew;
            k1 = k7;
            observer(t, y);
            if (t >= t1) return y;
        }
        const double factor =
            errnorm == 0.0 ? 5.0
                           : std::clamp(0.9 * std::pow(errnorm, -0.2), 0.2, 5.0);
        h *= factor;
        if (h < hmin)
            throw QuadratureNotConverged("step size underflow at t = " +
                                         std::to_string(t));
    }
    throw QuadratureNotConverged("step budget exhausted");
}

template <std::size_t N, class Deriv>
std::array<double, N> rk45_integrate(Deriv&& deriv, std::array<double, N> y,
                                     double t0, double t1, const RkOptions& opt) {
    return rk45_integrate<N>(static_cast<Deriv&&>(deriv), y, t0, t1, opt,
                             [](double, const std::array<double, N>&) {});
}

}  // namespace spindec
