#include <algorithm>
#include <cmath>

#include "spindec/analytic.hpp"
#include "spindec/oracles.hpp"

// Characteristic-quadrature oracle. All systems are integrated in the
// backward variable th = tau - s from the query point (th = 0) to the foot
// (th = tau); the source integral is accumulated along the same pass, which
// keeps a pointwise query grid-free.

namespace spindec {

namespace {

constexpr complex I{0.0, 1.0};

void require_time(double tau) {
    if (!(tau >= 0.0)) throw NonNegativeTimeRequired();
}

double rel_drift(double value, double reference) {
    const double scale = std::max(std::abs(reference), 1.0);
    return std::abs(value - reference) / scale;
}

}  // namespace

CharacteristicPath trace_characteristic_d(double Q, double r, double tau,
                                          const DimensionlessGroups& g) {
    require_time(tau);
    CharacteristicPath path;
    path.Q = Q;
    path.r = r;
    path.tau = tau;
    path.I1 = Q;
    path.I2 = std::exp(-tau) * (r - g.h_t * Q);  // evaluated at s = tau

    const double rq = g.h_t * Q;
    auto deriv = [rq](double, const std::array<double, 1>& y) {
        return std::array<double, 1>{-(y[0] - rq)};
    };
    std::vector<std::array<double, 3>> rev;
    rk45_integrate<1>(deriv, {r}, 0.0, tau, RkOptions{},
                      [&](double th, const std::array<double, 1>& y) {
                          rev.push_back({tau - th, Q, y[0]});
                      });
    std::reverse(rev.begin(), rev.end());
    path.samples = std::move(rev);

    for (const auto& smp : path.samples) {
        const double i2 = std::exp(-smp[0]) * (smp[2] - rq);
        path.I1_drift = std::max(path.I1_drift, rel_drift(smp[1], path.I1));
        path.I2_drift = std::max(path.I2_drift, rel_drift(i2, path.I2));
    }
    return path;
}

CharacteristicPath trace_characteristic_od(double Q, double r, double tau,
                                           SpinPair pair,
                                           const DimensionlessGroups& g) {
    require_time(tau);
    if (is_diagonal(pair)) throw DiagonalPairRejected();
    const double eta = pair_eta(pair);
    const double vq = eta * 2.0 * g.eps_t / g.h_t;  // dQ/dth along the backward trace

    CharacteristicPath path;
    path.Q = Q;
    path.r = r;
    path.tau = tau;
    path.I1 = g.h_t * Q + eta * 2.0 * g.eps_t * tau;
    path.I2 = std::exp(-tau) * (r - g.h_t * Q + eta * 2.0 * g.eps_t);

    auto deriv = [vq, &g](double, const std::array<double, 2>& y) {
        return std::array<double, 2>{vq, -(y[1] - g.h_t * y[0])};
    };
    std::vector<std::array<double, 3>> rev;
    rk45_integrate<2>(deriv, {Q, r}, 0.0, tau, RkOptions{},
                      [&](double th, const std::array<double, 2>& y) {
                          rev.push_back({tau - th, y[0], y[1]});
                      });
    std::reverse(rev.begin(), rev.end());
    path.samples = std::move(rev);

    for (const auto& smp : path.samples) {
        const double i1 = g.h_t * smp[1] + eta * 2.0 * g.eps_t * smp[0];
        const double i2 =
            std::exp(-smp[0]) * (smp[2] - g.h_t * smp[1] + eta * 2.0 * g.eps_t);
        path.I1_drift = std::max(path.I1_drift, rel_drift(i1, path.I1));
        path.I2_drift = std::max(path.I2_drift, rel_drift(i2, path.I2));
    }
    return path;
}

complex oracle_rho_d(double Q, double r, double tau, Spin s,
                     const DimensionlessGroups& g, const RkOptions& opt) {
    require_time(tau);
    const double zeta = spin_sign(s);
    const double rq = g.h_t * Q;
    const double damp = g.d_t / (4.0 * g.h_t * g.h_t);
    const double drive = zeta * g.eps_t / g.h_t;
    // State: (r, accumulated log-amplitude, accumulated phase).
    auto deriv = [&](double, const std::array<double, 3>& y) {
        return std::array<double, 3>{-(y[0] - rq), -damp * y[0] * y[0],
                                     drive * y[0]};
    };
    const auto y = rk45_integrate<3>(deriv, {r, 0.0, 0.0}, 0.0, tau, opt);
    return initial_state_qr(Q, y[0], g) * std::exp(complex{y[1], y[2]});
}

namespace {

// Shared backward integration for the off-diagonal block:
// returns (Q_foot, r_foot, accumulated log-amplitude).
std::array<double, 3> od_backward(double Q, double r, double tau, int eta,
                                  const DimensionlessGroups& g,
                                  const RkOptions& opt) {
    const double vq = eta * 2.0 * g.eps_t / g.h_t;
    const double damp = g.d_t / (4.0 * g.h_t * g.h_t);
    auto deriv = [&](double, const std::array<double, 3>& y) {
        return std::array<double, 3>{vq, -(y[1] - g.h_t * y[0]),
                                     -damp * y[1] * y[1]};
    };
    return rk45_integrate<3>(deriv, {Q, r, 0.0}, 0.0, tau, opt);
}

}  // namespace

complex oracle_rho_od(double Q, double r, double tau, SpinPair pair,
                      const DimensionlessGroups& g, const RkOptions& opt) {
    require_time(tau);
    if (is_diagonal(pair)) throw DiagonalPairRejected();
    const int eta = pair_eta(pair);
    const auto y = od_backward(Q, r, tau, eta, g, opt);
    const complex phase =
        std::exp(2.0 * I * static_cast<double>(eta) * g.lam_t * tau);
    return initial_state_qr(y[0], y[1], g) * std::exp(y[2]) * phase;
}

double oracle_neg_log_abs_rho_od(double Q, double r, double tau, SpinPair pair,
                                 const DimensionlessGroups& g,
                                 const RkOptions& opt) {
    require_time(tau);
    if (is_diagonal(pair)) throw DiagonalPairRejected();
    const auto y = od_backward(Q, r, tau, pair_eta(pair), g, opt);
    // -ln|rho0(Q_foot, r_foot)| - log-amplitude; the p_t phase drops out.
    return y[0] * y[0] / 4.0 + y[1] * y[1] / 4.0 - y[2];
}

}  // namespace spindec
