#include "spindec/analytic.hpp"

#include <cmath>
#include <numbers>

namespace spindec {

namespace {

constexpr complex I{0.0, 1.0};

void require_time(double tau) {
    if (!(tau >= 0.0)) throw NonNegativeTimeRequired();
}

// 2 tau - 3 + 4 e^{-tau} - e^{-2 tau}; the secular part of the diffusion
// integrals (grows linearly, vanishes at tau = 0 exactly).
double phi_secular(double tau, double em, double em2) {
    return 2.0 * tau - 3.0 + 4.0 * em - em2;
}

struct TauFactors {
    double em;   // e^{-tau}
    double em2;  // e^{-2 tau}
    double e1;   // 1 - e^{-tau}
    double e2;   // 1 - e^{-2 tau}
};

TauFactors tau_factors(double tau) {
    TauFactors f;
    f.em = std::exp(-tau);
    f.em2 = std::exp(-2.0 * tau);
    f.e1 = -std::expm1(-tau);
    f.e2 = -std::expm1(-2.0 * tau);
    return f;
}

}  // namespace

complex initial_state_qr(double Q, double r, const DimensionlessGroups& g) {
    return std::exp(I * g.p_t * r - r * r / 4.0 - Q * Q / 4.0);
}

complex rho_d_qr(double Q, double r, double tau, Spin s, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    const double zeta = spin_sign(s);
    const double h = g.h_t, d = g.d_t, e = g.eps_t, p = g.p_t;
    const double k = h * Q;           // relative-coordinate drift target
    const double rk = r - k;
    const double r0 = k + rk * f.em;  // foot of the characteristic
    const double damp =
        (d / (4.0 * h * h)) * (k * k * tau + 2.0 * k * rk * f.e1 + rk * rk * f.e2 / 2.0);
    const double drive = (e / h) * (k * tau + rk * f.e1);
    const complex X = I * p * r0 - r0 * r0 / 4.0 - Q * Q / 4.0 - damp + zeta * I * drive;
    return std::exp(X);
}

namespace {

// Shared real geometry of the off-diagonal exponent.
struct OdPieces {
    double r0;  // foot of the characteristic in r
    double Q0;  // foot in Q (constant-velocity drift)
    double J;   // accumulated diffusion integral
};

OdPieces od_pieces(double Q, double r, double tau, int eta,
                   const DimensionlessGroups& g, const TauFactors& f) {
    const double h = g.h_t, e = g.eps_t;
    const double al = 2.0 * e;
    const double k = h * Q;
    const double A = k - eta * al;
    const double B = r - k + eta * al;
    const double w = 1.0 - (1.0 + tau) * f.em;
    OdPieces o;
    o.Q0 = Q + eta * (al / h) * tau;
    o.r0 = A + B * f.em + eta * al * tau;
    o.J = A * A * tau + al * al * tau * tau * tau / 3.0 + eta * al * A * tau * tau +
          B * B * f.e2 / 2.0 + 2.0 * A * B * f.e1 + 2.0 * eta * al * B * w;
    return o;
}

}  // namespace

complex rho_od_qr(double Q, double r, double tau, SpinPair pair,
                  const DimensionlessGroups& g) {
    require_time(tau);
    if (is_diagonal(pair)) throw DiagonalPairRejected();
    const auto f = tau_factors(tau);
    const int eta = pair_eta(pair);
    const auto o = od_pieces(Q, r, tau, eta, g, f);
    const complex X = 2.0 * I * static_cast<double>(eta) * g.lam_t * tau +
                      I * g.p_t * o.r0 - o.r0 * o.r0 / 4.0 - o.Q0 * o.Q0 / 4.0 -
                      (g.d_t / (4.0 * g.h_t * g.h_t)) * o.J;
    return std::exp(X);
}

double neg_log_abs_rho_od_qr(double Q, double r, double tau, SpinPair pair,
                             const DimensionlessGroups& g) {
    require_time(tau);
    if (is_diagonal(pair)) throw DiagonalPairRejected();
    const auto f = tau_factors(tau);
    const auto o = od_pieces(Q, r, tau, pair_eta(pair), g, f);
    return o.r0 * o.r0 / 4.0 + o.Q0 * o.Q0 / 4.0 +
           (g.d_t / (4.0 * g.h_t * g.h_t)) * o.J;
}

double n_of_tau(double tau, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    return (g.d_t / (2.0 * g.h_t * g.h_t)) * f.e2 + f.em2;
}

double m_of_tau(double tau, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    return 1.0 + g.h_t * g.h_t * f.e1 * f.e1 +
           (g.d_t / 2.0) * phi_secular(tau, f.em, f.em2);
}

double momentum_center(double tau, Spin s, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    return g.p_t * f.em + spin_sign(s) * (g.eps_t / g.h_t) * f.e1;
}

double position_center(double tau, Spin s, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    return g.h_t * g.p_t * f.e1 + spin_sign(s) * g.eps_t * (tau - f.e1);
}

namespace {

// Coupling between R and r in the position representation.
double g1_coupling(const DimensionlessGroups& g, const TauFactors& f) {
    return f.em * f.e1 / 2.0 + (g.d_t / (4.0 * g.h_t * g.h_t)) * f.e1 * f.e1;
}

}  // namespace

double position_r2_coefficient(double tau, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    const double N = n_of_tau(tau, g);
    const double M = m_of_tau(tau, g);
    const double g1 = g1_coupling(g, f);
    return N / 4.0 - g.h_t * g.h_t * g1 * g1 / M;
}

complex rho_d_momentum(double Q, double q, double tau, Spin s,
                       const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    const double zeta = spin_sign(s);
    const double h = g.h_t, d = g.d_t, e = g.eps_t, p = g.p_t;
    const double k = h * Q;
    const double N = n_of_tau(tau, g);
    const double beta_i = momentum_center(tau, s, g);
    const double beta_r = k * f.em * f.e1 / 2.0 + (d * k / (4.0 * h * h)) * f.e1 * f.e1;
    const double C_Q = k * k * f.e1 * f.e1 / 4.0 + Q * Q / 4.0 +
                       (d * k * k / (8.0 * h * h)) * phi_secular(tau, f.em, f.em2);
    const double phase = -p * k * f.e1 - zeta * (e / h) * k * (tau - f.e1);
    const complex z = (q - beta_i) + I * beta_r;
    return 2.0 * std::sqrt(std::numbers::pi / N) *
           std::exp(-z * z / N - C_Q + I * phase);
}

complex rho_d_position(double R, double r, double tau, Spin s,
                       const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    const double h = g.h_t;
    const double N = n_of_tau(tau, g);
    const double M = m_of_tau(tau, g);
    const double g1 = g1_coupling(g, f);
    const double xc = position_center(tau, s, g);
    const double beta_i = momentum_center(tau, s, g);
    const double dR = R - xc;
    const complex X = -dR * dR / M + I * beta_i * r -
                      (N / 4.0 - h * h * g1 * g1 / M) * r * r +
                      2.0 * I * dR * h * g1 * r / M;
    return std::exp(X) / std::sqrt(std::numbers::pi * M);
}

double momentum_pdf(double u, double tau, Spin s, const DimensionlessGroups& g) {
    const double N = n_of_tau(tau, g);
    const double c = momentum_center(tau, s, g);
    return std::exp(-(u - c) * (u - c) / N) / std::sqrt(std::numbers::pi * N);
}

double position_pdf(double x, double tau, Spin s, const DimensionlessGroups& g) {
    const double M = m_of_tau(tau, g);
    const double c = position_center(tau, s, g);
    return std::exp(-(x - c) * (x - c) / M) / std::sqrt(std::numbers::pi * M);
}

double envelope_c3(const DimensionlessGroups& g) {
    return g.d_t * g.eps_t * g.eps_t / (3.0 * g.h_t * g.h_t);
}

double tau_spin(const DimensionlessGroups& g) {
    if (g.eps_t == 0.0) throw NoDecoherence("eps_t = 0: spin blocks never decay");
    if (g.d_t == 0.0) throw NoDecoherence("d_t = 0: no diffusive damping");
    return std::pow(envelope_c3(g), -1.0 / 3.0);
}

double tau_momentum(double Q, const DimensionlessGroups& g) {
    if (Q == 0.0) throw NoDecoherence("Q = 0: momentum diagonal is preserved");
    if (g.d_t == 0.0) throw NoDecoherence("d_t = 0: no diffusive damping");
    return 1.0 / (g.d_t * Q * Q);
}

complex quad_eval(const Quad2& f, double x1, double x2) {
    return std::exp(f.logpref - (f.a11 * x1 * x1 + f.a12 * x1 * x2 + f.a22 * x2 * x2 +
                                 f.b1 * x1 + f.b2 * x2 + f.c));
}

Quad2 block_quad_qr(BlockLabel block, double tau, const DimensionlessGroups& g) {
    require_time(tau);
    const auto f = tau_factors(tau);
    const double h = g.h_t, d = g.d_t, e = g.eps_t, p = g.p_t;
    Quad2 out;
    // The quadratic part is transport-driven and identical for every block.
    out.a11 = h * h * f.e1 * f.e1 / 4.0 + 0.25 +
              (d / 4.0) * (tau - 2.0 * f.e1 + f.e2 / 2.0);
    out.a12 = h * f.e1 * f.em / 2.0 + (d / (4.0 * h)) * f.e1 * f.e1;
    out.a22 = f.em * f.em / 4.0 + (d / (8.0 * h * h)) * f.e2;
    switch (block) {
        case BlockLabel::UpUp:
        case BlockLabel::DownDown: {
            const double zeta = block == BlockLabel::UpUp ? 1.0 : -1.0;
            out.b1 = -I * p * h * f.e1 - zeta * I * e * (tau - f.e1);
            out.b2 = -I * p * f.em - zeta * I * (e / h) * f.e1;
            out.c = 0.0;
            break;
        }
        case BlockLabel::UpDown:
        case BlockLabel::DownUp: {
            const double eta = block == BlockLabel::UpDown ? 1.0 : -1.0;
            const double al = 2.0 * e;
            const double w = 1.0 - (1.0 + tau) * f.em;
            const double sec = tau - 2.0 * f.e1 + f.e2 / 2.0;
            out.b1 = -I * p * h * f.e1 + h * f.e1 * eta * al * (tau - f.e1) / 2.0 +
                     eta * (al / h) * tau / 2.0 +
                     (d / (4.0 * h)) * eta * al * (tau * tau - 2.0 * w - 2.0 * sec);
            out.b2 = -I * p * f.em + f.em * eta * al * (tau - f.e1) / 2.0 +
                     (d / (4.0 * h * h)) * eta * al * (2.0 * w - f.e1 * f.e1);
            out.c = -2.0 * I * eta * g.lam_t * tau - I * p * eta * al * (tau - f.e1) +
                    al * al * (tau - f.e1) * (tau - f.e1) / 4.0 +
                    (al / h) * (al / h) * tau * tau / 4.0 +
                    (d / (4.0 * h * h)) * al * al *
                        (sec + tau * tau * tau / 3.0 - tau * tau + 2.0 * w);
            break;
        }
        case BlockLabel::Composite:
            throw InvalidValue("composite has no single quadratic form");
    }
    return out;
}

Quad2 quad_to_momentum(const Quad2& f) {
    const complex a = f.a22;
    Quad2 out;
    out.logpref = f.logpref + 0.5 * std::log(std::numbers::pi / a);
    out.a11 = f.a11 - f.a12 * f.a12 / (4.0 * a);
    out.a12 = I * f.a12 / (2.0 * a);
    out.a22 = 1.0 / (4.0 * a);
    out.b1 = -f.b1 + f.a12 * f.b2 / (2.0 * a);
    out.b2 = -I * f.b2 / (2.0 * a);
    out.c = f.c - f.b2 * f.b2 / (4.0 * a);
    return out;
}

Quad2 quad_to_position(const Quad2& f) {
    const complex a = f.a11;
    Quad2 out;
    out.logpref = f.logpref + 0.5 * std::log(std::numbers::pi / a) -
                  std::log(2.0 * std::numbers::pi);
    out.a11 = 1.0 / (4.0 * a);
    out.a12 = -I * f.a12 / (2.0 * a);
    out.a22 = f.a22 - f.a12 * f.a12 / (4.0 * a);
    out.b1 = -I * f.b1 / (2.0 * a);
    out.b2 = f.b2 - f.a12 * f.b1 / (2.0 * a);
    out.c = f.c - f.b1 * f.b1 / (4.0 * a);
    return out;
}

std::array<complex, 4> reduced_composite(Representation rep, double x1, double x2,
                                         double tau, const SpinState& state,
                                         const DimensionlessGroups& g) {
    require_time(tau);
    const double wu = std::norm(state.a);
    const double wd = std::norm(state.b);
    const complex wud = state.a * std::conj(state.b);
    const complex wdu = std::conj(state.a) * state.b;
    complex uu, dd, ud, du;
    switch (rep) {
        case Representation::QR:
            uu = rho_d_qr(x1, x2, tau, Spin::Up, g);
            dd = rho_d_qr(x1, x2, tau, Spin::Down, g);
            ud = rho_od_qr(x1, x2, tau, SpinPair::UpDown, g);
            du = rho_od_qr(x1, x2, tau, SpinPair::DownUp, g);
            break;
        case Representation::MOMENTUM:
            uu = rho_d_momentum(x1, x2, tau, Spin::Up, g);
            dd = rho_d_momentum(x1, x2, tau, Spin::Down, g);
            ud = quad_eval(quad_to_momentum(block_quad_qr(BlockLabel::UpDown, tau, g)),
                           x1, x2);
            du = quad_eval(quad_to_momentum(block_quad_qr(BlockLabel::DownUp, tau, g)),
                           x1, x2);
            break;
        case Representation::POSITION:
            uu = rho_d_position(x1, x2, tau, Spin::Up, g);
            dd = rho_d_position(x1, x2, tau, Spin::Down, g);
            ud = quad_eval(quad_to_position(block_quad_qr(BlockLabel::UpDown, tau, g)),
                           x1, x2);
            du = quad_eval(quad_to_position(block_quad_qr(BlockLabel::DownUp, tau, g)),
                           x1, x2);
            break;
    }
    return {wu * uu, wud * ud, wdu * du, wd * dd};
}

}  // namespace spindec
