#pragma once

#include <array>

#include "spindec/grid.hpp"
#include "spindec/params.hpp"

// Closed-form evaluators for the damped spin-measurement model, in canonical
// units sigma = gamma = m = 1 (tau is the scaled time, wavenumbers are in
// 1/sigma, lengths in sigma). All functions are pure.
//
// The three representations of a block:
//   QR:       rho(Q, r),  Q conjugate to the center coordinate R=(x+y)/2,
//             r = x - y the relative coordinate.
//   MOMENTUM: rho(Q, q) = Int dr e^{-i q r} rho_QR(-Q, r). The sign
//             conventions are fixed so the initial packet is centered at
//             +p_t; the raw transform integrates to 2*pi at Q=0 (the pdf
//             helpers are unit-normalized instead).
//   POSITION: rho(R, r) = (1/2 pi) Int dQ e^{-i Q R} rho_QR(Q, r).

namespace spindec {

// exp(i p_t r - r^2/4 - Q^2/4): the initial pure Gaussian packet after the
// partial Fourier transform in R. Shared by the analytic forms and by both
// numerical oracles (it is the only expression they share).
complex initial_state_qr(double Q, double r, const DimensionlessGroups& g);

// Spin-diagonal block rho_ss(Q, r, tau).
complex rho_d_qr(double Q, double r, double tau, Spin s, const DimensionlessGroups& g);

// Spin-off-diagonal block rho_ss'(Q, r, tau); carries the pure phase from
// lam_t. Throws DiagonalPairRejected for diagonal pairs.
complex rho_od_qr(double Q, double r, double tau, SpinPair pair,
                  const DimensionlessGroups& g);

// -ln|rho_od(Q, r, tau)|, assembled analytically in log domain: the modulus
// itself underflows (exponents beyond 1e3 occur in routine fit windows).
double neg_log_abs_rho_od_qr(double Q, double r, double tau, SpinPair pair,
                             const DimensionlessGroups& g);

// Momentum-space variance scale: N(tau) = (d_t/2 h_t^2)(1-e^{-2tau}) + e^{-2tau}.
double n_of_tau(double tau, const DimensionlessGroups& g);

// Position-space variance scale:
// M(tau) = 1 + h_t^2 (1-e^{-tau})^2 + (d_t/2)(2 tau - 3 + 4 e^{-tau} - e^{-2tau}).
double m_of_tau(double tau, const DimensionlessGroups& g);

// Center of the momentum distribution: p_t e^{-tau} +- (eps_t/h_t)(1-e^{-tau}).
double momentum_center(double tau, Spin s, const DimensionlessGroups& g);

// Center of the position distribution:
// h_t p_t (1-e^{-tau}) +- eps_t (tau - (1-e^{-tau})).
double position_center(double tau, Spin s, const DimensionlessGroups& g);

// Coefficient of r^2 in the position-representation exponent; tends to
// d_t/(8 h_t^2) as tau -> inf (finite asymptotic coherence length).
double position_r2_coefficient(double tau, const DimensionlessGroups& g);

// Diagonal block in the momentum representation (raw normalization,
// prefactor 2 sqrt(pi/N)).
complex rho_d_momentum(double Q, double q, double tau, Spin s,
                       const DimensionlessGroups& g);

// Diagonal block in the position representation.
complex rho_d_position(double R, double r, double tau, Spin s,
                       const DimensionlessGroups& g);

// Unit-normalized Gaussian pdfs (variance N/2 resp. M/2).
double momentum_pdf(double u, double tau, Spin s, const DimensionlessGroups& g);
double position_pdf(double x, double tau, Spin s, const DimensionlessGroups& g);

// Cubic coefficient of -ln|rho_od(0,0,tau)|: c3 = d_t eps_t^2 / (3 h_t^2).
double envelope_c3(const DimensionlessGroups& g);

// Spin decoherence scaled time c3^{-1/3}. Throws NoDecoherence when eps_t = 0
// or d_t = 0 (the cubic decay never develops).
double tau_spin(const DimensionlessGroups& g);

// Momentum decoherence scaled time 1/(d_t Q^2). Throws NoDecoherence when
// Q = 0 or d_t = 0.
double tau_momentum(double Q, const DimensionlessGroups& g);

// ----------------------------------------------------------------------------
// Every block is the exponential of a complex quadratic form in its two
// coordinates; representation changes are exact Gaussian integrals. This
// machinery drives the off-diagonal blocks of reduced_composite in momentum
// and position representations, and cross-checks the explicit forms above.

// value(x1, x2) = exp(logpref - (a11 x1^2 + a12 x1 x2 + a22 x2^2
//                                + b1 x1 + b2 x2 + c))
struct Quad2 {
    complex logpref{0.0, 0.0};
    complex a11, a12, a22, b1, b2, c;
};

complex quad_eval(const Quad2& f, double x1, double x2);

// Exact quadratic form of a (non-composite) block over (Q, r) at scaled time tau.
Quad2 block_quad_qr(BlockLabel block, double tau, const DimensionlessGroups& g);

// (Q, r) -> (Q, q): out(Q, q) = Int dr e^{-i q r} in(-Q, r).
Quad2 quad_to_momentum(const Quad2& f);

// (Q, r) -> (R, r): out(R, r) = (1/2 pi) Int dQ e^{-i Q R} in(Q, r).
Quad2 quad_to_position(const Quad2& f);

// 2x2 spin-block matrix of the composite state at one phase-space point:
// entries {uu, ud, du, dd} = {|a|^2 rho_uu, a b* rho_ud, a* b rho_du,
// |b|^2 rho_dd} in the requested representation. Exact for all tau.
std::array<complex, 4> reduced_composite(Representation rep, double x1, double x2,
                                         double tau, const SpinState& state,
                                         const DimensionlessGroups& g);

}  // namespace spindec
