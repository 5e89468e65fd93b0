#pragma once

#include <complex>

#include "spindec/errors.hpp"

namespace spindec {

using complex = std::complex<double>;

// Model constants in one consistent unit system. pbar is a wavenumber
// (the initial packet carries a phase exp(i*pbar*x)).
struct PhysicalParams {
    double m = 1.0;        // mass
    double gamma = 1.0;    // friction rate, 1/time
    double D = 1.0;        // momentum diffusion coefficient
    double epsilon = 0.0;  // force coupling the spin to the packet
    double lambda = 0.0;   // internal-energy splitting
    double hbar = 1.0;     // action
    double sigma = 1.0;    // initial packet width
    double pbar = 0.0;     // initial mean wavenumber
};

// The dimensionless control groups; every formula downstream is evaluated in
// canonical units sigma = gamma = m = 1, so these are the whole state.
struct DimensionlessGroups {
    double eps_t = 0.0;  // epsilon / (m gamma^2 sigma)
    double d_t = 0.0;    // D / (m^2 gamma^3 sigma^2)
    double h_t = 1.0;    // hbar / (m gamma sigma^2)
    double p_t = 0.0;    // pbar * sigma
    double lam_t = 0.0;  // lambda / (hbar gamma)
};

enum class Spin { Up, Down };

// s = +1 for Up, -1 for Down.
inline int spin_sign(Spin s) { return s == Spin::Up ? +1 : -1; }

enum class SpinPair { UpUp, DownDown, UpDown, DownUp };

inline bool is_diagonal(SpinPair p) {
    return p == SpinPair::UpUp || p == SpinPair::DownDown;
}

// Diagonal blocks (s = s'): sign of the spin, +1 for UpUp.
inline int pair_zeta(SpinPair p) { return p == SpinPair::UpUp ? +1 : -1; }

// Off-diagonal blocks (s != s'): +1 for UpDown, -1 for DownUp.
inline int pair_eta(SpinPair p) { return p == SpinPair::UpDown ? +1 : -1; }

// Complex amplitudes of the measured spin. Construction accepts a norm
// deviation up to 1e-9 (the config-file tolerance) and renormalizes exactly,
// so stored states satisfy |a|^2+|b|^2 = 1 to machine precision.
struct SpinState {
    complex a{1.0, 0.0};
    complex b{0.0, 0.0};

    SpinState() = default;
    SpinState(complex a, complex b);
};

PhysicalParams make_params(double m, double gamma, double D, double epsilon,
                           double lambda, double hbar, double sigma, double pbar);

// D = 2 gamma m kT (fluctuation-dissipation form).
PhysicalParams params_from_temperature(double m, double gamma, double kT,
                                       double epsilon, double lambda, double hbar,
                                       double sigma, double pbar);

DimensionlessGroups to_dimensionless(const PhysicalParams& p);

// Inverse of to_dimensionless given the three scale-setting constants.
PhysicalParams from_dimensionless(const DimensionlessGroups& g, double sigma,
                                  double gamma, double m);

// Validates the group invariants (d_t >= 0, h_t > 0, all finite).
void validate_groups(const DimensionlessGroups& g);

}  // namespace spindec
